"""Canonical forms and the catalog of realized preperiodic graphs.

canonical_code encodes an abstract functional digraph up to isomorphism:
each weakly-connected component is a cycle with trees hanging off it, so the
trees are AHU-encoded (children sorted), the cycle's sequence of tree codes
is rotated to its lexicographically minimal rotation, and the component
codes are sorted and joined.  Two graphs get the same code iff they are
isomorphic as directed graphs.

The builtin catalog holds the seventeen graphs realized over Q(i) or Q(w),
each regenerated from its witness (d, c) at first use and verified against
the expected vertex count.
"""

from __future__ import annotations

from functools import lru_cache

from .orbit import PreperGraph, build_graph, cycle_structure
from .quadfield import QuadElem, format_elem


def _ahu(vertex, children, memo) -> str:
    if vertex in memo:
        return memo[vertex]
    code = "(" + "".join(sorted(_ahu(ch, children, memo) for ch in children[vertex])) + ")"
    memo[vertex] = code
    return code


def _min_rotation(seq: list[str]) -> tuple[str, ...]:
    best = None
    for k in range(len(seq)):
        rot = tuple(seq[k:] + seq[:k])
        if best is None or rot < best:
            best = rot
    return best


def canonical_code(graph) -> str:
    """Label-free canonical encoding; equal codes iff isomorphic digraphs."""
    if isinstance(graph, PreperGraph):
        succ = graph.succ
    else:
        succ = dict(graph)
    vertices = set(succ)
    if any(succ[v] not in vertices for v in vertices):
        raise ValueError("not a functional graph: successor leaves the vertex set")

    # cycle detection on a functional graph
    on_cycle = set()
    color = {}
    for start in vertices:
        if start in color:
            continue
        path, cur = [], start
        while color.get(cur) is None:
            color[cur] = "active"
            path.append(cur)
            cur = succ[cur]
        if color.get(cur) == "active":
            cyc_start = path.index(cur)
            on_cycle.update(path[cyc_start:])
        for v in path:
            color[v] = "done"

    children = {v: [] for v in vertices}
    for v in vertices:
        if v not in on_cycle:
            children[succ[v]].append(v)

    memo = {}
    comp_codes = []
    seen = set()
    for v in sorted(on_cycle, key=id):
        if v in seen:
            continue
        cyc = [v]
        cur = succ[v]
        while cur != v:
            cyc.append(cur)
            cur = succ[cur]
        seen |= set(cyc)
        tree_seq = [_ahu(u, children, memo) for u in cyc]
        comp_codes.append("[" + "|".join(_min_rotation(tree_seq)) + "]")
    return "".join(sorted(comp_codes))


# --- the Appendix-B table of realized graphs --------------------------------
# label, witness d, witness c (text), expected vertex count
_TABLE = (
    ("0", -1, "2", 0),
    ("3(2)", -1, "-1", 3),
    ("4(1)", -3, "1/4", 4),
    ("4(1,1)", -1, "-6", 4),
    ("4(2)", -1, "-3", 4),
    ("5(1,1)a", -1, "-2", 5),
    ("5(1,1)b", -1, "0", 5),
    ("5(2)a", -1, "i", 5),
    ("6(1,1)", -1, "-10/9", 6),
    ("6(2)", -1, "-13/9", 6),
    ("6(2,1)", -1, "1/4", 6),
    ("6(3)", -1, "-301/144", 6),
    ("7(2,1,1)a", -3, "0", 7),
    ("8(2)a", -3, "-5/12", 8),
    ("8(2,1,1)", -1, "-21/16", 8),
    ("8(3)", -1, "-29/16", 8),
    ("10(2,1,1)a", -1, "-1/4 + 3/8*i", 10),
)


class CatalogEntry:
    __slots__ = ("label", "code", "witness")

    def __init__(self, label: str, code: str, witness: tuple):
        self.label = label
        self.code = code
        self.witness = witness  # (d, c as QuadElem)

    def __repr__(self):
        return f"CatalogEntry({self.label})"


def _entries_from_rows(rows) -> tuple[CatalogEntry, ...]:
    from .quadfield import parse_elem

    entries = []
    for label, d, c_text, expected in rows:
        c = parse_elem(c_text, d)
        graph = build_graph(c, d)
        if expected is not None and graph.size() != expected:
            raise RuntimeError(
                f"catalog integrity failure: witness {label} gave {graph.size()} vertices, "
                f"expected {expected}"
            )
        entries.append(CatalogEntry(label, canonical_code(graph), (d, c)))
    codes = [e.code for e in entries]
    if len(set(codes)) != len(codes):
        raise RuntimeError("catalog integrity failure: duplicate canonical codes")
    return tuple(entries)


@lru_cache(maxsize=1)
def builtin_catalog() -> tuple[CatalogEntry, ...]:
    """The seventeen realized graphs, regenerated from their witnesses."""
    return _entries_from_rows(_TABLE)


def load_catalog(path: str) -> tuple[CatalogEntry, ...]:
    """Catalog override: a JSON list of {label, d, c[, vertices]} witnesses."""
    import json

    with open(path) as fh:
        raw = json.load(fh)
    rows = [(row["label"], row["d"], row["c"], row.get("vertices")) for row in raw]
    return _entries_from_rows(rows)


def _structure_label(graph: PreperGraph) -> str:
    cycles = ",".join(str(n) for n in sorted(cycle_structure(graph), reverse=True))
    return f"{graph.size()}({cycles})"


def classify(graph: PreperGraph, catalog: tuple | None = None) -> str:
    """Catalog label of the graph, or a synthesized "N(l1,...)?" label.

    When the catalog already holds entries of the same shape (vertex count
    and cycle structure) under variant letters, the next free letter is used,
    e.g. a near-miss of 10(2,1,1)a comes out as "10(2,1,1)b?".
    """
    entries = builtin_catalog() if catalog is None else catalog
    code = canonical_code(graph)
    for entry in entries:
        if entry.code == code:
            return entry.label
    base = _structure_label(graph)
    taken = set()
    for entry in entries:
        if entry.label == base:
            taken.add("a")
        elif entry.label.startswith(base) and len(entry.label) == len(base) + 1:
            taken.add(entry.label[-1])
    if not taken:
        return base + "?"
    letter = next(ch for ch in "abcdefghij" if ch not in taken)
    return base + letter + "?"


def to_dot(graph: PreperGraph) -> str:
    """Deterministic DOT output; vertices sorted by (norm, trace, text)."""
    if not graph.vertices:
        return "digraph G {}"
    order = sorted(graph.vertices, key=lambda v: v.sort_key())
    lines = ["digraph G {"]
    for v in order:
        lines.append(f'    "{format_elem(v)}";')
    for v in order:
        lines.append(f'    "{format_elem(v)}" -> "{format_elem(graph.succ[v])}";')
    lines.append("}")
    return "\n".join(lines)
