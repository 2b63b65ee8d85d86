"""Command-line front end.

Subcommands:
  graph      build + classify the preperiodic graph of one parameter
  survey     sweep parameters of bounded height and histogram the labels
  dynatomic  print a (generalized) dynatomic polynomial
  curve      finite-field data for a registry curve
  chabauty   run the X0(5)/Q(i) certification pipeline

Exit codes: 0 = verified/classified, 1 = usage error, 2 = verification
mismatch.  Every subcommand takes --json; output is byte-deterministic for
a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .curves import WeierstrassCurve, get_curve
from .dynatomic import MAX_PERIOD, dn_rn, dynatomic, gen_dynatomic
from .graphcat import classify, canonical_code, to_dot
from .orbit import build_graph
from .polys import format_poly, poly_to_json
from .quadfield import QuadElem, format_elem, parse_elem

QI_LABELS = frozenset({
    "0", "3(2)", "4(1,1)", "4(2)", "5(1,1)a", "5(1,1)b", "5(2)a", "6(1,1)",
    "6(2)", "6(2,1)", "6(3)", "8(2,1,1)", "8(3)", "10(2,1,1)a",
})
QW_LABELS = frozenset({
    "0", "3(2)", "4(1)", "4(1,1)", "4(2)", "5(1,1)a", "6(1,1)", "6(2)",
    "6(3)", "7(2,1,1)a", "8(2)a", "8(2,1,1)", "8(3)",
})


def _emit_json(record: dict) -> None:
    text = json.dumps(record, indent=2, sort_keys=True)
    assert json.loads(text) == record, "JSON record does not round-trip"
    print(text)


def _catalog_from(args):
    if getattr(args, "catalog", None):
        from .graphcat import load_catalog

        return load_catalog(args.catalog)
    return None


def cmd_graph(args) -> int:
    c = parse_elem(args.c, args.d)
    graph = build_graph(c, args.d, args.n_max)
    label = classify(graph, _catalog_from(args))
    record = graph.to_record()
    record["label"] = label
    record["code"] = canonical_code(graph)
    if args.include_infinity:
        record["note"] = "the fixed point at infinity is omitted from the vertex list"
    if args.dot:
        print(to_dot(graph))
        return 0
    if args.json:
        _emit_json(record)
        return 0
    print(f"G(f_c, Q(sqrt({record['d']}))) at c = {record['c']}:")
    print(f"  label {label}, {len(record['vertices'])} vertices, "
          f"cycle structure {tuple(record['cycle_structure'])}")
    print(f"  complete for periods <= {record['n_max']}")
    for key, val in sorted(record["flags"].items()):
        print(f"  {key}: {val}")
    succ = dict(record["edges"])
    for v in record["vertices"]:
        m, n = record["portraits"][v]
        print(f"    {v} -> {succ[v]}   portrait ({m}, {n})")
    return 0


def _survey_params(d: int, height: int):
    seen = set()
    for w in range(1, height + 1):
        for u in range(-height, height + 1):
            for v in range(-height, height + 1):
                c = QuadElem(Fraction(u, w), Fraction(v, w), d)
                if c not in seen:
                    seen.add(c)
                    yield c


def _survey_one(task: tuple) -> tuple:
    d, c_text, n_max, catalog_path = task
    catalog = None
    if catalog_path:
        from .graphcat import load_catalog

        catalog = _cached_catalog(catalog_path)
    graph = build_graph(parse_elem(c_text, d), d, n_max)
    return c_text, classify(graph, catalog)


_CATALOG_CACHE: dict = {}


def _cached_catalog(path: str):
    if path not in _CATALOG_CACHE:
        from .graphcat import load_catalog

        _CATALOG_CACHE[path] = load_catalog(path)
    return _CATALOG_CACHE[path]


def cmd_survey(args) -> int:
    expected = {-1: QI_LABELS, -3: QW_LABELS}.get(args.d)
    params = sorted(_survey_params(args.d, args.height), key=lambda e: e.sort_key())
    tasks = [(args.d, format_elem(c), args.n_max, getattr(args, "catalog", None))
             for c in params]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_survey_one, tasks, chunksize=8))
    else:
        results = [_survey_one(task) for task in tasks]
    rows = []
    histogram: dict = {}
    for c_text, label in results:
        flagged = expected is not None and label not in expected
        rows.append({"c": c_text, "label": label, "flagged": flagged})
        histogram[label] = histogram.get(label, 0) + 1
    record = {
        "schema": "quaddyn/survey/v1",
        "d": args.d,
        "height": args.height,
        "n_max": args.n_max,
        "rows": rows,
        "histogram": dict(sorted(histogram.items())),
        "flagged": [r for r in rows if r["flagged"]],
    }
    if args.json:
        _emit_json(record)
        return 0
    for row in rows:
        marker = "  <-- OUTSIDE THE CLASSIFIED LIST" if row["flagged"] else ""
        print(f"{row['c']:>20}  {row['label']}{marker}")
    print("histogram:")
    for label, count in record["histogram"].items():
        print(f"  {label:>12}: {count}")
    if record["flagged"]:
        print(f"!! {len(record['flagged'])} parameter(s) fall outside the expected label list",
              file=sys.stderr)
    return 0


def cmd_dynatomic(args) -> int:
    if args.n < 1 or args.n > MAX_PERIOD:
        print(f"period must be in 1..{MAX_PERIOD}", file=sys.stderr)
        return 1
    c = parse_elem(args.c, args.d) if args.c is not None else "c"
    poly = gen_dynatomic(args.m, args.n, c) if args.m else dynatomic(args.n, c)
    record = {
        "schema": "quaddyn/dynatomic/v1",
        "m": args.m,
        "n": args.n,
        "c": None if args.c is None else format_elem(c),
        "degree": poly.degree(),
        "d_n": dn_rn(args.n)[0],
        "r_n": dn_rn(args.n)[1],
        "coefficients": poly_to_json(poly),
    }
    if args.json:
        _emit_json(record)
    else:
        print(format_poly(poly))
    return 0


def cmd_curve(args) -> int:
    try:
        entry = get_curve(args.name)
    except KeyError as err:
        print(err.args[0], file=sys.stderr)
        return 1
    curve = entry.curve
    record = {"schema": "quaddyn/curve/v1", "curve": entry.name, "action": args.action}
    from .curves import (count_points_ff, curve_genus, elliptic_count,
                         elliptic_group_structure, jacobian_orders, torsion_bound)

    if args.action == "genus":
        record["genus"] = 1 if isinstance(curve, WeierstrassCurve) else curve_genus(curve)
    elif args.action == "count":
        if isinstance(curve, WeierstrassCurve):
            record["count"] = elliptic_count(curve, args.p, args.deg)
        else:
            record["count"] = count_points_ff(curve, args.p, args.deg)
        record["q"] = args.p**args.deg
    elif args.action == "jacobian":
        orders = jacobian_orders(curve, args.p)
        record["order_p"], record["order_p2"] = orders
    elif args.action == "torsion-bound":
        primes = [int(p) for p in args.primes.split(",")]
        record["primes"] = primes
        record["bound"] = torsion_bound(curve, primes, args.deg)
    elif args.action == "structure":
        if not isinstance(curve, WeierstrassCurve):
            print("group structure needs a Weierstrass model (E17, E40)", file=sys.stderr)
            return 1
        record["structure"] = list(elliptic_group_structure(curve, args.p, args.deg))
    if args.json:
        _emit_json(record)
    else:
        body = {k: v for k, v in record.items() if k not in ("schema",)}
        print(", ".join(f"{k}={v}" for k, v in body.items()))
    return 0


def cmd_chabauty(args) -> int:
    from .chabauty import annihilator_solve, certify_disk, disk_series, eval_lambda
    from .chabauty import disk_differentials, full_theorem, integrate, kernel_generators
    from .chabauty import required_degree

    deg = max(32, required_degree(args.prec))
    if args.disk:
        kernel = kernel_generators()
        lam1 = integrate(disk_differentials("P0", deg)[0])
        lam2 = integrate(disk_differentials("P0", deg)[1])
        values = {
            (l, j): eval_lambda(lam, *kernel.trace_norm[j - 1], args.prec)
            for (l, lam) in ((1, lam1), (2, lam2))
            for j in (1, 2)
        }
        anni = annihilator_solve(values, args.prec)
        mu1, mu2 = disk_series(args.disk, anni, args.prec - 1, deg)
        cert = certify_disk(mu1, mu2, args.disk)
        record = {"schema": "quaddyn/chabauty/v1", "single_disk": cert.to_record()}
        ok = cert.certified and cert.solutions <= 2
    else:
        try:
            report = full_theorem(prec=args.prec, deg=deg)
        except RuntimeError as err:
            print(f"pipeline failure: {err}", file=sys.stderr)
            return 2
        record = report.to_record()
        ok = report.verdict() if args.prec == 6 else all(
            c.certified for c in report.certificates.values()
        )
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(record, fh, indent=2, sort_keys=True)
    if args.json:
        _emit_json(record)
    else:
        if "single_disk" in record:
            print(json.dumps(record["single_disk"], indent=2, sort_keys=True))
        else:
            from .chabauty import transcript

            print(transcript(report))
            print()
            print("verdict:", "verified" if ok else "NOT verified")
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quaddyn", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"quaddyn {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build and classify a preperiodic graph")
    p.add_argument("--d", type=int, required=True, help="field discriminant parameter")
    p.add_argument("--c", required=True, help='parameter, e.g. "-1/4 + 3/8*i"')
    p.add_argument("--n-max", type=int, default=MAX_PERIOD, dest="n_max")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--catalog", default=None, help="override catalog (JSON witness list)")
    p.add_argument("--include-infinity", action="store_true",
                   help="note the omitted fixed point at infinity in the record")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("survey", help="sweep parameters of bounded height")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--n-max", type=int, default=4, dest="n_max")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers over c values")
    p.add_argument("--catalog", default=None, help="override catalog (JSON witness list)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("dynatomic", help="print a dynatomic polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--c", default=None, help="specialize at this parameter (else symbolic)")
    p.add_argument("--d", type=int, default=-1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dynatomic)

    p = sub.add_parser("curve", help="finite-field data for a registry curve")
    p.add_argument("name")
    p.add_argument("action",
                   choices=["count", "jacobian", "torsion-bound", "genus", "structure"])
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--deg", type=int, default=1, choices=[1, 2])
    p.add_argument("--primes", default="3,5")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("chabauty", help="run the X0(5)/Q(i) certification")
    p.add_argument("--prec", type=int, default=6, help="2-adic working precision (bits)")
    p.add_argument("--disk", choices=["P0", "P2", "P4"], default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.set_defaults(func=cmd_chabauty)
    return parser


def _glue_values(argv: list) -> list:
    """Join "--c -5/12" into "--c=-5/12" so leading minuses survive argparse."""
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        if tok in ("--c",) and k + 1 < len(argv):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_values(list(argv)))
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
