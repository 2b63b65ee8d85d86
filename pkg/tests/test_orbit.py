from fractions import Fraction

import pytest

from quaddyn.dynatomic import gen_dynatomic, specialize
from quaddyn.orbit import (
    admissible_flags,
    build_graph,
    cycle_structure,
    periodic_points,
    portrait,
)
from quaddyn.quadfield import QuadElem, parse_elem

F = Fraction
I = QuadElem(0, 1, -1)


def q(a, b=0, d=-1):
    return QuadElem(F(a), F(b), d)


def test_periodic_points_examples():
    pts = periodic_points(q(-1), n_max=3)
    assert pts[1] == set() and pts[2] == {q(0), q(-1)} and pts[3] == set()
    pts = periodic_points(I, n_max=2)
    assert pts[1] == set() and pts[2] == {-I, q(-1, 1)}
    pts = periodic_points(q(-3), n_max=2)
    assert pts[2] == {q(1), q(-2)}


def test_portrait_examples():
    c = q(F(-21, 16))
    assert portrait(c, q(F(7, 4))) == (0, 1)
    assert portrait(c, q(F(5, 4))) == (1, 2)
    c0 = q(0)
    assert portrait(c0, q(1)) == (0, 1)
    assert portrait(c0, I) == (2, 1)


def test_portrait_rejects_wandering_points():
    with pytest.raises(RuntimeError):
        portrait(q(1), q(1))  # orbit of 1 under z^2 + 1 escapes


def test_build_graph_examples():
    assert build_graph(q(2), n_max=4).size() == 0
    g = build_graph(q(F(-301, 144)), n_max=4)
    assert g.size() == 6
    expected = {q(x) for x in (F(5, 12), F(-5, 12), F(19, 12), F(-19, 12), F(23, 12), F(-23, 12))}
    assert set(g.vertices) == expected
    assert cycle_structure(g) == (3,)
    g = build_graph(parse_elem("-1/4 + 3/8*i", -1), n_max=4)
    assert g.size() == 10
    pts = {parse_elem(s, -1) for s in
           ("1/4 - 1/4*i", "1/4 + 3/4*i", "3/4 + 1/4*i", "3/4 - 3/4*i", "5/4 - 1/4*i")}
    assert set(g.vertices) == pts | {-p for p in pts}


def test_negation_closure_and_succ():
    g = build_graph(q(F(-13, 9)), n_max=3)
    vertices = set(g.vertices)
    for v in vertices:
        assert -v in vertices
        assert g.succ[v] == v * v + g.parameter
        assert g.succ[-v] == g.succ[v]


def test_in_degree_structure():
    # generic: in-degrees 0 or 2
    g = build_graph(q(-6), n_max=3)
    degrees = {v: 0 for v in g.vertices}
    for v in g.vertices:
        degrees[g.succ[v]] += 1
    assert all(deg in (0, 2) for deg in degrees.values())
    # 0 in the graph forces the critical value to have in-degree 1
    g = build_graph(I, n_max=3)
    degrees = {v: 0 for v in g.vertices}
    for v in g.vertices:
        degrees[g.succ[v]] += 1
    crit = I  # f(0) = c
    assert degrees[crit] == 1
    others = {v: d for v, d in degrees.items() if v != crit}
    assert all(deg in (0, 2) for deg in others.values())


def test_monotone_in_n_max():
    c = q(F(-29, 16))
    sizes = [build_graph(c, n_max=k).size() for k in (1, 2, 3, 4)]
    assert sizes == sorted(sizes)
    assert sizes[2] == sizes[3] == 8


def test_portraits_match_generalized_dynatomic():
    g = build_graph(q(F(-21, 16)), n_max=3)
    for v in g.vertices:
        m, n = g.portraits[v]
        phi = specialize(gen_dynatomic(m, n), g.parameter)
        assert phi.eval(v).is_zero()


def test_cycle_counts_bounded_by_rn():
    from quaddyn.dynatomic import dn_rn

    for c, d in ((q(F(-29, 16)), -1), (q(0, 1), -1), (q(F(-5, 12), 0, -3), -3)):
        g = build_graph(c, d, n_max=4)
        structure = cycle_structure(g)
        for length in set(structure):
            if length >= 2:
                assert structure.count(length) <= dn_rn(length)[1]


def test_admissibility_examples():
    g = build_graph(q(0, 0, -3), -3, n_max=3)
    flags = admissible_flags(g, g.parameter)
    assert not flags.admissible and flags.zero_is_preperiodic
    g = build_graph(q(F(1, 4), 0, -3), -3, n_max=3)
    flags = admissible_flags(g, g.parameter)
    assert flags.admissible and not flags.strongly_admissible and flags.c_is_quarter
    g = build_graph(q(-6), n_max=3)
    flags = admissible_flags(g, g.parameter)
    assert flags.admissible and flags.strongly_admissible


def test_cycle_structure_examples():
    assert cycle_structure(build_graph(q(F(-13, 9)), n_max=3)) == (2,)
    assert cycle_structure(build_graph(q(F(-21, 16)), n_max=3)) == (1, 1, 2)
    assert cycle_structure(build_graph(q(2), n_max=3)) == ()


def test_graph_record_round_trip():
    import json

    g = build_graph(I, n_max=3)
    record = g.to_record()
    assert json.loads(json.dumps(record)) == record
    assert record["schema"] == "quaddyn/graph/v1"
    assert len(record["vertices"]) == g.size()
    assert record["flags"]["zero_is_preperiodic"]
