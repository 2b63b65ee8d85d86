import random
from collections import Counter
from fractions import Fraction

import pytest

from quaddyn.dynatomic import dynatomic, specialize
from quaddyn.factor import (
    certify_irreducible,
    factor_rational,
    low_degree_rational_factors,
    rational_roots,
    roots_in_quadfield,
    z_gcd,
    z_squarefree_decomposition,
)
from quaddyn.polys import QQ, QuadField, UniPoly
from quaddyn.quadfield import QuadElem

F = Fraction
X = UniPoly.gen(QQ)


def test_difference_of_squares():
    fl = factor_rational(X**2 - 1)
    assert fl.content == 1
    assert sorted(g.coeffs for g, _ in fl.factors) == [(F(-1), F(1)), (F(1), F(1))]


def test_cyclotomic_irreducible():
    fl = factor_rational(X**2 + X + 1)
    assert len(fl.factors) == 1 and fl.factors[0][0].degree() == 2


def test_phi3_at_c_from_the_three_cycle():
    c = QuadElem(F(-301, 144), 0, -1)
    phi = specialize(dynatomic(3), c)
    rational = UniPoly(QQ, [q.a for q in phi.coeffs])
    fl = factor_rational(rational)
    degrees = sorted(g.degree() for g, _ in fl.factors)
    assert degrees == [1, 1, 1, 3]
    roots = sorted(-g.coeffs[0] for g, _ in fl.factors if g.degree() == 1)
    assert roots == [F(-23, 12), F(5, 12), F(19, 12)]
    cubic = next(g for g, _ in fl.factors if g.degree() == 3)
    ok, method = certify_irreducible(cubic)
    assert ok and method == "rational-root"


def test_factorization_round_trip_property():
    rng = random.Random(31)
    for _ in range(15):
        polys = []
        for _ in range(rng.randint(1, 3)):
            deg = rng.randint(1, 3)
            coeffs = [F(rng.randint(-4, 4)) for _ in range(deg)] + [F(rng.randint(1, 3))]
            polys.append(UniPoly(QQ, coeffs))
        product = UniPoly.const(QQ, F(rng.randint(1, 5), rng.randint(1, 4)))
        for p in polys:
            product = product * p ** rng.randint(1, 2)
        fl = factor_rational(product)
        assert fl.product() == product
        for g, _ in fl.factors:
            assert g.is_monic()
            assert certify_irreducible(g)[0]


def test_multiplicity_tracking():
    fl = factor_rational((X - 1) ** 3 * (X + 2) ** 2 * 5)
    assert fl.content == 5
    mults = {tuple(g.coeffs): m for g, m in fl.factors}
    assert mults[(F(-1), F(1))] == 3 and mults[(F(2), F(1))] == 2


def test_zero_rejected():
    with pytest.raises(ValueError):
        factor_rational(UniPoly(QQ, ()))


def test_z_gcd_and_squarefree():
    a = [2, 0, -2]  # 2(x-1)(x+1)
    b = [-3, 0, 3]  # 3(x-1)(x+1)
    assert z_gcd(a, b) == [-1, 0, 1]
    parts = z_squarefree_decomposition([0, 0, 1, 1])  # x^2 (x + 1)
    assert sorted((tuple(p), m) for p, m in parts) == [((0, 1), 2), ((1, 1), 1)]


def test_low_degree_factors():
    p = (X - 1) * (X + F(2, 3)) * (X**2 + 1) * (X**4 + X + 1)
    got = low_degree_rational_factors(p)
    assert [g.degree() for g in got] == [1, 1, 2]
    assert rational_roots(p) == [F(-2, 3), F(1)] or sorted(rational_roots(p)) == [F(-2, 3), F(1)]


def test_low_degree_pair_recombination():
    # x^2 - 7 is irreducible over Q but splits into two linears mod good primes
    p = (X**2 - 7) * (X**3 + X + 1)
    got = low_degree_rational_factors(p)
    assert [tuple(g.coeffs) for g in got if g.degree() == 2] == [(F(-7), F(0), F(1))]


def test_degree_pattern_certificate():
    ok, method = certify_irreducible(X**4 + X + 1)
    assert ok and method in ("degree-pattern", "hensel-uniqueness")
    ok, _ = certify_irreducible(X**4 + 4)  # = (x^2-2x+2)(x^2+2x+2)
    assert not ok


# --- roots in quadratic fields ---------------------------------------------


def test_roots_examples_over_qi():
    K = QuadField(-1)
    x = UniPoly.gen(K)
    i = QuadElem(0, 1, -1)
    phi1 = x * x - x + UniPoly.const(K, i)
    assert roots_in_quadfield(phi1) == []
    phi2 = x * x + x + UniPoly.const(K, 1 + i)
    assert set(roots_in_quadfield(phi2)) == {-i, QuadElem(-1, 1, -1)}
    p = X**2 + 3 * X + UniPoly.const(QQ, F(1, 2))
    assert roots_in_quadfield(p, -1) == []


def test_roots_multiplicities():
    roots = roots_in_quadfield((X - 1) ** 2 * (X**2 + 1), -1)
    counts = Counter(roots)
    i = QuadElem(0, 1, -1)
    assert counts[QuadElem(1, 0, -1)] == 2 and counts[i] == 1 and counts[-i] == 1


def test_roots_completeness_against_planted_roots():
    rng = random.Random(17)
    for d in (-1, 5, -3):
        K = QuadField(d)
        x = UniPoly.gen(K)
        for _ in range(10):
            planted = []
            poly = UniPoly.const(K, K.one)
            for _ in range(rng.randint(1, 3)):
                r = QuadElem(
                    F(rng.randint(-4, 4), rng.randint(1, 3)),
                    F(rng.randint(-2, 2), rng.randint(1, 2)),
                    d,
                )
                planted.append(r)
                poly = poly * (x - UniPoly.const(K, r))
                conj = r.conj()
                if conj != r:
                    planted.append(conj)
                    poly = poly * (x - UniPoly.const(K, conj))
            # pad with a rationally irreducible, K-root-free quadratic
            poly = poly * (x * x + UniPoly.const(K, K.of(7)))
            found = roots_in_quadfield(poly)
            assert Counter(found) == Counter(planted) or set(found) >= set(planted)
            for r in found:
                assert poly.eval(r).is_zero()


def test_roots_commute_with_conjugation():
    rng = random.Random(23)
    K = QuadField(-1)
    x = UniPoly.gen(K)
    for _ in range(8):
        coeffs = [
            QuadElem(F(rng.randint(-3, 3)), F(rng.randint(-3, 3)), -1) for _ in range(4)
        ] + [K.one]
        poly = UniPoly(K, coeffs)
        conj_poly = UniPoly(K, [c.conj() for c in coeffs])
        roots = roots_in_quadfield(poly)
        conj_roots = roots_in_quadfield(conj_poly)
        assert Counter(r.conj() for r in roots) == Counter(conj_roots)


def test_root_count_matches_cofactor_degree():
    K = QuadField(-1)
    x = UniPoly.gen(K)
    i = QuadElem(0, 1, -1)
    poly = (x - UniPoly.const(K, i)) ** 2 * (x * x + UniPoly.const(K, K.of(7)))
    roots = roots_in_quadfield(poly)
    cofactor = poly
    for r in roots:
        cofactor = cofactor.exact_div(x - UniPoly.const(K, r))
    assert poly.degree() - len(roots) == cofactor.degree()
    assert roots_in_quadfield(cofactor) == []
