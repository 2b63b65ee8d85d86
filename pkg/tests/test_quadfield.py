import random
from fractions import Fraction

import pytest

from quaddyn.finitefield import FiniteField, reduce_quad
from quaddyn.quadfield import (
    QuadElem,
    format_elem,
    fraction_sqrt,
    parse_elem,
    quad_conj_norm_trace,
    quad_sqrt,
    squarefree_split,
)

F = Fraction
I = QuadElem(0, 1, -1)
W = QuadElem(F(-1, 2), F(1, 2), -3)

FIELDS = (-1, -3, 2, 5, 17, -15)


def rand_elem(rng, d):
    return QuadElem(
        F(rng.randint(-9, 9), rng.randint(1, 9)),
        F(rng.randint(-9, 9), rng.randint(1, 9)),
        d,
    )


def test_norm_of_one_plus_i():
    assert (1 + I) * (1 - I) == 2


def test_omega_is_cube_root_of_unity():
    assert W * W == -1 - W
    assert W**3 == 1


def test_inverse_of_sqrt_minus_three():
    x = 1 + 2 * W  # sqrt(-3)
    assert 1 / x == QuadElem(0, F(-1, 3), -3)
    assert x * (1 / x) == 1


def test_conj_norm_trace_examples():
    assert quad_conj_norm_trace(I) == (-I, F(1), F(0))
    conj, norm, trace = quad_conj_norm_trace(W)
    assert conj == -1 - W and norm == 1 and trace == -1
    assert quad_conj_norm_trace(QuadElem(3, 0, 5))[1:] == (F(9), F(6))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        I / QuadElem(0, 0, -1)


def test_mixed_fields_refuse_to_combine():
    with pytest.raises(ValueError):
        I + QuadElem(0, 1, 5)


def test_rational_elements_cross_fields():
    # a rational element may meet any field
    assert QuadElem(2, 0, 5) + I == QuadElem(2, 1, -1)


def test_d_normalization():
    e = QuadElem(0, 1, -4)
    assert e.d == -1 and e.b == 2
    with pytest.raises(ValueError):
        QuadElem(1, 1, 4)
    with pytest.raises(ValueError):
        QuadElem(1, 1, 0)
    assert squarefree_split(18) == (3, 2)
    assert squarefree_split(-12) == (2, -3)


def test_quad_sqrt_examples():
    assert quad_sqrt(QuadElem(0, 2, -1)) == 1 + I
    assert quad_sqrt(QuadElem(-2, 2, -3)) == QuadElem(1, 1, -3)
    assert quad_sqrt(QuadElem(2, 0, -1)) is None
    assert quad_sqrt(QuadElem(0, 0, 5)) == 0


def test_quad_sqrt_sign_convention():
    r = quad_sqrt(QuadElem(0, 2, -1))
    assert r.a > 0 or (r.a == 0 and r.b > 0)


def test_quad_sqrt_round_trip_property():
    rng = random.Random(11)
    for _ in range(60):
        for d in FIELDS:
            x = rand_elem(rng, d)
            r = quad_sqrt(x * x)
            assert r is not None and r * r == x * x
            direct = quad_sqrt(x)
            if direct is not None:
                assert direct * direct == x


def test_field_axioms_property():
    rng = random.Random(5)
    for d in FIELDS:
        for _ in range(25):
            a, b, c = (rand_elem(rng, d) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a and a * b == b * a
            if not a.is_zero():
                assert a * (1 / a) == 1


def test_norm_is_multiplicative_and_conj_involutive():
    rng = random.Random(6)
    for d in FIELDS:
        for _ in range(20):
            a, b = rand_elem(rng, d), rand_elem(rng, d)
            assert (a * b).norm() == a.norm() * b.norm()
            assert a.conj().conj() == a
            assert (a * b).conj() == a.conj() * b.conj()
            assert (a + b).conj() == a.conj() + b.conj()


def test_reduction_is_ring_homomorphism():
    rng = random.Random(7)
    field = FiniteField(7, 2)

    def elem():
        return QuadElem(
            F(rng.randint(-9, 9), rng.choice((1, 2, 3, 4, 5, 6))),
            F(rng.randint(-9, 9), rng.choice((1, 2, 3, 4, 5, 6))),
            5,
        )

    for _ in range(25):
        a, b = elem(), elem()
        assert reduce_quad(a + b, field) == reduce_quad(a, field) + reduce_quad(b, field)
        assert reduce_quad(a * b, field) == reduce_quad(a, field) * reduce_quad(b, field)


@pytest.mark.parametrize(
    "text,d",
    [
        ("-301/144", -1),
        ("i", None),
        ("w", None),
        ("1/2 - 1/3*sqrt(-3)", None),
        ("( -1/4 ) + (3/8)*i", None),
        ("2 + sqrt(5)", None),
        ("-6", -3),
    ],
)
def test_parse_format_round_trip(text, d):
    e = parse_elem(text, d)
    assert parse_elem(format_elem(e), e.d) == e


def test_w_style_formatting():
    assert format_elem(W, style="w") == "w"
    e = parse_elem("1/6 - 2/3*w", None)
    assert parse_elem(format_elem(e, style="w"), -3) == e
    assert e == QuadElem(F(1, 2), F(-1, 3), -3)


def test_fraction_sqrt():
    assert fraction_sqrt(F(9, 4)) == F(3, 2)
    assert fraction_sqrt(F(2)) is None
    assert fraction_sqrt(F(-1)) is None
