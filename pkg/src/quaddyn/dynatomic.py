"""Dynatomic and generalized dynatomic polynomials for f_c(z) = z^2 + c.

Two evaluation paths are provided and cross-checked: symbolic over Q[c][x]
(coefficients are polynomials in c) and specialized over K = Q(sqrt(d)) with
a concrete parameter.  All the Moebius-product quotients are required to be
exact; an inexact division raises ExactnessError, which always indicates an
implementation bug, never bad input.
"""

from __future__ import annotations

from .polys import QQ, PolyRing, QuadField, UniPoly

MAX_PERIOD = 6  # d(7) = 126 is feasible but nothing in the pipeline needs it


def divisors(n: int) -> list[int]:
    out = [k for k in range(1, n + 1) if n % k == 0]
    return out


def mobius(n: int) -> int:
    mu, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1 if p == 2 else 2
    if n > 1:
        mu = -mu
    return mu


def dn_rn(n: int) -> tuple[int, int]:
    """d(N) = #points and r(N) = d(N)/N = #cycles of formal period N."""
    if n < 1:
        raise ValueError("period must be >= 1")
    d = sum(mobius(n // k) * 2**k for k in divisors(n))
    assert d % n == 0
    return d, d // n


def _symbolic_ring() -> PolyRing:
    return PolyRing(QQ, "c")


def symbolic_map() -> UniPoly:
    """f_c(x) = x^2 + c over Q[c][x]."""
    ring = _symbolic_ring()
    x = UniPoly.gen(ring, "x")
    return x * x + UniPoly.const(ring, ring.gen(), "x")


def specialized_map(c) -> UniPoly:
    """f_c(x) = x^2 + c over K for a concrete c (QuadElem)."""
    ring = QuadField(c.d)
    x = UniPoly.gen(ring, "x")
    return x * x + UniPoly.const(ring, c, "x")


def iterate_poly(c, n: int) -> UniPoly:
    """f_c^n(x); c is a QuadElem or the string "c" for the symbolic parameter."""
    if n < 0:
        raise ValueError("n must be >= 0")
    f = symbolic_map() if c == "c" else specialized_map(c)
    out = UniPoly.gen(f.ring, "x")
    for _ in range(n):
        out = out * out + UniPoly.const(f.ring, f.coeffs[0], "x")
    return out


def dynatomic(n: int, c="c") -> UniPoly:
    """The dynatomic polynomial of period n, by the exact Moebius quotient."""
    if n < 1:
        raise ValueError("period must be >= 1")
    x = iterate_poly(c, 0)
    num = UniPoly.const(x.ring, x.ring.one, "x")
    den = UniPoly.const(x.ring, x.ring.one, "x")
    cpoly = iterate_poly(c, 1) - x * x
    iterates = {}
    cur = x
    for k in range(1, n + 1):
        cur = cur * cur + cpoly
        iterates[k] = cur
    for k in divisors(n):
        mu = mobius(n // k)
        if mu == 1:
            num = num * (iterates[k] - x)
        elif mu == -1:
            den = den * (iterates[k] - x)
    phi = num.exact_div(den)
    assert phi.degree() == dn_rn(n)[0]
    return phi


def gen_dynatomic(m: int, n: int, c="c") -> UniPoly:
    """Generalized dynatomic polynomial for preperiod m and period n."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    phi = dynatomic(n, c)
    if m == 0:
        return phi
    hi = phi.compose(iterate_poly(c, m))
    lo = phi.compose(iterate_poly(c, m - 1))
    out = hi.exact_div(lo)
    assert out.degree() == dn_rn(n)[0] * 2 ** (m - 1)
    return out


def specialize(poly_cx: UniPoly, c) -> UniPoly:
    """Evaluation homomorphism Q[c][x] -> K[x] at a concrete c."""
    ring = QuadField(c.d)
    coeffs = [p.eval(c) for p in poly_cx.coeffs]
    coeffs = [v if hasattr(v, "d") else ring.of(v) for v in coeffs]
    return UniPoly(ring, coeffs, "x")


def verify_factorizations(n_max: int = 6, m_max: int = 3) -> dict:
    """Symbolic identity checks over Q[c][x].

    f_c^N - x = prod_{n|N} Phi_n for N <= n_max, and
    f_c^{M+N} - f_c^M = prod_{m<=M} prod_{n|N} Phi_{m,n} for M <= m_max, N <= 4.
    """
    if n_max > MAX_PERIOD:
        raise ValueError(f"n_max capped at {MAX_PERIOD}")
    report = {}
    x = iterate_poly("c", 0)
    phis = {k: dynatomic(k) for k in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        lhs = iterate_poly("c", n) - x
        rhs = UniPoly.const(x.ring, x.ring.one, "x")
        for k in divisors(n):
            rhs = rhs * phis[k]
        report[f"period:{n}"] = lhs == rhs
    for n in range(1, min(n_max, 4) + 1):
        for m in range(1, m_max + 1):
            lhs = iterate_poly("c", m + n) - iterate_poly("c", m)
            rhs = UniPoly.const(x.ring, x.ring.one, "x")
            for mm in range(0, m + 1):
                for k in divisors(n):
                    rhs = rhs * gen_dynatomic(mm, k)
            report[f"portrait:({m},{n})"] = lhs == rhs
    return report
