"""Factorization of univariate polynomials over Q, and root-finding in Q(sqrt(d)).

The factorization pipeline is classical: content/primitive split, Yun
squarefree decomposition (with a modular integer-poly gcd underneath),
factorization modulo a good prime (distinct-degree then equal-degree
splitting), quadratic Hensel lifting up to a Mignotte-style bound, and
factor recombination by subset search with degree and trailing-coefficient
pruning.

Root-finding in K = Q(sqrt(d)) works through the norm polynomial: candidates
come from the degree-<=2 rational factors of P * conj(P); multiplicities are
read off by repeated exact division over K.  Only the low-degree factors are
lifted and recombined on that path, which keeps dynatomic-sized inputs fast.

Internally, polynomials over F_p and Z are plain coefficient lists (constant
term first); the public API speaks UniPoly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .finitefield import is_prime
from .polys import QQ, QuadField, UniPoly
from .quadfield import QuadElem, fraction_sqrt

# ---------------------------------------------------------------------------
# polynomials over F_p as int lists (constant term first, no trailing zeros)
# ---------------------------------------------------------------------------


def _ptrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pnorm(a, p: int) -> list:
    return _ptrim([c % p for c in a])


def _padd(a, b, p):
    out = list(a) + [0] * (len(b) - len(a)) if len(a) < len(b) else list(a)
    for k, c in enumerate(b):
        out[k] = (out[k] + c) % p
    return _ptrim(out)


def _psub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for k, c in enumerate(b):
        out[k] = (out[k] - c) % p
    return _ptrim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ptrim([c % p for c in out])


def _pscale(a, s, p):
    return _ptrim([c * s % p for c in a])


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv = pow(b[-1], -1, p)
    rem = list(a)
    if len(rem) < len(b):
        return [], _ptrim(rem)
    quot = [0] * (len(rem) - len(b) + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + len(b) - 1] % p
        if not top:
            continue
        q = top * inv % p
        quot[k] = q
        for j, c in enumerate(b):
            rem[k + j] = (rem[k + j] - q * c) % p
    return _ptrim(quot), _ptrim(rem)


def _pmonic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    return _pscale(a, pow(a[-1], -1, p), p)


def _pgcd(a, b, p):
    a, b = _pnorm(a, p), _pnorm(b, p)
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p)


def _ppowmod(a, e: int, mod, p):
    out, base = [1], _pdivmod(a, mod, p)[1]
    while e:
        if e & 1:
            out = _pdivmod(_pmul(out, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return out


def _pderiv(a, p):
    return _ptrim([a[k] * k % p for k in range(1, len(a))])


# ---------------------------------------------------------------------------
# factorization over F_p
# ---------------------------------------------------------------------------


def _distinct_degree(f, p):
    """Split monic squarefree f into (product, degree) blocks."""
    blocks = []
    h = [0, 1]
    fstar = list(f)
    d = 0
    while len(fstar) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, fstar, p)
        g = _pgcd(_psub(h, [0, 1], p), fstar, p)
        if len(g) > 1:
            blocks.append((g, d))
            fstar = _pdivmod(fstar, g, p)[0]
            h = _pdivmod(h, fstar, p)[1]
    if len(fstar) > 1:
        blocks.append((fstar, len(fstar) - 1))
    return blocks


def _equal_degree(f, d: int, p, rng: random.Random):
    """Cantor-Zassenhaus split of f (product of degree-d irreducibles), odd p."""
    n = len(f) - 1
    if n == d:
        return [f]
    exponent = (p**d - 1) // 2
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        r = _ptrim(r)
        if len(r) < 2:
            continue
        s = _psub(_ppowmod(r, exponent, f, p), [1], p)
        g = _pgcd(s, f, p)
        if 1 < len(g) < len(f):
            left = _equal_degree(g, d, p, rng)
            right = _equal_degree(_pdivmod(f, g, p)[0], d, p, rng)
            return left + right


def factor_mod_p(f, p: int) -> list:
    """Monic irreducible factors of squarefree f over F_p (deterministic seed)."""
    rng = random.Random(0xD15C0 + p + 31 * len(f))
    fm = _pmonic(_pnorm(f, p), p)
    out = []
    for block, d in _distinct_degree(fm, p):
        out.extend(_equal_degree(block, d, p, rng))
    return sorted(out)


# ---------------------------------------------------------------------------
# polynomials over Z as int lists
# ---------------------------------------------------------------------------


def _ztrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zadd(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for k, c in enumerate(b):
        out[k] += c
    return _ztrim(out)


def _zsub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for k, c in enumerate(b):
        out[k] -= c
    return _ztrim(out)


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ztrim(out)


def _zderiv(a):
    return _ztrim([a[k] * k for k in range(1, len(a))])


def _zcontent(a) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g or 1


def _zprimitive(a):
    """(content-with-sign, primitive part with positive lc)."""
    if not a:
        return 1, []
    g = _zcontent(a)
    if a[-1] < 0:
        g = -g
    return g, [c // g for c in a]


def _zdivexact(a, b):
    """Exact division in Z[x]; returns None when b does not divide a."""
    if not b:
        raise ZeroDivisionError
    rem = list(a)
    if len(rem) < len(b):
        return None if _ztrim(rem) else []
    quot = [0] * (len(rem) - len(b) + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + len(b) - 1]
        if top % b[-1]:
            return None
        q = top // b[-1]
        quot[k] = q
        for j, c in enumerate(b):
            rem[k + j] -= q * c
    return _ztrim(quot) if not _ztrim(rem) else None


def _sym(x: int, m: int) -> int:
    x %= m
    return x - m if x > m // 2 else x


def _primes_from(start: int):
    p = start
    while True:
        if is_prime(p):
            yield p
        p += 1


def z_gcd(a, b):
    """Primitive gcd in Z[x] by the modular method (positive lc)."""
    a, b = _ztrim(list(a)), _ztrim(list(b))
    if not a:
        return _zprimitive(b)[1]
    if not b:
        return _zprimitive(a)[1]
    _, a = _zprimitive(a)
    _, b = _zprimitive(b)
    lc_bound = math.gcd(a[-1], b[-1])
    best_deg = None
    modulus = 0
    acc = None
    for p in _primes_from(5):
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        gp = _pgcd(_pnorm(a, p), _pnorm(b, p), p)
        deg = len(gp) - 1
        if deg == 0:
            return [1]
        if best_deg is None or deg < best_deg:
            best_deg, modulus, acc = deg, p, _pscale(gp, lc_bound, p)
            acc = acc + [0] * (deg + 1 - len(acc))
        elif deg == best_deg:
            gp = _pscale(gp, lc_bound, p)
            gp = gp + [0] * (deg + 1 - len(gp))
            inv = pow(modulus, -1, p)
            combined = []
            for x, y in zip(acc, gp):
                t = (y - x) * inv % p
                combined.append(x + modulus * t)
            modulus *= p
            acc = combined
        else:
            continue
        cand = _ztrim([_sym(c, modulus) for c in acc])
        cand = _zprimitive(cand)[1]
        if cand and _zdivexact(a, cand) is not None and _zdivexact(b, cand) is not None:
            return cand
    raise AssertionError("unreachable")


def z_squarefree_decomposition(f):
    """Yun's algorithm on a primitive f in Z[x]: list of (factor_i, i)."""
    out = []
    g = z_gcd(f, _zderiv(f))
    w = _zdivexact(f, g)
    y = _zdivexact(_zderiv(f), g)
    z = _zsub(y, _zderiv(w))
    i = 1
    while len(w) > 1:
        a = z_gcd(w, z)
        if len(a) > 1:
            out.append((a, i))
        w = _zdivexact(w, a)
        y = _zdivexact(z, a)
        z = _zsub(y, _zderiv(w))
        i += 1
    return out


# ---------------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------------


def _hensel_step(f, g, h, s, t, m: int):
    """One quadratic step: from factorization mod m to mod m*m (h monic)."""
    mm = m * m

    def red(a):
        return _ztrim([c % mm for c in a])

    e = red(_zsub(f, _zmul(g, h)))
    q, r = _zp_divmod(_zmul(s, e), h, mm)
    g1 = red(_zadd(g, _zadd(_zmul(t, e), _zmul(q, g))))
    h1 = red(_zadd(h, r))
    b = red(_zsub(_zadd(_zmul(s, g1), _zmul(t, h1)), [1]))
    c, d = _zp_divmod(_zmul(s, b), h1, mm)
    s1 = red(_zsub(s, d))
    t1 = red(_zsub(t, _zadd(_zmul(t, b), _zmul(c, g1))))
    assert _ztrim([c % mm for c in _zsub(f, _zmul(g1, h1))]) == [], "Hensel step lost exactness"
    return g1, h1, s1, t1


def _zp_divmod(a, b, m: int):
    """divmod in (Z/m)[x] for b with unit leading coefficient."""
    inv = pow(b[-1] % m, -1, m)
    rem = [c % m for c in a]
    if len(rem) < len(b):
        return [], _ztrim(rem)
    quot = [0] * (len(rem) - len(b) + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + len(b) - 1] % m
        if not top:
            continue
        q = top * inv % m
        quot[k] = q
        for j, c in enumerate(b):
            rem[k + j] = (rem[k + j] - q * c) % m
    return _ztrim(quot), _ztrim(rem)


def _hensel_lift(f, factors, p: int, target: int):
    """Lift monic factors mod p of f (f = lc * prod factors mod p) to mod p^target.

    Returns the list of monic lifted factors mod p^target, in input order.
    """
    lc = f[-1]
    modulus = p**target

    def lift_pair(fcur, fac_list):
        if len(fac_list) == 1:
            # monic image of fcur mod p^target
            inv = pow(fcur[-1] % modulus, -1, modulus)
            return [_ztrim([c * inv % modulus for c in fcur])]
        mid = len(fac_list) // 2
        g = [fcur[-1] % p]
        for fac in fac_list[:mid]:
            g = _pmul(g, fac, p)
        h = [1]
        for fac in fac_list[mid:]:
            h = _pmul(h, fac, p)
        s, t = _bezout_mod_p(g, h, p)
        m = p
        gl, hl, sl, tl = g, h, s, t
        while m < modulus:
            gl, hl, sl, tl = _hensel_step(fcur, gl, hl, sl, tl, m)
            m *= m
        gl = _ztrim([c % modulus for c in gl])
        hl = _ztrim([c % modulus for c in hl])
        return lift_pair(gl, fac_list[:mid]) + lift_pair(hl, fac_list[mid:])

    lifted = lift_pair(_ztrim([c % modulus for c in f]), factors)
    check = [lc % modulus]
    for fac in lifted:
        check = _ztrim([c % modulus for c in _zmul(check, fac)])
    assert check == _ztrim([c % modulus for c in f]), "multifactor Hensel lift failed"
    return lifted


def _bezout_mod_p(g, h, p):
    """s, t with s*g + t*h = 1 mod p, deg s < deg h, deg t < deg g."""
    r0, r1 = _pnorm(g, p), _pnorm(h, p)
    s0, s1 = [1], []
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if len(r0) != 1:
        raise ValueError("factors are not coprime mod p")
    inv = pow(r0[0], -1, p)
    s = _pscale(s0, inv, p)
    s = _pdivmod(s, _pnorm(h, p), p)[1]
    num = _psub([1], _pmul(s, g, p), p)
    t, rem = _pdivmod(num, _pnorm(h, p), p)
    assert not rem, "Bezout construction failed"
    return s, t


# ---------------------------------------------------------------------------
# Zassenhaus over Z
# ---------------------------------------------------------------------------


def _pick_prime(f, tries: int = 6):
    """Good primes p >= 5 (squarefree reduction), fewest modular factors first."""
    found = []
    for p in _primes_from(5):
        if f[-1] % p == 0:
            continue
        fp = _pnorm(f, p)
        if len(fp) != len(f):
            continue
        if len(_pgcd(fp, _pderiv(fp, p), p)) != 1:
            continue
        factors = factor_mod_p(fp, p)
        found.append((len(factors), p, factors))
        if len(factors) == 1:
            break
        if len(found) >= tries:
            break
    found.sort(key=lambda rec: (rec[0], rec[1]))
    return found[0][1], found[0][2]


def _mignotte_exponent(f, p: int) -> int:
    n = len(f) - 1
    height = max(abs(c) for c in f)
    # |coeff of lc * factor| <= 2^n sqrt(n+1) height |lc|, rounded up
    bound = 2 * (1 << n) * (math.isqrt(n + 1) + 1) * height * abs(f[-1]) + 1
    k = 1
    while p**k <= 2 * bound:
        k += 1
    return k


def zassenhaus(f) -> list:
    """Irreducible factors (primitive, positive lc) of a primitive squarefree f."""
    if len(f) - 1 <= 1:
        return [list(f)]
    p, mod_factors = _pick_prime(f)
    if len(mod_factors) == 1:
        return [list(f)]
    k = _mignotte_exponent(f, p)
    big = p**k
    lifted = _hensel_lift(f, mod_factors, p, k)
    result = []
    active = list(range(len(lifted)))
    fcur = list(f)
    size = 1
    while 2 * size <= len(active):
        progress = True
        while progress:
            progress = False
            for subset in _subsets(active, size):
                cand = [fcur[-1] % big]
                for idx in subset:
                    cand = _ztrim([c % big for c in _zmul(cand, lifted[idx])])
                cand = _ztrim([_sym(c, big) for c in cand])
                cand = _zprimitive(cand)[1]
                if not cand:
                    continue
                quot = _zdivexact(fcur, cand)
                if quot is None:
                    continue
                result.append(cand)
                fcur = _zprimitive(quot)[1]
                active = [i for i in active if i not in subset]
                progress = True
                break
        size += 1
    if len(fcur) > 1:
        result.append(fcur)
    return result


def _subsets(items, size):
    import itertools

    return itertools.combinations(items, size)


# ---------------------------------------------------------------------------
# public API over Q
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorList:
    """content * prod(factor^multiplicity) == the factored polynomial."""

    content: Fraction
    factors: tuple  # ((monic UniPoly over Q, multiplicity), ...)

    def product(self) -> UniPoly:
        out = UniPoly.const(QQ, self.content)
        for poly, mult in self.factors:
            out = out * poly**mult
        return out


def _to_int_poly(f: UniPoly) -> tuple[Fraction, list]:
    """f = scale * primitive-Z-poly (positive lc)."""
    denom = 1
    for c in f.coeffs:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [int(c * denom) for c in f.coeffs]
    cont, prim = _zprimitive(ints)
    return Fraction(cont, denom), prim


def _from_int_poly(zs, make_monic: bool = True) -> tuple[UniPoly, Fraction]:
    poly = UniPoly(QQ, [Fraction(c) for c in zs])
    if make_monic and not poly.is_zero():
        lead = poly.lc()
        return poly * (1 / lead), lead
    return poly, Fraction(1)


def factor_rational(f: UniPoly) -> FactorList:
    """Complete irreducible factorization over Q."""
    if f.ring != QQ:
        raise ValueError("factor_rational expects a polynomial over Q")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    scale, prim = _to_int_poly(f)
    if len(prim) == 1:
        return FactorList(scale * prim[0], ())
    content = scale
    pieces = []
    for sq_part, mult in z_squarefree_decomposition(prim):
        for irr in zassenhaus(sq_part):
            monic, lead = _from_int_poly(irr)
            content *= lead**mult
            pieces.append((monic, mult))
    pieces.sort(key=lambda fm: (fm[0].degree(), fm[0].coeffs))
    out = FactorList(content, tuple(pieces))
    assert out.product() == f, "factorization does not reproduce the input"
    return out


def _partial_split_mod_p(f, p: int):
    """(linears, quadratics, rest) of monic squarefree f over F_p.

    Only the degree-1 and degree-2 parts are split off; the cofactor stays a
    single block, so no equal-degree work is wasted on high-degree content.
    """
    fm = _pmonic(_pnorm(f, p), p)
    h = _ppowmod([0, 1], p, fm, p)
    g1 = _pgcd(_psub(h, [0, 1], p), fm, p)
    rest = _pdivmod(fm, g1, p)[0]
    linears = sorted([p - r if r else 0, 1] for r in range(p) if _peval(g1, r, p) == 0)
    assert len(linears) == len(g1) - 1, "linear block failed to split into roots"
    quads = []
    if len(rest) - 1 >= 2:
        h = _pdivmod(h, rest, p)[1]
        h = _ppowmod_frob(h, p, rest)
        g2 = _pgcd(_psub(h, [0, 1], p), rest, p)
        rest = _pdivmod(rest, g2, p)[0]
        if len(g2) > 1:
            rng = random.Random(0xF00D + p)
            quads = sorted(_equal_degree(g2, 2, p, rng))
    return linears, quads, rest


def _peval(a, x, p):
    out = 0
    for c in reversed(a):
        out = (out * x + c) % p
    return out


def _ppowmod_frob(h, p, mod):
    """h(x)^p mod (mod), i.e. one more Frobenius power of x."""
    return _ppowmod(h, p, mod, p)


def _first_good_prime(f):
    for p in _primes_from(5):
        if f[-1] % p == 0:
            continue
        fp = _pnorm(f, p)
        if len(fp) != len(f):
            continue
        if len(_pgcd(fp, _pderiv(fp, p), p)) == 1:
            return p
    raise AssertionError("unreachable")


def low_degree_rational_factors(f: UniPoly, max_degree: int = 2) -> list:
    """All monic irreducible factors of f over Q of degree <= max_degree.

    Only degree-1/2 modular factors are split, lifted (against a root-size
    bound rather than the full Mignotte bound) and recombined in singletons
    and pairs, so norm-doubled dynatomic inputs stay fast.
    """
    if max_degree > 2:
        raise ValueError("only degrees 1 and 2 are supported")
    _, prim = _to_int_poly(f)
    if len(prim) <= 1:
        return []
    sqfree = _zdivexact(prim, z_gcd(prim, _zderiv(prim)))
    sqfree = _zprimitive(sqfree)[1]
    if len(sqfree) == 2:
        return [_from_int_poly(sqfree)[0]]
    p = _first_good_prime(sqfree)
    linears, quads, rest = _partial_split_mod_p(sqfree, p)
    if not linears and not quads:
        return []
    lc = sqfree[-1]
    # coefficients of lc * (degree <= 2 factor) are bounded through the
    # Cauchy root bound (rounded up); no full-degree Mignotte height needed
    height = max(abs(c) for c in sqfree)
    root_bound = 1 + (height + abs(lc) - 1) // abs(lc)
    bound = 2 * abs(lc) * (root_bound + 1) ** 2 + 1
    k = 1
    while p**k <= 2 * bound:
        k += 1
    big = p**k
    blocks = linears + quads + ([rest] if len(rest) > 1 else [])
    lifted = _hensel_lift(sqfree, blocks, p, k)

    def candidate(indices) -> list | None:
        cand = [lc % big]
        for idx in indices:
            cand = _ztrim([c % big for c in _zmul(cand, lifted[idx])])
        cand = _zprimitive(_ztrim([_sym(c, big) for c in cand]))[1]
        if cand and _zdivexact(sqfree, cand) is not None:
            return cand
        return None

    lin_idx = range(len(linears))
    quad_idx = range(len(linears), len(linears) + len(quads))
    out = []
    used = set()
    for i in lin_idx:
        cand = candidate((i,))
        if cand is not None:
            out.append(_from_int_poly(cand)[0])
            used.add(i)
    if max_degree >= 2:
        for i in quad_idx:
            cand = candidate((i,))
            if cand is not None:
                out.append(_from_int_poly(cand)[0])
        free = [i for i in lin_idx if i not in used]
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                cand = candidate((free[a], free[b]))
                if cand is not None:
                    out.append(_from_int_poly(cand)[0])
    out.sort(key=lambda poly: (poly.degree(), poly.coeffs))
    return out


def rational_roots(f: UniPoly) -> list[Fraction]:
    """Roots of f in Q, without multiplicity."""
    return [-g.coeffs[0] for g in low_degree_rational_factors(f, 1) if g.degree() == 1]


# ---------------------------------------------------------------------------
# roots in a quadratic field
# ---------------------------------------------------------------------------


def roots_in_quadfield(f: UniPoly, d: int | None = None) -> list[QuadElem]:
    """Multiset of roots of f lying in K = Q(sqrt(d)), sorted deterministically.

    f may be over Q (then d is required) or over QuadField(d).
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if isinstance(f.ring, QuadField):
        field = f.ring
    else:
        if d is None:
            raise ValueError("ambient d required for a rational polynomial")
        field = QuadField(d)
        f = f.map_coeffs(field, lambda c: QuadElem(c, 0, field.d))
    dd = field.d
    a_part = UniPoly(QQ, [c.a for c in f.coeffs], f.var)
    b_part = UniPoly(QQ, [c.b for c in f.coeffs], f.var)
    if b_part.is_zero():
        norm_poly = a_part
    else:
        norm_poly = a_part * a_part - b_part * b_part * dd
    candidates: list[QuadElem] = []
    for g in low_degree_rational_factors(norm_poly, 2):
        if g.degree() == 1:
            candidates.append(QuadElem(-g.coeffs[0], 0, dd))
        else:
            t, n = -g.coeffs[1], g.coeffs[0]
            disc = t * t - 4 * n
            s = fraction_sqrt(disc / dd)
            if s is None:
                continue
            candidates.append(QuadElem(t / 2, s / 2, dd))
            candidates.append(QuadElem(t / 2, -s / 2, dd))
    roots: list[QuadElem] = []
    xgen = UniPoly.gen(field, f.var)
    for cand in candidates:
        if not f.eval(cand).is_zero():
            continue
        mult = 0
        cur = f
        linear = xgen - UniPoly.const(field, cand, f.var)
        while True:
            quot, rem = cur.divrem(linear)
            if not rem.is_zero():
                break
            mult += 1
            cur = quot
        roots.extend([cand] * mult)
    roots.sort(key=lambda r: r.sort_key())
    return roots


# ---------------------------------------------------------------------------
# irreducibility certificates (consumed by the test suite)
# ---------------------------------------------------------------------------


def certify_irreducible(f: UniPoly) -> tuple[bool, str]:
    """Certificate that monic f is irreducible over Q.

    degree <= 3: rational-root / discriminant arguments; degree >= 4: modular
    degree-pattern witness across three good primes, falling back to the
    uniqueness of the Hensel-lifted factorization.
    """
    n = f.degree()
    if n <= 0:
        return False, "constant"
    if n == 1:
        return True, "linear"
    if n == 2:
        t, c0 = -f.coeffs[1], f.coeffs[0]
        disc = t * t - 4 * c0
        return fraction_sqrt(disc) is None, "discriminant"
    if n == 3:
        return not rational_roots(f), "rational-root"
    _, prim = _to_int_poly(f)
    patterns = []
    good = 0
    for p in _primes_from(5):
        if good == 3:
            break
        if prim[-1] % p == 0:
            continue
        fp = _pnorm(prim, p)
        if len(fp) != len(prim) or len(_pgcd(fp, _pderiv(fp, p), p)) != 1:
            continue
        good += 1
        degs = sorted(len(g) - 1 for g in factor_mod_p(fp, p))
        reachable = {0}
        for dg in degs:
            reachable |= {r + dg for r in reachable}
        patterns.append(reachable)
    feasible = set.intersection(*patterns) if patterns else set(range(n + 1))
    if not any(0 < k < n for k in feasible):
        return True, "degree-pattern"
    factors = zassenhaus(prim)
    return len(factors) == 1, "hensel-uniqueness"
