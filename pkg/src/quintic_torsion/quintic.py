"""Torsion of rational elliptic curves over quintic number fields.

The computation is structural rather than a point search: candidate
orders are the ones the quintic classification allows, abscissas come
from rational factors of the relevant division polynomials, ordinates
from square tests inside the field, and every produced point has its
order verified by the group law.  Work that cannot contribute is ruled
out first by residue-field order counts at small unramified primes.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import CurveQ, f_polynomial
from .factoring import (
    degree_combination_possible,
    factor_over_Q,
    factors_of_degree,
    gf_factor_degrees,
    possible_factor_degrees,
    subset_sums,
)
from .isogeny import rational_isogeny_kernels
from .numberfield import NumberField, nf_roots, normalized_defining_poly
from .polynomials import (
    PolyQ,
    gf_divrem,
    gf_mul,
    gf_strip,
    poly_gcd,
)
from .torsion import (
    PHIQ5,
    TorsionGroup,
    _next_odd_prime,
    count_points_mod,
    torsion_structure_over_Q,
)


# ---------------------------------------------------------------------------
# Residue-field screens.

def _frobenius_orders(E: CurveQ, p: int, degrees):
    """#E(F_p^f) for each residue degree f, from the trace at p."""
    ap = p + 1 - count_points_mod(E, p)
    out = {}
    s_prev, s_cur = 2, ap
    for f in range(1, max(degrees) + 1):
        if f == 1:
            val = s_cur
        else:
            s_prev, s_cur = s_cur, ap * s_cur - p * s_prev
            val = s_cur
        out[f] = p ** f + 1 - val
    return {f: out[f] for f in degrees}


def _usable_screen_primes(E: CurveQ, K: NumberField, ell: int, count=2):
    """Odd primes of good reduction, not ell, with squarefree splitting of
    the defining polynomial (so residue degrees are its factor degrees)."""
    fk = K.defining_poly.to_int_coeffs()
    disc = E.discriminant
    out = []
    p = 2
    while len(out) < count:
        p = _next_odd_prime(p)
        if p == ell:
            continue
        if disc.numerator % p == 0 or disc.denominator % p == 0:
            continue
        fp = gf_strip(list(fk), p)
        if len(fp) != len(fk):
            continue
        dfp = gf_strip([fp[i] * i for i in range(1, len(fp))], p)
        from .polynomials import gf_gcd

        if len(gf_gcd(fp, dfp, p)) != 1:
            continue
        degs = gf_factor_degrees(fp, p)
        out.append((p, degs))
    return out


def can_have_torsion_over(E: CurveQ, K: NumberField, order: int) -> bool:
    """Necessary condition for a point of the given order in E(K): the order
    must divide every residue field count at tested unramified good primes."""
    ell = _least_prime_factor(order)
    for p, degs in _usable_screen_primes(E, K, ell):
        counts = _frobenius_orders(E, p, degs)
        for f, cnt in counts.items():
            if cnt % order:
                return False
    return True


def _least_prime_factor(n):
    p = 2
    while n % p:
        p += 1
    return p


# ---------------------------------------------------------------------------
# Division polynomials mod p (for the 25-division degree analysis).

def f_polynomial_mod(E: CurveQ, n: int, p: int):
    """f_n mod p for an integral model, via the recurrence over GF(p)."""
    b = [int(x) % p for x in (E.b2, E.b4, E.b6, E.b8)]
    b2, b4, b6, b8 = b
    B2 = gf_mul([b6, 2 * b4, b2, 4], [b6, 2 * b4, b2, 4], p)
    cache = {}

    def f(m):
        if m in cache:
            return cache[m]
        if m <= 0:
            v = []
        elif m <= 2:
            v = [1]
        elif m == 3:
            v = gf_strip([b8, 3 * b6, 3 * b4, b2, 3], p)
        elif m == 4:
            v = gf_strip([b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8,
                          10 * b6, 5 * b4, b2, 2], p)
        elif m % 2 == 0:
            h = m // 2
            v = gf_mul(f(h), _gf_sub(gf_mul(f(h + 2), gf_mul(f(h - 1), f(h - 1), p), p),
                                     gf_mul(f(h - 2), gf_mul(f(h + 1), f(h + 1), p), p), p), p)
        else:
            h = (m - 1) // 2
            c3 = gf_mul(gf_mul(f(h), f(h), p), f(h), p)
            d3 = gf_mul(gf_mul(f(h + 1), f(h + 1), p), f(h + 1), p)
            t1 = gf_mul(f(h + 2), c3, p)
            t2 = gf_mul(f(h - 1), d3, p)
            if h % 2 == 0:
                v = _gf_sub(gf_mul(B2, t1, p), t2, p)
            else:
                v = _gf_sub(t1, gf_mul(B2, t2, p), p)
        cache[m] = v
        return v

    return f(n)


def _gf_sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return gf_strip(out, p)


def degree5_possible_in_25_division(E: CurveQ, prime_count=3) -> bool:
    """Modular degree analysis of the primitive part of the 25-division
    polynomial: can it have a rational factor of degree 5?  Runs entirely
    mod small good primes, never touching the degree-312 polynomial over Q;
    only factor degrees up to 5 are needed for the subset sums."""
    from .polynomials import gf_gcd

    disc = E.discriminant
    checked = 0
    p = 3
    while checked < prime_count:
        p = _next_odd_prime(p)
        if disc.numerator % p == 0 or disc.denominator % p == 0:
            continue
        f25 = f_polynomial_mod(E, 25, p)
        f5 = f_polynomial_mod(E, 5, p)
        if len(f25) - 1 != 312 or len(f5) - 1 != 12:
            continue
        cof, rem = gf_divrem(f25, f5, p)
        if rem:
            continue
        dcof = gf_strip([cof[i] * i for i in range(1, len(cof))], p)
        if len(gf_gcd(cof, dcof, p)) != 1:
            continue
        degs = _small_factor_degrees(cof, p, 5)
        checked += 1
        if 5 not in subset_sums(degs, 5):
            return False
    return True


def _small_factor_degrees(f, p, dmax):
    """Degrees (with multiplicity) of the irreducible factors of squarefree
    f mod p of degree at most dmax, by a truncated distinct-degree split."""
    from .polynomials import gf_gcd, gf_pow_mod, gf_rem, gf_sub

    out = []
    x = [0, 1]
    h = x
    fstar = list(f)
    for d in range(1, dmax + 1):
        if len(fstar) - 1 < d:
            break
        h = gf_pow_mod(h, p, fstar, p)
        g = gf_gcd(fstar, gf_sub(h, x, p), p)
        if len(g) > 1:
            out.extend([d] * ((len(g) - 1) // d))
            from .polynomials import gf_divrem as _divrem

            fstar = _divrem(fstar, g, p)[0]
            h = gf_rem(h, fstar, p)
    return out


_UNSTABLE_PROFILES = None


def _mod25_image_can_be_unstable(E: CurveQ, prime_count=40) -> bool:
    """Frobenius test against the known mod-25 classes that allow an
    order-25 point over a quintic field without a rational 25-isogeny.
    Returns False when every such class is excluded by some good prime's
    (trace, det) pair, which is sound: Frobenius elements lie in the image."""
    global _UNSTABLE_PROFILES
    if _UNSTABLE_PROFILES is None:
        from .gl2 import unstable_order25_class_profiles

        _UNSTABLE_PROFILES = unstable_order25_class_profiles()
    alive = list(_UNSTABLE_PROFILES)
    disc = E.discriminant
    p = 3
    tried = 0
    while alive and tried < prime_count:
        p = _next_odd_prime(p)
        if p == 5 or disc.numerator % p == 0 or disc.denominator % p == 0:
            continue
        tried += 1
        ap = p + 1 - count_points_mod(E, p)
        pair = (ap % 25, p % 25)
        alive = [prof for prof in alive if pair in prof]
    return bool(alive)


# ---------------------------------------------------------------------------
# Candidate quintic factors per order.

def order5_field_factors(E: CurveQ):
    """Irreducible degree-5 factors of the 5-division polynomial."""
    return factors_of_degree(f_polynomial(E, 5), 5)


def order25_field_factors(E: CurveQ):
    """Irreducible degree-5 factors of the primitive part of the 25-division
    polynomial, located through rational 25-isogeny kernels so the
    degree-312 polynomial is never factored blindly.

    Without a rational 25-isogeny an order-25 point over a quintic field
    would force the mod-25 image into one of the finitely many classes with
    an unstable order-25 line; those require the two-isogeny mod-5 shape
    and are excluded by Frobenius trace data at a few good primes.  Only if
    every cheap exclusion fails does the degree analysis (and, as a last
    resort, a targeted factorization) run on the big polynomial."""
    kernels = rational_isogeny_kernels(E, 25)
    out = []
    seen = set()
    f5 = f_polynomial(E, 5)
    for k in kernels:
        g = poly_gcd(k, f5)
        prim = k.exact_div(g) if g.degree else k
        for fac in factors_of_degree(prim, 5):
            if fac.coeffs not in seen:
                seen.add(fac.coeffs)
                out.append(fac)
    if kernels:
        return out
    if len(rational_isogeny_kernels(E, 5)) < 2:
        # a single stable line means the point field would be Galois, and a
        # cyclic order-25 group over a Galois field yields a rational
        # 25-isogeny, contradicting the empty kernel list
        return []
    if not _mod25_image_can_be_unstable(E):
        return []
    if not degree5_possible_in_25_division(E):
        return []
    f25 = f_polynomial(E, 25)
    prim = f25.exact_div(f5)
    return factors_of_degree(prim, 5)


def order11_field_factors(E: CurveQ):
    """Irreducible degree-5 factors of the 11-division polynomial."""
    return factors_of_degree(f_polynomial(E, 11), 5)


# ---------------------------------------------------------------------------
# Points of given order over a quintic field.

def points_of_order_over(E: CurveQ, K: NumberField, order: int, factors=None):
    """Points of exact `order` in E(K) whose abscissa is not rational,
    located via degree-5 factors of the division machinery.  Returns at most
    one point per abscissa orbit (the first found), verified by the group
    law.  The curve must be given by an integral model."""
    if K.degree != 5:
        raise ValueError("field must be quintic")
    if factors is None:
        if order == 5:
            factors = order5_field_factors(E)
        elif order == 25:
            factors = order25_field_factors(E)
        elif order == 11:
            factors = order11_field_factors(E)
        else:
            raise ValueError("unsupported order")
    pts = []
    for fac in factors:
        if fac.monic() == K.defining_poly:
            roots = [K.gen()]
        else:
            roots = nf_roots(fac, K)
        # conjugate abscissas give conjugate ordinate discriminants, so one
        # root per factor decides the lift
        for alpha in roots[:1]:
            for P in E.lift_x(alpha, field=K):
                got = P.order(cap=50)
                if got is None:
                    raise AssertionError("torsion point order exceeded cap")
                if got == order:
                    pts.append(P)
            if pts:
                return pts
    return pts


def quintic_torsion_structure(E: CurveQ, K: NumberField):
    """(E(K)_tors as TorsionGroup, witness dict).

    The prime-to-{5,11} parts agree with the rational torsion: abscissa
    fields of 2-, 3- and 7-power torsion have degree dividing the order of
    the corresponding GL2 group, which is never a multiple of 5, so no new
    point can appear over a quintic field.  The 5- and 11-parts are
    computed by explicit root finding in K.
    """
    if K.degree != 5:
        raise ValueError("field must be quintic")
    Ei, u = E.integral_model()
    base, base_wit = torsion_structure_over_Q(E)
    wit = {"base": base_wit}

    n5 = 1
    base5 = 5 if base.n % 5 == 0 else 1
    if base5 == 1:
        if can_have_torsion_over(Ei, K, 5):
            pts = points_of_order_over(Ei, K, 5)
            if pts:
                n5 = 5
                wit["5"] = [_unscale_k(E, pts[0], u, K)]
    else:
        n5 = 5
        if can_have_torsion_over(Ei, K, 25):
            pts = points_of_order_over(Ei, K, 25)
            if pts:
                n5 = 25
                wit["25"] = [_unscale_k(E, pts[0], u, K)]

    n11 = 1
    if base.order % 11 == 0:
        raise AssertionError("rational torsion of order 11 is impossible")
    if n5 == base5 and can_have_torsion_over(Ei, K, 11):
        pts = points_of_order_over(Ei, K, 11)
        if pts:
            n11 = 11
            wit["11"] = [_unscale_k(E, pts[0], u, K)]

    n = base.n // base5 * n5 * n11
    group = TorsionGroup(base.m, n)
    if group not in PHIQ5:
        raise AssertionError("torsion %s outside the quintic classification"
                             % group.label())
    return group, wit


def _unscale_k(E, P, u, K):
    if u == 1 or P.infinity:
        return P
    iu2 = K.rational(Fraction(1, u * u))
    iu3 = K.rational(Fraction(1, u ** 3))
    return E.point(P.x * iu2, P.y * iu3, field=K)


def torsion_over_quintic(E: CurveQ, K: NumberField) -> TorsionGroup:
    """E(K)_tors for a quintic number field K; lands in the quintic list."""
    return quintic_torsion_structure(E, K)[0]
