"""Rational isogenies: kernel polynomials, Velu quotients, and x-maps.

Kernel polynomials for an odd prime degree are assembled from rational
factors of the division polynomial and certified by stability under
multiplication maps that generate the full multiplier group, so the
certified sets really are Galois-stable cyclic subgroups.  Composite
degrees are built by composing prime steps and pulling kernels back
through the Velu x-map; the dual step is recognized by comparing the
composite x-map with the multiplication map.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .curves import CurveQ, f_polynomial, multiplication_x_map
from .factoring import factor_over_Q, rational_roots
from .polynomials import PolyQ, poly_gcd


def newton_power_sums(h: PolyQ, upto: int):
    """Power sums p_0..p_upto of the roots of monic h via Newton's identities."""
    d = h.degree
    # h = x^d - e_1 x^(d-1) + e_2 x^(d-2) - ..., so e_i = (-1)^i h[d-i]
    e = [Fraction(1)] + [Fraction(0)] * d
    for i in range(1, d + 1):
        e[i] = (-1) ** i * h[d - i]
    ps = [Fraction(d)]
    for k in range(1, upto + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, d) + 1):
            acc += (-1) ** (i - 1) * e[i] * ps[k - i]
        if k <= d:
            acc += (-1) ** (k - 1) * k * e[k]
        ps.append(acc)
    return ps


def _split_kernel(E: CurveQ, h: PolyQ):
    """(two-torsion roots, odd part) of a monic kernel polynomial."""
    B = E.two_division_cubic()
    g = poly_gcd(h, B)
    odd = h.exact_div(g) if g.degree > 0 else h
    roots2 = rational_roots(g) if g.degree > 0 else []
    if g.degree != len(roots2):
        raise ValueError("kernel meets the 2-torsion in irrational points")
    return roots2, odd.monic()


def velu_quotient(E: CurveQ, kernel: PolyQ) -> CurveQ:
    """Quotient of E by the finite subgroup cut out by a monic kernel
    polynomial (trivial kernel allowed)."""
    kernel = kernel.monic()
    if kernel.degree == 0:
        return E
    roots2, odd = _split_kernel(E, kernel)
    b2, b4, b6 = E.b2, E.b4, E.b6
    v = Fraction(0)
    w = Fraction(0)
    for x0 in roots2:
        vq = 3 * x0 * x0 + (b2 * x0 + b4) / 2
        v += vq
        w += x0 * vq
    d = odd.degree
    if d > 0:
        ps = newton_power_sums(odd, 3)
        p1, p2, p3 = ps[1], ps[2], ps[3]
        v += 6 * p2 + b2 * p1 + d * b4
        w += 10 * p3 + 2 * b2 * p2 + 3 * b4 * p1 + d * b6
    return CurveQ(E.a1, E.a2, E.a3, E.a4 - 5 * v,
                  E.a6 - b2 * v - 7 * w)


def isogeny_x_map(E: CurveQ, kernel: PolyQ):
    """(num, den) with X = num/den the x-map of the Velu isogeny with the
    given monic kernel polynomial."""
    kernel = kernel.monic()
    if kernel.degree == 0:
        return PolyQ.x(), PolyQ.one()
    roots2, odd = _split_kernel(E, kernel)
    b2, b4, b6 = E.b2, E.b4, E.b6
    x = PolyQ.x()
    num, den = x, PolyQ.one()
    d = odd.degree
    if d > 0:
        ps = newton_power_sums(odd, d + 3)
        vpoly = PolyQ((b4, b2, 6))
        upoly = PolyQ((b6, 2 * b4, b2, 4))
        T1 = _trace_against_quotient(odd, vpoly, ps)
        T2 = _trace_against_quotient(odd, upoly, ps)
        dh = odd.derivative()
        # X += T1/h + (T2*h' - T2'*h)/h^2
        n2 = T1 * odd + T2 * dh - T2.derivative() * odd
        num = num * odd * odd + n2 * den
        den = den * odd * odd
    for x0 in roots2:
        vq = 3 * x0 * x0 + (b2 * x0 + b4) / 2
        lin = PolyQ((-x0, 1))
        num = num * lin + PolyQ((vq,)) * den
        den = den * lin
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num.exact_div(g), den.exact_div(g)
    lc = den.leading()
    return num.scale(1 / lc), den.scale(1 / lc)


def _trace_against_quotient(h: PolyQ, F: PolyQ, ps):
    """Tr(F(T) * (h(x) - h(T))/(x - T)) as a polynomial in x, computed via
    weighted power sums of the roots of h."""
    d = h.degree
    out = []
    for j in range(d):
        acc = Fraction(0)
        for k in range(j + 1, d + 1):
            hk = h[k]
            if hk:
                # sum over roots of F(alpha) * alpha^(k-1-j)
                s = Fraction(0)
                for m in range(F.degree + 1):
                    cm = F[m]
                    if cm:
                        s += cm * ps[m + k - 1 - j]
                acc += hk * s
        out.append(acc)
    return PolyQ(out)


# ---------------------------------------------------------------------------
# Kernel enumeration.

_EXTRA_MULTIPLIER = {17: (3,)}


def prime_isogeny_kernels(E: CurveQ, ell: int):
    """Monic kernel polynomials of the rational ell-isogenies, ell prime."""
    if ell == 2:
        return [PolyQ((-x0, 1)) for x0 in rational_roots(E.two_division_cubic())]
    f = f_polynomial(E, ell)
    target = (ell - 1) // 2
    factors = [g for g, _ in factor_over_Q(f).factors if g.degree <= target]
    out = []
    for r in range(1, len(factors) + 1):
        for combo in combinations(range(len(factors)), r):
            if sum(factors[i].degree for i in combo) != target:
                continue
            h = PolyQ.one()
            for i in combo:
                h = h * factors[i]
            if _is_multiplier_stable(E, h, ell):
                out.append(h.monic())
    out.sort(key=lambda g: g.coeffs)
    return out


def _is_multiplier_stable(E: CurveQ, h: PolyQ, ell: int):
    """True when the point set above the roots of h is stable under
    multiplications generating the full multiplier group mod ell."""
    for m in (2,) + _EXTRA_MULTIPLIER.get(ell, ()):
        num, den = multiplication_x_map(E, m)
        if poly_gcd(h, den).degree != 0:
            return False
        # h(num/den) must vanish on the roots of h
        acc = PolyQ.zero()
        dpow = [PolyQ.one()]
        npow = [PolyQ.one()]
        for _ in range(h.degree):
            dpow.append((dpow[-1] * den) % h)
            npow.append((npow[-1] * num) % h)
        for k in range(h.degree + 1):
            c = h[k]
            if c:
                acc = acc + (npow[k] * dpow[h.degree - k]).scale(c)
        if not (acc % h).is_zero():
            return False
    return True


def _pullback_kernel(E, h1, h2):
    """Kernel polynomial of the composite isogeny: preimage under the
    h1-isogeny of the subgroup cut out by h2 on the quotient."""
    n1, d1 = isogeny_x_map(E, h1)
    m = h2.degree
    acc = PolyQ.zero()
    d1pow = [PolyQ.one()]
    n1pow = [PolyQ.one()]
    for _ in range(m):
        d1pow.append(d1pow[-1] * d1)
        n1pow.append(n1pow[-1] * n1)
    for k in range(m + 1):
        c = h2[k]
        if c:
            acc = acc + (n1pow[k] * d1pow[m - k]).scale(c)
    acc = acc.monic()
    g = poly_gcd(acc, acc.derivative()) if acc.degree > 1 else PolyQ.one()
    if g.degree > 0:
        acc = acc.exact_div(g).monic()
    return (h1 * acc).monic()


def rational_isogeny_kernels(E: CurveQ, n: int):
    """Monic kernel polynomials of all rational cyclic n-isogenies from E,
    for 1 <= n <= 25."""
    if not 1 <= n <= 25:
        raise ValueError("degree out of the supported range")
    if n == 1:
        return [PolyQ.one()]
    ell = _least_prime(n)
    rest = n // ell
    out = []
    seen = set()
    fl = (f_polynomial(E, ell) if ell != 2 else E.two_division_cubic()).monic()
    for h1 in prime_isogeny_kernels(E, ell):
        if rest == 1:
            if h1.coeffs not in seen:
                seen.add(h1.coeffs)
                out.append(h1)
            continue
        Eq = velu_quotient(E, h1)
        for h2 in rational_isogeny_kernels(Eq, rest):
            k = _pullback_kernel(E, h1, h2)
            expected = n // 2 if n % 2 == 0 else (n - 1) // 2
            if k.degree != expected:
                continue
            # cyclic iff the ell-torsion inside the composite kernel is
            # exactly the first step's kernel
            if poly_gcd(k, fl) != h1.monic():
                continue
            if k.coeffs not in seen:
                seen.add(k.coeffs)
                out.append(k)
    out.sort(key=lambda g: g.coeffs)
    return out


def _least_prime(n):
    p = 2
    while n % p:
        p += 1
    return p
