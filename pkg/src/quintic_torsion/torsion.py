"""Torsion subgroups over Q.

The structure is certified, not searched: reductions modulo several good
primes bound the order, division polynomials locate candidate abscissas,
and every candidate point has its exact order verified by the group law.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import CurveQ, f_polynomial
from .factoring import rational_roots
from .polynomials import PolyQ


@dataclass(frozen=True, order=True)
class TorsionGroup:
    """C_m x C_n with m | n; m = 1 encodes the cyclic group C_n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.n % self.m:
            raise ValueError("require m | n")

    @property
    def order(self):
        return self.m * self.n

    def label(self):
        if self.m == 1:
            return "C%d" % self.n
        return "C%dxC%d" % (self.m, self.n)

    def contains(self, other: "TorsionGroup") -> bool:
        return self.m % other.m == 0 and self.n % other.n == 0

    def __str__(self):
        return self.label()


def C(n, m=1):
    return TorsionGroup(m, n)


PHI1 = frozenset([TorsionGroup(1, n) for n in list(range(1, 11)) + [12]]
                 + [TorsionGroup(2, 2 * m) for m in range(1, 5)])

PHIQ5 = frozenset(set(PHI1) | {TorsionGroup(1, 11), TorsionGroup(1, 25)})

PHIQ5_CM = frozenset([TorsionGroup(1, 1), TorsionGroup(1, 2), TorsionGroup(1, 3),
                      TorsionGroup(1, 4), TorsionGroup(1, 6), TorsionGroup(1, 11),
                      TorsionGroup(2, 2)])


# ---------------------------------------------------------------------------
# Order bounds from reductions.

def count_points_mod(E: CurveQ, p: int) -> int:
    """#E(F_p) for an odd prime of good reduction, by a quadratic character
    sum against the 2-division cubic."""
    if p == 2:
        raise ValueError("p must be odd")
    num = E.discriminant.numerator
    den = E.discriminant.denominator
    if num % p == 0 or den % p == 0:
        raise ValueError("bad reduction at %d" % p)
    B = E.two_division_cubic()
    coeffs = []
    for c in B.coeffs:
        coeffs.append(c.numerator * pow(c.denominator, -1, p) % p)
    count = p + 1
    half = (p - 1) // 2
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc:
            count += 1 if pow(acc, half, p) == 1 else -1
    return count


def torsion_order_bound(E: CurveQ, primes=5):
    """Multiplicative bound on |E(Q)_tors| from good reductions: for each
    small prime l the l-part injects into E(F_p) whenever p != l is an odd
    good prime."""
    Ei, _ = E.integral_model()
    good = []
    p = 2
    while len(good) < primes:
        p = _next_odd_prime(p)
        try:
            good.append((p, count_points_mod(Ei, p)))
        except ValueError:
            continue
    bound = 1
    for ell in (2, 3, 5, 7):
        v = None
        for p, cnt in good:
            if p == ell:
                continue
            e = 0
            while cnt % ell == 0:
                cnt //= ell
                e += 1
            v = e if v is None else min(v, e)
        bound *= ell ** (v or 0)
    return bound


def _next_odd_prime(n):
    n += 1
    while True:
        if n % 2 and _is_prime(n):
            return n
        n += 1


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return n > 1


# ---------------------------------------------------------------------------
# Rational torsion points.

def two_torsion_points(E: CurveQ):
    """The rational points of exact order 2."""
    pts = []
    for x in rational_roots(E.two_division_cubic()):
        y = (-E.a1 * x - E.a3) / 2
        pts.append(E.point(x, y))
    return pts


def rational_points_of_exact_order(E: CurveQ, n: int):
    """Rational points of exact order n (n a prime power > 2), located via
    the exact-order division polynomial and verified by the group law."""
    pts = []
    for x in rational_roots(f_polynomial(E, n)):
        for P in E.lift_x(x):
            if P.order(cap=n) == n:
                pts.append(P)
    return pts


def torsion_structure_over_Q(E: CurveQ):
    """(TorsionGroup, witnesses) with witnesses a dict of verified points:
    'two' (order-2 points), and one point per odd prime power present."""
    Ei, u = E.integral_model()
    bound = torsion_order_bound(Ei)
    wit = {}

    # 2-primary part
    m2, n2 = 1, 1
    if bound % 2 == 0:
        two = two_torsion_points(Ei)
        wit["two"] = two
        if two:
            n2 = 2
            m2 = 2 if len(two) == 3 else 1
            if bound % 4 == 0:
                p4 = rational_points_of_exact_order(Ei, 4)
                if p4:
                    n2 = 4
                    wit["four"] = p4[:1]
                    if bound % 8 == 0:
                        p8 = rational_points_of_exact_order(Ei, 8)
                        if p8:
                            n2 = 8
                            wit["eight"] = p8[:1]

    nodd = 1
    for ell in (3, 5, 7):
        if bound % ell:
            continue
        pts = rational_points_of_exact_order(Ei, ell)
        if not pts:
            continue
        part = ell
        wit[str(ell)] = pts[:1]
        if ell == 3 and bound % 9 == 0:
            p9 = rational_points_of_exact_order(Ei, 9)
            if p9:
                part = 9
                wit["9"] = p9[:1]
        nodd *= part

    group = TorsionGroup(m2, n2 * nodd)
    if group not in PHI1:
        raise AssertionError("torsion %s outside the rational classification"
                             % group.label())
    # witnesses live on the scaled model; map back to E
    if u != 1:
        wit = {k: [_unscale(E, P, u) for P in v] for k, v in wit.items()}
    return group, wit


def _unscale(E, P, u):
    if P.infinity:
        return E.infinity()
    return E.point(P.x / u ** 2, P.y / u ** 3)


def torsion_over_Q(E: CurveQ) -> TorsionGroup:
    """The torsion subgroup of E(Q); always lands in the rational list."""
    return torsion_structure_over_Q(E)[0]
