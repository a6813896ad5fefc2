"""Weierstrass curves over Q and their points over Q or a number field.

Long Weierstrass form throughout: y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
Division polynomials use the univariate convention: for odd n the classical
psi_n(x); for even n the x-polynomial whose roots are the x-coordinates of
all nonzero n-torsion (the exact-order part times the 2-division cubic).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .numberfield import NFElem, NumberField, sqrt_in_field, _rational_sqrt
from .polynomials import PolyQ, zz_mul, zz_strip


class CurveQ:
    """Elliptic curve over Q with cached standard invariants."""

    def __init__(self, a1, a2, a3, a4, a6):
        self.a1 = Fraction(a1)
        self.a2 = Fraction(a2)
        self.a3 = Fraction(a3)
        self.a4 = Fraction(a4)
        self.a6 = Fraction(a6)
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = (a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4
                   + a2 * a3 * a3 - a4 * a4)
        self.c4 = self.b2 ** 2 - 24 * self.b4
        self.c6 = -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6
        self.discriminant = (-self.b2 ** 2 * self.b8 - 8 * self.b4 ** 3
                             - 27 * self.b6 ** 2 + 9 * self.b2 * self.b4 * self.b6)
        if self.discriminant == 0:
            raise ValueError("singular Weierstrass equation")
        self.j = self.c4 ** 3 / self.discriminant
        self._fcache = {}

    def a_invariants(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        return isinstance(other, CurveQ) and self.a_invariants() == other.a_invariants()

    def __hash__(self):
        return hash(self.a_invariants())

    def __repr__(self):
        return "CurveQ%s" % (tuple(str(a) for a in self.a_invariants()),)

    def invariants(self):
        """(c4, c6, discriminant, j)."""
        return (self.c4, self.c6, self.discriminant, self.j)

    def is_integral(self):
        return all(a.denominator == 1 for a in self.a_invariants())

    def integral_model(self):
        """(curve with integer a-invariants, u) under (x, y) -> (u^2 x, u^3 y);
        torsion structure and x-coordinate fields are unchanged."""
        u = 1
        for a, w in zip(self.a_invariants(), (1, 2, 3, 4, 6)):
            d = a.denominator
            while d > 1:
                p = _least_prime_factor(d)
                e = 0
                while d % p == 0:
                    d //= p
                    e += 1
                need = -(-e // w)  # ceil(e / w)
                cur = 0
                t = u
                while t % p == 0:
                    t //= p
                    cur += 1
                if cur < need:
                    u *= p ** (need - cur)
        if u == 1:
            return self, 1
        return self.scaled(u), u

    def scaled(self, u):
        """Isomorphic model with a_i replaced by u^i a_i."""
        u = Fraction(u)
        return CurveQ(self.a1 * u, self.a2 * u ** 2, self.a3 * u ** 3,
                      self.a4 * u ** 4, self.a6 * u ** 6)

    def serialize(self):
        """Integer a-invariant list of the scaled integral model."""
        E, _ = self.integral_model()
        return [int(a) for a in E.a_invariants()]

    # -- points ------------------------------------------------------------

    def infinity(self, field=None):
        return PointK(self, field, None, None, True)

    def point(self, x, y, field=None):
        P = PointK(self, field, x, y, False)
        if not P.on_curve():
            raise ValueError("point is not on the curve")
        return P

    def rhs(self, x):
        """x^3 + a2 x^2 + a4 x + a6 (so y^2 + (a1 x + a3) y = rhs)."""
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def two_division_cubic(self) -> PolyQ:
        """4x^3 + b2 x^2 + 2 b4 x + b6; roots are the 2-torsion x-coordinates."""
        return PolyQ((self.b6, 2 * self.b4, self.b2, 4))

    def quadratic_twist(self, d) -> "CurveQ":
        """The twist by squarefree d != 0, via the c4/c6 model."""
        d = Fraction(d)
        if d == 0:
            raise ValueError("twist by zero")
        if d.denominator != 1 or _has_square_factor(abs(int(d))):
            raise ValueError("twist parameter must be a squarefree integer")
        return CurveQ(0, 0, 0, -27 * self.c4 * d * d, -54 * self.c6 * d ** 3)

    def lift_x(self, x, field=None):
        """All points on the curve over the given field with abscissa x."""
        if field is None:
            x = Fraction(x)
            lin = self.a1 * x + self.a3
            disc = lin * lin + 4 * self.rhs(x)
            s = _rational_sqrt(disc)
            if s is None:
                return []
            ys = {(-lin + s) / 2, (-lin - s) / 2}
            return [PointK(self, None, x, y, False) for y in sorted(ys)]
        lin = field.rational(self.a1) * x + field.rational(self.a3)
        disc = lin * lin + field.rational(4) * _rhs_in_field(self, x, field)
        s = sqrt_in_field(disc)
        if s is None:
            return []
        half = field.rational(Fraction(1, 2))
        ys = [(-lin + s) * half, (-lin - s) * half]
        out = []
        seen = set()
        for y in ys:
            if y.coords not in seen:
                seen.add(y.coords)
                out.append(PointK(self, field, x, y, False))
        out.sort(key=lambda P: P.y.coords)
        return out


def _rhs_in_field(E, x, K):
    return ((x + K.rational(E.a2)) * x + K.rational(E.a4)) * x + K.rational(E.a6)


def _least_prime_factor(n):
    if n % 2 == 0:
        return 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return i
        i += 2
    return n


def _has_square_factor(n):
    if n == 0:
        return True
    i = 2
    while i * i <= n:
        if n % (i * i) == 0:
            return True
        i += 1
    return False


class PointK:
    """Point on a CurveQ with coordinates in Q (field=None) or a NumberField."""

    __slots__ = ("curve", "field", "x", "y", "infinity")

    def __init__(self, curve, field, x, y, infinity=False):
        self.curve = curve
        self.field = field
        self.infinity = infinity
        if infinity:
            self.x = None
            self.y = None
        elif field is None:
            self.x = Fraction(x)
            self.y = Fraction(y)
        else:
            self.x = x if isinstance(x, NFElem) else field.rational(x)
            self.y = y if isinstance(y, NFElem) else field.rational(y)

    def __repr__(self):
        if self.infinity:
            return "PointK(O)"
        return "PointK(%r, %r)" % (self.x, self.y)

    def __eq__(self, other):
        if not isinstance(other, PointK):
            return NotImplemented
        self._check(other)
        if self.infinity or other.infinity:
            return self.infinity and other.infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.infinity:
            return hash(("inf",))
        key = (self.x, self.y) if self.field is None else (self.x.coords, self.y.coords)
        return hash(key)

    def _check(self, other):
        if self.curve != other.curve:
            raise ValueError("points on different curves")
        if self.field != other.field:
            raise ValueError("points over different fields")

    def _const(self, c):
        return Fraction(c) if self.field is None else self.field.rational(c)

    def on_curve(self):
        if self.infinity:
            return True
        E = self.curve
        a1, a2, a3, a4, a6 = (self._const(E.a1), self._const(E.a2),
                              self._const(E.a3), self._const(E.a4), self._const(E.a6))
        x, y = self.x, self.y
        lhs = y * y + a1 * x * y + a3 * y
        rhs = ((x + a2) * x + a4) * x + a6
        diff = lhs - rhs
        return diff == 0 if self.field is None else diff.is_zero()

    def __neg__(self):
        if self.infinity:
            return self
        E = self.curve
        return PointK(E, self.field,
                      self.x, -self.y - self._const(E.a1) * self.x - self._const(E.a3))

    def __add__(self, other):
        self._check(other)
        if self.infinity:
            return other
        if other.infinity:
            return self
        E = self.curve
        a1, a2, a3, a4 = (self._const(E.a1), self._const(E.a2),
                          self._const(E.a3), self._const(E.a4))
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        if x1 == x2:
            if y2 == -y1 - a1 * x1 - a3:
                return E.infinity(self.field)
            den = y1 + y1 + a1 * x1 + a3
            num = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1)
            lam = num / den
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam + a1 * lam - a2 - x1 - x2
        y3 = lam * (x1 - x3) - y1 - a1 * x3 - a3
        return PointK(E, self.field, x3, y3, False)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        return self.mul(n)

    def mul(self, n):
        if n < 0:
            return (-self).mul(-n)
        result = self.curve.infinity(self.field)
        base = self
        while n:
            if n & 1:
                result = result + base
            base = base + base
            n >>= 1
        return result

    def order(self, cap=50):
        """Exact order when at most cap, else None."""
        if self.infinity:
            return 1
        acc = self
        for k in range(2, cap + 1):
            acc = acc + self
            if acc.infinity:
                return k
        return None


# ---------------------------------------------------------------------------
# Division polynomials.

def _b_ints(E):
    bs = (E.b2, E.b4, E.b6, E.b8)
    if all(b.denominator == 1 for b in bs):
        return tuple(int(b) for b in bs)
    return None


def _f_series_int(E, n):
    """f_n as integer coefficient lists (constant first) for integral b's."""
    cache = E._fcache
    key = ("int", n)
    if key in cache:
        return cache[key]
    b2, b4, b6, b8 = _b_ints(E)
    B = [b6, 2 * b4, b2, 4]
    B2 = zz_mul(B, B)

    def f(m):
        k = ("int", m)
        if k in cache:
            return cache[k]
        if m <= 0:
            v = []
        elif m <= 2:
            v = [1]
        elif m == 3:
            v = [b8, 3 * b6, 3 * b4, b2, 3]
        elif m == 4:
            v = [b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6,
                 5 * b4, b2, 2]
        elif m % 2 == 0:
            h = m // 2
            v = zz_mul(f(h), _sub(zz_mul(f(h + 2), _sq(f(h - 1))),
                                  zz_mul(f(h - 2), _sq(f(h + 1)))))
        else:
            h = (m - 1) // 2
            t1 = zz_mul(f(h + 2), _cube(f(h)))
            t2 = zz_mul(f(h - 1), _cube(f(h + 1)))
            if h % 2 == 0:
                v = _sub(zz_mul(B2, t1), t2)
            else:
                v = _sub(t1, zz_mul(B2, t2))
        v = zz_strip(list(v))
        cache[k] = v
        return v

    return f(n)


def _sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return zz_strip(out)


def _sq(a):
    return zz_mul(a, a)


def _cube(a):
    return zz_mul(zz_mul(a, a), a)


def _f_series_frac(E, n):
    cache = E._fcache
    key = ("frac", n)
    if key in cache:
        return cache[key]
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    B = PolyQ((b6, 2 * b4, b2, 4))
    B2 = B * B

    def f(m):
        k = ("frac", m)
        if k in cache:
            return cache[k]
        if m <= 0:
            v = PolyQ.zero()
        elif m <= 2:
            v = PolyQ.one()
        elif m == 3:
            v = PolyQ((b8, 3 * b6, 3 * b4, b2, 3))
        elif m == 4:
            v = PolyQ((b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8,
                       10 * b6, 5 * b4, b2, 2))
        elif m % 2 == 0:
            h = m // 2
            v = f(h) * (f(h + 2) * f(h - 1) ** 2 - f(h - 2) * f(h + 1) ** 2)
        else:
            h = (m - 1) // 2
            t1 = f(h + 2) * f(h) ** 3
            t2 = f(h - 1) * f(h + 1) ** 3
            v = B2 * t1 - t2 if h % 2 == 0 else t1 - B2 * t2
        cache[k] = v
        return v

    return f(n)


def f_polynomial(E: CurveQ, n: int) -> PolyQ:
    """The exact-order x-polynomial f_n: psi_n for odd n, psi_n / psi_2 for
    even n, as a univariate polynomial in x."""
    if n < 1:
        raise ValueError("n must be positive")
    if _b_ints(E) is not None:
        return PolyQ(_f_series_int(E, n))
    return _f_series_frac(E, n)


def division_polynomial(E: CurveQ, n: int) -> PolyQ:
    """Univariate polynomial whose roots are the x-coordinates of the
    nonzero n-torsion: psi_n for odd n, f_n times the 2-division cubic for
    even n."""
    if n < 1:
        raise ValueError("n must be positive")
    fn = f_polynomial(E, n)
    if n % 2 == 0:
        return fn * E.two_division_cubic()
    return fn


def multiplication_x_map(E: CurveQ, m: int):
    """(num, den) with x([m]P) = num(x)/den(x) for P not killed by m."""
    if m < 2:
        raise ValueError("m must be at least 2")
    B = E.two_division_cubic()
    fm = f_polynomial(E, m)
    fm1 = f_polynomial(E, m - 1)
    fp1 = f_polynomial(E, m + 1)
    x = PolyQ.x()
    if m % 2 == 0:
        den = fm * fm * B
        num = x * den - fm1 * fp1
    else:
        den = fm * fm
        num = x * den - B * fm1 * fp1
    return num, den
