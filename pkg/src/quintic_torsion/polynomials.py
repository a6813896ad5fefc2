"""Dense univariate polynomial arithmetic over Q and Z/nZ.

Coefficient lists are stored constant term first, with no trailing zeros;
the zero polynomial has an empty coefficient tuple.  All arithmetic is
exact: rational coefficients are `fractions.Fraction`, modular ones plain
ints reduced into [0, n).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rat = Fraction


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


class PolyQ:
    """Univariate polynomial with Fraction coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = tuple(Fraction(c) for c in coeffs)
        object.__setattr__(self, "coeffs", _strip(cs))

    def __setattr__(self, *a):
        raise AttributeError("PolyQ is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero():
        return PolyQ(())

    @staticmethod
    def one():
        return PolyQ((1,))

    @staticmethod
    def x():
        return PolyQ((0, 1))

    @staticmethod
    def constant(c):
        return PolyQ((c,))

    @staticmethod
    def monomial(c, k):
        return PolyQ((0,) * k + (c,))

    # -- basic structure -------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (Fraction(1),)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "PolyQ(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("%s*x" % c)
            else:
                terms.append("%s*x^%d" % (c, k))
        return "PolyQ(%s)" % " + ".join(reversed(terms))

    def leading(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    # -- ring operations -------------------------------------------------

    def __neg__(self):
        return PolyQ(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyQ(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = PolyQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divrem(self, other):
        """Quotient and remainder: self = q*other + r with deg r < deg other."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        lb = b[-1]
        if len(a) - 1 < db:
            return PolyQ(()), self
        q = [Fraction(0)] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if not c:
                continue
            f = c / lb
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
        return PolyQ(q), PolyQ(a)

    def __divmod__(self, other):
        return self.divrem(other)

    def __mod__(self, other):
        return self.divrem(other)[1]

    def exact_div(self, other):
        """Division known to be exact; raises if a nonzero remainder appears."""
        q, r = self.divrem(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def scale(self, c):
        c = Fraction(c)
        return PolyQ(tuple(a * c for a in self.coeffs))

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def derivative(self):
        return PolyQ(tuple(self.coeffs[k] * k for k in range(1, len(self.coeffs))))

    def __call__(self, x):
        """Evaluate at x (Fraction, int, or anything with ring ops)."""
        if not self.coeffs:
            return Fraction(0) if isinstance(x, (int, Fraction)) else 0 * x
        acc = self.coeffs[-1] if isinstance(x, (int, Fraction)) else self.coeffs[-1] * _ring_one(x)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, other):
        """self(other) as a polynomial."""
        other = _coerce(other)
        acc = PolyQ(())
        for c in reversed(self.coeffs):
            acc = acc * other + PolyQ((c,))
        return acc

    def shift(self, c):
        """self(x + c)."""
        return self.compose(PolyQ((c, 1)))

    def scale_arg(self, c):
        """self(c*x)."""
        c = Fraction(c)
        p = Fraction(1)
        out = []
        for a in self.coeffs:
            out.append(a * p)
            p *= c
        return PolyQ(out)

    # -- content and integer form -----------------------------------------

    def content(self):
        """Positive rational c with self/c primitive and integral; 0 for zero."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        """(content, primitive integer part as PolyQ with positive leading)."""
        if self.is_zero():
            return Fraction(0), self
        c = self.content()
        pp = self.scale(1 / c)
        if pp.leading() < 0:
            c, pp = -c, -pp
        return c, pp

    def to_int_coeffs(self):
        """Integer coefficient list after clearing denominators (primitive part
        sign included); raises if called on the zero polynomial."""
        _, pp = self.primitive()
        return [int(c) for c in pp.coeffs]


def _coerce(v):
    if isinstance(v, PolyQ):
        return v
    if isinstance(v, (int, Fraction)):
        return PolyQ((v,))
    raise TypeError("cannot coerce %r to PolyQ" % (v,))


def _ring_one(x):
    one = getattr(x, "one", None)
    if callable(one):
        return one()
    return x ** 0


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd over Q; not both arguments may be zero."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: PolyQ, b: PolyQ) -> PolyQ:
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def poly_xgcd(a: PolyQ, b: PolyQ):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = PolyQ.one(), PolyQ.zero()
    t0, t1 = PolyQ.zero(), PolyQ.one()
    while not r1.is_zero():
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        raise ValueError("xgcd(0, 0) undefined")
    lc = r0.leading()
    return r0.scale(1 / lc), s0.scale(1 / lc), t0.scale(1 / lc)


def resultant(a: PolyQ, b: PolyQ) -> Fraction:
    """Res(a, b) over Q; a and b nonzero.  Delegates to an integer
    remainder sequence after clearing denominators."""
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant requires nonzero polynomials")
    if a.degree == 0:
        return a.leading() ** b.degree
    if b.degree == 0:
        return b.leading() ** a.degree
    ca, pa = a.primitive()
    cb, pb = b.primitive()
    ra = resultant_int([int(c) for c in pa.coeffs], [int(c) for c in pb.coeffs])
    return ca ** b.degree * cb ** a.degree * ra


def discriminant(f: PolyQ) -> Fraction:
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / f.leading()


def interpolate(points) -> PolyQ:
    """Newton interpolation through (x, y) pairs with distinct x."""
    xs = [Fraction(x) for x, _ in points]
    coef = [Fraction(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form from the top down
    result = PolyQ.zero()
    for i in range(n - 1, -1, -1):
        result = result * PolyQ((-xs[i], 1)) + PolyQ((coef[i],))
    return result


def resultant_int(a, b) -> Fraction:
    """Resultant of integer coefficient lists via a primitive remainder
    sequence with exact correction tracking.  Returns a Fraction whose value
    is an integer for integral inputs; the Fraction form keeps the
    bookkeeping exact midstream."""
    a = zz_strip([int(c) for c in a])
    b = zz_strip([int(c) for c in b])
    if not a or not b:
        raise ValueError("resultant requires nonzero polynomials")
    acc = Fraction(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return acc * b[0] ** da
        if da < db:
            a, b = b, a
            if da & 1 and db & 1:
                acc = -acc
            continue
        lb = b[-1]
        r = _zz_prem(a, b)
        if not r:
            return Fraction(0)
        c, r = _zz_primitive_pos(r)
        # prem scaled (a mod b) by lb**(da-db+1); content stripping by c more
        acc *= Fraction(lb ** (da - (len(r) - 1)) * c ** db,
                        lb ** ((da - db + 1) * db))
        if da & 1 and db & 1:
            acc = -acc
        a, b = b, r


def _zz_primitive_pos(a):
    """(positive content, primitive part) keeping the sign on the part."""
    g = 0
    for c in a:
        g = gcd(g, c)
    if g == 0:
        return 1, list(a)
    return g, [c // g for c in a]


def _zz_prem(a, b):
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a mod b, over Z."""
    a = zz_strip(list(a))
    db = len(b) - 1
    lb = b[-1]
    da = len(a) - 1
    if da < db:
        return a
    n = da - db + 1
    while a and len(a) - 1 >= db:
        d = len(a) - 1
        top = a[-1]
        a = [lb * c for c in a]
        for j in range(db + 1):
            a[d - db + j] -= top * b[j]
        zz_strip(a)
        n -= 1
    if n > 0 and a:
        f = lb ** n
        a = [c * f for c in a]
    return a


# ---------------------------------------------------------------------------
# Integer coefficient helpers (lists of ints, constant term first).

def zz_strip(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    del a[n:]
    return a


def zz_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def zz_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return zz_strip(out)


def zz_sub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return zz_strip(out)


def zz_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def zz_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def zz_primitive(a):
    g = zz_content(a)
    if g == 0:
        return 0, []
    if a[-1] < 0:
        g = -g
    return g, [c // g for c in a]


# ---------------------------------------------------------------------------
# Polynomials over Z/nZ.

def gf_strip(a, n):
    out = [c % n for c in a]
    k = len(out)
    while k and out[k - 1] == 0:
        k -= 1
    del out[k:]
    return out


def gf_add(a, b, n):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % n
    return gf_strip(out, n)


def gf_sub(a, b, n):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % n
    return gf_strip(out, n)


def gf_mul(a, b, n):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return gf_strip(out, n)


def gf_scale(a, c, n):
    c %= n
    return gf_strip([x * c for x in a], n)


def gf_divrem(a, b, p):
    """Division over the field Z/pZ (p prime, b nonzero)."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = [c % p for c in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], gf_strip(a, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            f = c * inv % p
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return gf_strip(q, p), gf_strip(a, p)


def gf_rem(a, b, p):
    return gf_divrem(a, b, p)[1]


def gf_gcd(a, b, p):
    a = gf_strip(a, p)
    b = gf_strip(b, p)
    while b:
        a, b = b, gf_rem(a, b, p)
    if a:
        a = gf_scale(a, pow(a[-1], -1, p), p)
    return a


def gf_monic(a, p):
    if not a:
        return a
    return gf_scale(a, pow(a[-1], -1, p), p)


def gf_pow_mod(a, e, mod, p):
    result = [1]
    a = gf_rem(a, mod, p)
    while e:
        if e & 1:
            result = gf_rem(gf_mul(result, a, p), mod, p)
        a = gf_rem(gf_mul(a, a, p), mod, p)
        e >>= 1
    return result


def gf_deriv(a, p):
    return gf_strip([a[k] * k for k in range(1, len(a))], p)


def gf_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


class PolyZn:
    """Polynomial with coefficients reduced mod n; thin wrapper over lists."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus, coeffs=()):
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        self.coeffs = tuple(gf_strip(list(coeffs), modulus))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return (isinstance(other, PolyZn) and self.modulus == other.modulus
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        return "PolyZn(mod %d, %s)" % (self.modulus, list(self.coeffs))

    def __add__(self, other):
        self._check(other)
        return PolyZn(self.modulus, gf_add(list(self.coeffs), list(other.coeffs), self.modulus))

    def __sub__(self, other):
        self._check(other)
        return PolyZn(self.modulus, gf_sub(list(self.coeffs), list(other.coeffs), self.modulus))

    def __mul__(self, other):
        self._check(other)
        return PolyZn(self.modulus, gf_mul(list(self.coeffs), list(other.coeffs), self.modulus))

    def divrem(self, other):
        self._check(other)
        q, r = gf_divrem(list(self.coeffs), list(other.coeffs), self.modulus)
        return PolyZn(self.modulus, q), PolyZn(self.modulus, r)

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")

    @staticmethod
    def from_polyq(f: PolyQ, n: int) -> "PolyZn":
        out = []
        for c in f.coeffs:
            if gcd(c.denominator, n) != 1:
                raise ValueError("denominator not invertible mod %d" % n)
            out.append(c.numerator * pow(c.denominator, -1, n) % n)
        return PolyZn(n, out)
