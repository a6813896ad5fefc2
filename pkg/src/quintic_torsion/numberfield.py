"""Number fields Q[x]/(f) in the power basis of the defining polynomial.

Root finding inside a field uses Trager's method: shift the input so the
norm (a resultant against the defining polynomial) is squarefree, factor
the norm over Q, and pull degree-compatible factors back through a gcd
over the field.  No integral bases or maximal orders appear anywhere;
field arithmetic is all the torsion machinery needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .factoring import (
    _good_primes,
    _next_prime,
    factor_over_Q,
    gf_distinct_degree,
    irreducible_over_Q,
)
from .polynomials import (
    PolyQ,
    discriminant,
    gf_gcd,
    gf_monic,
    gf_pow_mod,
    gf_strip,
    gf_sub,
    interpolate,
    poly_xgcd,
    resultant,
)


class NumberField:
    """Q[x]/(defining_poly) with defining_poly monic irreducible."""

    def __init__(self, defining_poly: PolyQ, skip_check=False):
        f = defining_poly.monic()
        if f.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        if not skip_check and f.degree > 1 and not irreducible_over_Q(f):
            raise ValueError("defining polynomial is reducible over Q")
        self.defining_poly = f
        self.degree = f.degree
        d = self.degree
        # reduction table: x^(d+k) mod f for k = 0 .. d-2
        rows = []
        cur = [-c for c in f.coeffs[:-1]]
        rows.append(tuple(cur))
        for _ in range(d - 2):
            cur = [Fraction(0)] + list(cur)
            top = cur.pop()
            if top:
                head = rows[0]
                cur = [cur[i] + top * head[i] for i in range(d)]
            rows.append(tuple(cur))
        self._red = rows

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining_poly == other.defining_poly

    def __hash__(self):
        return hash(self.defining_poly)

    def __repr__(self):
        return "NumberField(%r)" % (self.defining_poly,)

    def elem(self, coords) -> "NFElem":
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.degree:
            poly = PolyQ(cs) % self.defining_poly
            cs = list(poly.coeffs)
        cs += [Fraction(0)] * (self.degree - len(cs))
        return NFElem(self, tuple(cs))

    def zero(self):
        return self.elem(())

    def one(self):
        return self.elem((1,))

    def gen(self):
        if self.degree == 1:
            return self.elem((-self.defining_poly[0],))
        return self.elem((0, 1))

    def rational(self, c):
        return self.elem((Fraction(c),))

    def serialize(self):
        """Integer-cleared coefficient list of the defining polynomial,
        lowest degree first."""
        return self.defining_poly.to_int_coeffs()


class NFElem:
    """Element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def __repr__(self):
        return "NFElem(%s)" % (list(self.coords),)

    def __eq__(self, other):
        if isinstance(other, NFElem):
            if self.field != other.field:
                raise ValueError("field mismatch")
            return self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self == self.field.rational(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return not any(self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def _coerce(self, other):
        if isinstance(other, NFElem):
            if self.field != other.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        raise TypeError("cannot coerce %r" % (other,))

    def __add__(self, other):
        other = self._coerce(other)
        return NFElem(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coords, other.coords
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = list(prod[:d])
        red = self.field._red
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = red[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return NFElem(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        g, s, _ = poly_xgcd(PolyQ(self.coords), self.field.defining_poly)
        if g.degree != 0:
            raise ArithmeticError("defining polynomial not irreducible")
        return self.field.elem((s % self.field.defining_poly).coeffs)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def as_poly(self):
        return PolyQ(self.coords)

    def minimal_polynomial(self) -> PolyQ:
        """Monic minimal polynomial over Q (degree divides the field degree)."""
        d = self.field.degree
        powers = [self.field.one().coords]
        cur = self.field.one()
        for _ in range(d):
            cur = cur * self
            powers.append(cur.coords)
        # first linear dependency among 1, e, e^2, ...
        for k in range(1, d + 1):
            sol = _solve_dependency(powers[: k + 1], d)
            if sol is not None:
                return PolyQ(sol)
        raise AssertionError("no dependency found")


def _solve_dependency(rows, d):
    """Monic dependency c_0*rows[0] + ... + rows[-1] = 0, as coefficient list
    [c_0, ..., c_{k-1}, 1]; None if rows are independent."""
    k = len(rows) - 1
    # solve sum_{i<k} c_i rows[i] = -rows[k]
    mat = [[Fraction(rows[i][j]) for i in range(k)] + [-Fraction(rows[k][j])]
           for j in range(d)]
    pivots = []
    r = 0
    for c in range(k):
        pr = None
        for i in range(r, d):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(d):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    # consistency
    for i in range(r, d):
        if mat[i][k]:
            return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = mat[i][k]
    return sol + [Fraction(1)]


# ---------------------------------------------------------------------------
# Polynomials over a number field (lists of NFElem, constant term first).

def pk_strip(a):
    n = len(a)
    while n and a[n - 1].is_zero():
        n -= 1
    return a[:n]


def pk_from_polyq(g: PolyQ, K: NumberField):
    return pk_strip([K.rational(c) for c in g.coeffs])


def pk_add(a, b, K):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return pk_strip(out)


def pk_neg(a):
    return [-c for c in a]


def pk_sub(a, b, K):
    return pk_add(a, pk_neg(b), K)


def pk_mul(a, b, K):
    if not a or not b:
        return []
    out = [K.zero() for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return pk_strip(out)


def pk_divrem(a, b, K):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    if len(a) - 1 < db:
        return [], pk_strip(a)
    q = [K.zero() for _ in range(len(a) - db)]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c.is_zero():
            continue
        f = c * inv
        q[i - db] = f
        for j in range(db + 1):
            a[i - db + j] = a[i - db + j] - f * b[j]
    return pk_strip(q), pk_strip(a)


def pk_gcd_monic(a, b, K):
    a, b = pk_strip(list(a)), pk_strip(list(b))
    while b:
        a, b = b, pk_divrem(a, b, K)[1]
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def pk_deriv(a, K):
    return pk_strip([a[k] * k for k in range(1, len(a))])


def pk_eval(a, x, K):
    acc = K.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Trager norms and root finding.

def _norm_of_pk(coeffs, K):
    """Norm from K[z] to Q[z] of a polynomial with NFElem coefficients,
    computed as Res_T(f(T), G(T, z)) by evaluation and interpolation.
    The defining polynomial being monic, evaluation commutes with the
    resultant even where the T-degree drops."""
    from .polynomials import resultant_int

    f = K.defining_poly
    d = K.degree
    m = len(coeffs) - 1
    bound = d * m
    cf, fpp = f.primitive()
    fint = [int(c) for c in fpp.coeffs]
    cpolys = [PolyQ(c.coords) for c in coeffs]
    pts = []
    for zj in _eval_points(bound + 1):
        acc = PolyQ.zero()
        power = Fraction(1)
        for cp in cpolys:
            if cp:
                acc = acc + cp.scale(power)
            power *= zj
        if acc.is_zero():
            val = Fraction(0)
        elif acc.degree == 0:
            val = acc.leading() ** d
        else:
            cg, gpp = acc.primitive()
            gint = [int(c) for c in gpp.coeffs]
            val = cg ** d * cf ** gpp.degree * resultant_int(fint, gint)
        pts.append((zj, val))
    return interpolate(pts)


def _eval_points(count):
    """0, 1, -1, 2, -2, ... (count values)."""
    out = [Fraction(0)]
    k = 1
    while len(out) < count:
        out.append(Fraction(k))
        if len(out) < count:
            out.append(Fraction(-k))
        k += 1
    return out[:count]


def _squarefree_over_K(coeffs, K):
    g = pk_strip(list(coeffs))
    if len(g) - 1 <= 1:
        return g
    dgcd = pk_gcd_monic(g, pk_deriv(g, K), K)
    if len(dgcd) - 1 > 0:
        g = pk_divrem(g, dgcd, K)[0]
    return g


def roots_in_field(coeffs, K: NumberField):
    """All roots in K of a nonzero polynomial with NFElem coefficients,
    each verified by exact evaluation; deterministic order."""
    g = _squarefree_over_K(coeffs, K)
    if not g:
        raise ValueError("zero polynomial")
    if len(g) == 1:
        return []
    if len(g) == 2:
        root = -g[0] / g[1]
        return [root]
    theta = K.gen()
    for s in _shift_sequence():
        shifted = _pk_compose_shift(g, s, theta, K)
        norm = _norm_of_pk(shifted, K)
        if norm.is_zero():
            continue
        if _squarefree_norm(norm):
            break
    roots = []
    d = K.degree
    for factor, _ in factor_over_Q(norm).factors:
        if factor.degree != d:
            continue
        u = pk_gcd_monic(shifted, pk_from_polyq(factor, K), K)
        if len(u) - 1 == 1:
            rho = -u[0]
            root = rho - K.rational(s) * theta
            if pk_eval(coeffs, root, K).is_zero():
                roots.append(root)
    roots.sort(key=lambda r: r.coords)
    return roots


def _pk_compose_shift(g, s, theta, K):
    """g(z - s*theta) by Horner in K[z]."""
    base = [K.rational(-s) * theta, K.one()]
    acc = []
    for c in reversed(g):
        acc = pk_mul(acc, base, K)
        acc = pk_add(acc, [c], K)
    return pk_strip(acc)


def _shift_sequence():
    yield 0
    k = 1
    while k < 40:
        yield k
        yield -k
        k += 1
    raise ArithmeticError("no squarefree shift found")


def _squarefree_norm(norm: PolyQ) -> bool:
    from .factoring import squarefree_certified

    dn = norm.derivative()
    if dn.is_zero():
        return False
    if squarefree_certified(norm):
        return True
    return _poly_gcd_deg(norm, dn) == 0


def _poly_gcd_deg(a, b):
    while not b.is_zero():
        a, b = b, a % b
    return a.degree


def nf_roots(g: PolyQ, K: NumberField):
    """All roots of a rational polynomial lying in K, deterministic order.

    Factors over Q first; only factors whose degree divides the field
    degree can contribute, and rational roots are read off directly.
    """
    if g.is_zero():
        raise ValueError("zero polynomial")
    if g.degree == 0:
        return []
    roots = []
    for factor, _ in factor_over_Q(g).factors:
        if factor.degree == 1:
            roots.append(K.rational(-factor[0]))
        elif factor.degree > 1 and K.degree % factor.degree == 0 and factor.degree <= K.degree:
            roots.extend(roots_in_field(pk_from_polyq(factor, K), K))
    roots.sort(key=lambda r: r.coords)
    return roots


def factor_degrees_over(g: PolyQ, K: NumberField):
    """Degrees of the irreducible factors of a squarefree g over K."""
    coeffs = pk_from_polyq(g, K)
    gsf = _squarefree_over_K(coeffs, K)
    theta = K.gen()
    for s in _shift_sequence():
        shifted = _pk_compose_shift(gsf, s, theta, K)
        norm = _norm_of_pk(shifted, K)
        if norm.is_zero():
            continue
        if _squarefree_norm(norm):
            break
    degs = []
    for factor, mult in factor_over_Q(norm).factors:
        if factor.degree % K.degree:
            raise AssertionError("norm factor degree not divisible by field degree")
        degs.extend([factor.degree // K.degree] * mult)
    return sorted(degs)


def sqrt_in_field(c: NFElem):
    """A square root of c in its field, or None.  For odd-degree fields a
    rational c can only have a rational square root."""
    K = c.field
    if c.is_zero():
        return K.zero()
    if c.is_rational():
        r = _rational_sqrt(c.rational_value())
        if r is not None:
            return K.rational(r)
        if K.degree % 2:
            return None
    roots = roots_in_field([-c, K.zero(), K.one()], K)
    return roots[0] if roots else None


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


# ---------------------------------------------------------------------------
# Field predicates.

def is_galois(K: NumberField) -> bool:
    """True when the defining polynomial splits completely in K."""
    if K.degree == 1:
        return True
    return len(nf_roots(K.defining_poly, K)) == K.degree


def are_isomorphic(K1: NumberField, K2: NumberField) -> bool:
    if K1.degree != K2.degree:
        return False
    if K1 == K2:
        return True
    return bool(nf_roots(K1.defining_poly, K2))


GALOIS_C5 = "galois_C5"
FROBENIUS_F5 = "frobenius_F5"
PROFILE_OTHER = "other"


def quintic_closure_profile(K: NumberField) -> str:
    """Classify the Galois closure of a quintic field: cyclic (degree 5),
    Frobenius of order 20, or anything else."""
    if K.degree != 5:
        raise ValueError("profile requires a quintic field")
    if is_galois(K):
        return GALOIS_C5
    f = K.defining_poly
    pattern = factor_degrees_over(f, K)
    if pattern != [1, 4]:
        # [1, 2, 2] is the dihedral closure of degree 10
        return PROFILE_OTHER
    if _rational_sqrt(discriminant(f)) is not None:
        # even Galois group, closure degree 60
        return PROFILE_OTHER
    return FROBENIUS_F5 if _is_frobenius_closure(K) else PROFILE_OTHER


def _is_frobenius_closure(K: NumberField) -> bool:
    """Decide closure degree 20 for an irreducible quintic with factor
    pattern [1, 4] and nonsquare discriminant (Frobenius versus S5).

    The field M generated by two roots has degree 20 either way; the
    closure is Frobenius exactly when the quintic splits completely in M.
    Cheap residue-field root counts refute splitting; the expensive
    degree-20 factor count of the Trager norm confirms it.
    """
    f = K.defining_poly
    theta = K.gen()
    coeffs = pk_from_polyq(f, K)
    cofactor = pk_divrem(coeffs, [-theta, K.one()], K)[0]
    for s in _shift_sequence():
        shifted = _pk_compose_shift(cofactor, s, theta, K)
        norm = _norm_of_pk(shifted, K)
        if norm.is_zero():
            continue
        if _squarefree_norm(norm):
            break
    big = [g for g, _ in factor_over_Q(norm).factors if g.degree == 20]
    if not big:
        return False
    n20 = big[0].to_int_coeffs()
    fint = f.to_int_coeffs()
    if not _splits_in_all_residue_fields(fint, n20, prime_count=8):
        return False
    # confirm: count roots of f in M = Q[w]/(n20)
    M = NumberField(PolyQ(n20).monic(), skip_check=True)
    return len(nf_roots(f, M)) == 5


def _splits_in_all_residue_fields(fint, n20, prime_count=8):
    """Necessary condition for f to split in Q[w]/(n20): five roots in the
    residue field of every unramified prime tested."""
    tested = 0
    p = 4
    while tested < prime_count:
        p = _next_prime(p)
        fp = gf_strip(list(fint), p)
        np_ = gf_strip(list(n20), p)
        if len(fp) != len(fint) or len(np_) != len(n20):
            continue
        dfp = gf_strip([fp[i] * i for i in range(1, len(fp))], p)
        dnp = gf_strip([np_[i] * i for i in range(1, len(np_))], p)
        if len(gf_gcd(fp, dfp, p)) != 1 or len(gf_gcd(np_, dnp, p)) != 1:
            continue
        tested += 1
        for _, e in gf_distinct_degree(gf_monic(np_, p), p):
            # number of roots of f in GF(p**e)
            xq = gf_pow_mod([0, 1], p ** e, fp, p)
            nroots = len(gf_gcd(fp, gf_sub(xq, [0, 1], p), p)) - 1
            if nroots < 5:
                return False
    return True


# ---------------------------------------------------------------------------
# Normalized defining polynomials for reporting.

def normalized_defining_poly(K: NumberField) -> PolyQ:
    """Smallest-coefficient monic integral defining polynomial found by a
    bounded search over short power-basis combinations of the generator."""
    best = _integral_monic(K.defining_poly)
    best_key = _poly_key(best)
    theta = K.gen()
    d = K.degree
    candidates = []
    for a in range(-2, 3):
        for e in (1, -1):
            candidates.append(K.rational(e) * theta + K.rational(a))
    for k in range(2, 7):
        candidates.append(theta * K.rational(Fraction(1, k)))
        candidates.append(theta * K.rational(k))
    if d <= 5:
        second = theta * theta
        for a in (-1, 0, 1):
            for b in (-1, 0, 1):
                for c in (-1, 0, 1):
                    if b == 0 and c == 0:
                        continue
                    candidates.append(K.rational(a) + K.rational(b) * theta
                                      + K.rational(c) * second)
    for cand in candidates:
        mp = cand.minimal_polynomial()
        if mp.degree != d:
            continue
        normed = _integral_monic(mp)
        key = _poly_key(normed)
        if key < best_key:
            best, best_key = normed, key
    return best


def _integral_monic(f: PolyQ) -> PolyQ:
    """Integral monic polynomial defining the same field: scale the root by
    the least k clearing all denominators of the monic form."""
    f = f.monic()
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    if den == 1:
        return f
    k = _minimal_scaling(f)
    return f.scale_arg(Fraction(1, k)).scale(Fraction(k ** f.degree)).monic()


def _minimal_scaling(f: PolyQ) -> int:
    n = f.degree
    k = 2
    while True:
        ok = True
        for i, c in enumerate(f.coeffs[:-1]):
            scaled = c * Fraction(k) ** (n - i)
            if scaled.denominator != 1:
                ok = False
                break
        if ok:
            return k
        k += 1


def _poly_key(f: PolyQ):
    ints = [abs(int(c)) for c in f.coeffs]
    return (max(ints), sum(ints), tuple(int(c) for c in f.coeffs))
