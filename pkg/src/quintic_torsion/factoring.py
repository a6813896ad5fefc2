"""Factorization of univariate polynomials over Q.

Pipeline: content/primitive split, Yun squarefree decomposition, modular
factorization at several small primes, quadratic Hensel lifting, and
Zassenhaus subset recombination.  A degree pre-filter intersected across
at least three good primes prunes the recombination and certifies
irreducibility early.  Prime choice is deterministic (smallest good
primes >= 5), and the equal-degree splitting RNG is seeded from the
input, so results are reproducible bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from .polynomials import (
    PolyQ,
    gf_deriv,
    gf_divrem,
    gf_gcd,
    gf_monic,
    gf_mul,
    gf_pow_mod,
    gf_rem,
    gf_scale,
    gf_strip,
    gf_sub,
    zz_eval,
    zz_mul,
    zz_primitive,
    zz_strip,
)

MIN_GOOD_PRIME = 5
DEGREE_FILTER_PRIMES = 3


# ---------------------------------------------------------------------------
# Squarefree decomposition (Yun).

def squarefree_certified(f: PolyQ) -> bool:
    """True when a single good prime certifies gcd(f, f') = 1; a False
    return is inconclusive.  Sound because the rational gcd divides the
    reduction of both arguments at any prime preserving the degree."""
    if f.degree <= 1:
        return True
    fint = f.to_int_coeffs()
    dint = [fint[i] * i for i in range(1, len(fint))]
    tried = 0
    p = MIN_GOOD_PRIME - 1
    while tried < 5:
        p = _next_prime(p)
        if fint[-1] % p == 0:
            continue
        tried += 1
        fp = gf_strip(list(fint), p)
        dp = gf_strip(list(dint), p)
        if dp and len(gf_gcd(fp, dp, p)) == 1:
            return True
    return False


def squarefree_decomposition(f: PolyQ):
    """Return (unit, [(g, m), ...]) with f = unit * prod g^m, each g monic
    squarefree, the g pairwise coprime, m strictly increasing."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    unit = f.leading()
    f = f.monic()
    if f.degree == 0:
        return unit, []
    if squarefree_certified(f):
        return unit, [(f, 1)]
    out = []
    df = f.derivative()
    a = _gcd_monic(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = _gcd_monic(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return unit, out


def _gcd_monic(a, b):
    if b.is_zero():
        return a.monic()
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_squarefree(f: PolyQ) -> bool:
    return f.degree <= 1 or _gcd_monic(f, f.derivative()).degree == 0


# ---------------------------------------------------------------------------
# Factorization over GF(p).

def _edf_seed(f, p):
    return "edf:%d:%s" % (p, ",".join(map(str, f)))


def gf_factor_squarefree(f, p):
    """Monic irreducible factors of a squarefree monic f over GF(p)."""
    factors = []
    for part, d in gf_distinct_degree(f, p):
        factors.extend(_gf_equal_degree(part, d, p))
    factors.sort(key=lambda g: (len(g), tuple(reversed(g))))
    return factors


def gf_distinct_degree(f, p):
    """Distinct-degree split: [(product of irreducible factors of degree d, d)]."""
    out = []
    x = [0, 1]
    h = x
    fstar = list(f)
    d = 0
    while len(fstar) - 1 >= 2 * (d + 1):
        d += 1
        h = gf_pow_mod(h, p, fstar, p)
        g = gf_gcd(fstar, gf_sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            fstar = gf_divrem(fstar, g, p)[0]
            h = gf_rem(h, fstar, p)
    if len(fstar) > 1:
        out.append((fstar, len(fstar) - 1))
    return out


def _gf_equal_degree(f, d, p, rng=None):
    n = len(f) - 1
    if n == d:
        return [gf_monic(f, p)]
    if rng is None:
        rng = random.Random(_edf_seed(f, p))
    if p == 2:
        raise NotImplementedError("p = 2 is never selected as a good prime")
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        r = gf_strip(r, p)
        if len(r) <= 1:
            continue
        h = gf_pow_mod(r, (p ** d - 1) // 2, f, p)
        g = gf_gcd(f, gf_sub(h, [1], p), p)
        if 0 < len(g) - 1 < n:
            left = _gf_equal_degree(g, d, p, rng)
            right = _gf_equal_degree(gf_divrem(f, g, p)[0], d, p, rng)
            return left + right


def gf_factor_degrees(f, p):
    """Degree multiset of the irreducible factors of squarefree f mod p."""
    degs = []
    for part, d in gf_distinct_degree(f, p):
        degs.extend([d] * ((len(part) - 1) // d))
    return sorted(degs)


# ---------------------------------------------------------------------------
# Hensel lifting.

def _trunc_sym(f, m):
    out = []
    half = m // 2
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return zz_strip(out)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from a factorization mod m to one mod m**2."""
    M = m * m
    e = _trunc_sym(zz_sub_list(f, zz_mul(g, h)), M)
    q, r = _zz_divrem_mod(zz_mul(s, e), h, M)
    G = _trunc_sym(zz_add_list(zz_add_list(g, zz_mul(t, e)), zz_mul(q, g)), M)
    H = _trunc_sym(zz_add_list(h, r), M)
    b = _trunc_sym(zz_sub_list(zz_add_list(zz_mul(s, G), zz_mul(t, H)), [1]), M)
    c, d = _zz_divrem_mod(zz_mul(s, b), H, M)
    S = _trunc_sym(zz_sub_list(s, d), M)
    T = _trunc_sym(zz_sub_list(zz_sub_list(t, zz_mul(t, b)), zz_mul(c, G)), M)
    return G, H, S, T


def zz_add_list(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] += c
    return zz_strip(out)


def zz_sub_list(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return zz_strip(out)


def _zz_divrem_mod(a, b, m):
    """Division mod m by b with unit leading coefficient mod m."""
    a = [c % m for c in a]
    b = [c % m for c in b]
    b = zz_strip(list(b))
    db = len(b) - 1
    inv = pow(b[-1], -1, m)
    if len(a) - 1 < db:
        return [], _trunc_sym(a, m)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % m
        if c:
            fct = c * inv % m
            q[i - db] = fct
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - fct * b[j]) % m
    return _trunc_sym(q, m), _trunc_sym(a, m)


def hensel_lift(p, f, modular_factors, target):
    """Lift monic modular factors of primitive f from mod p to mod p**l with
    p**l >= target; returns (p**l, lifted factor list).  The product of the
    lifted factors times lc(f) agrees with f mod p**l."""
    ell = 1
    modulus = p
    while modulus < target:
        modulus *= p
        ell += 1
    # number of quadratic doublings needed
    d = 0
    m = p
    while m < modulus:
        m = m * m
        d += 1
    lifted = _hensel_multi(p, f, list(modular_factors), d)
    return p ** (2 ** d) if d else p, lifted


def _hensel_multi(p, f, factors, d):
    r = len(factors)
    lc = f[-1]
    if r == 1:
        pl = p ** (2 ** d) if d else p
        inv = pow(lc % pl, -1, pl)
        return [_trunc_sym([c * inv for c in f], pl)]
    k = r // 2
    g = [lc % p]
    for fi in factors[:k]:
        g = gf_mul(g, fi, p)
    h = [1]
    for fi in factors[k:]:
        h = gf_mul(h, fi, p)
    s, t = _gf_gcdex(g, h, p)
    g = _trunc_sym(g, p)
    h = _trunc_sym(h, p)
    s = _trunc_sym(s, p)
    t = _trunc_sym(t, p)
    m = p
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return (_hensel_multi_lifted(p, g, factors[:k], d)
            + _hensel_multi_lifted(p, h, factors[k:], d))


def _hensel_multi_lifted(p, f, factors, d):
    if len(factors) == 1:
        pl = p ** (2 ** d) if d else p
        lc = f[-1]
        inv = pow(lc % pl, -1, pl)
        return [_trunc_sym([c * inv for c in f], pl)]
    return _hensel_multi(p, f, factors, d)


def _gf_gcdex(a, b, p):
    """s, t with s*a + t*b = 1 mod p for coprime a, b."""
    r0, r1 = gf_strip(list(a), p), gf_strip(list(b), p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gf_divrem(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    if len(r0) != 1:
        raise ValueError("polynomials not coprime mod %d" % p)
    inv = pow(r0[0], -1, p)
    return gf_scale(s0, inv, p), gf_scale(t0, inv, p)


# ---------------------------------------------------------------------------
# Zassenhaus over Z.

def _good_primes(f, count, start=MIN_GOOD_PRIME):
    """Smallest primes >= start not dividing lc(f) with f squarefree mod p."""
    found = []
    p = start - 1
    lc = f[-1]
    while len(found) < count:
        p = _next_prime(p)
        if lc % p == 0:
            continue
        fp = gf_strip(list(f), p)
        if len(fp) != len(f):
            continue
        if len(gf_gcd(fp, gf_deriv(fp, p), p)) == 1:
            found.append(p)
    return found


def _next_prime(n):
    n += 1
    while not _is_prime(n):
        n += 1
    return n


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def subset_sums(degrees, cap):
    """All achievable subset sums of a degree multiset, up to cap."""
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums if s + d <= cap}
    return sums


def possible_factor_degrees(f_int, primes=None, count=DEGREE_FILTER_PRIMES):
    """Intersection over several good primes of the achievable factor degree
    sums of a squarefree primitive integer polynomial."""
    n = len(f_int) - 1
    if primes is None:
        primes = _good_primes(f_int, count)
    allowed = set(range(n + 1))
    for p in primes:
        degs = gf_factor_degrees(gf_strip(list(f_int), p), p)
        allowed &= subset_sums(degs, n)
    return allowed


def _mignotte_bound(f):
    n = len(f) - 1
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return (1 << n) * norm2 * abs(f[-1])


def factor_zz_squarefree(f, degree_target=None):
    """Irreducible factors (primitive, positive leading) of a squarefree
    primitive integer polynomial with positive leading coefficient.

    With degree_target set, only the irreducible factors of that exact
    degree are returned; the modular degree analysis lets hopeless inputs
    bail out before any lifting happens.
    """
    n = len(f) - 1
    if n == 0:
        return []
    if n == 1:
        return [list(f)] if degree_target in (None, 1) else []
    primes = _good_primes(f, max(DEGREE_FILTER_PRIMES, 1))
    allowed = possible_factor_degrees(f, primes=primes)
    if degree_target is not None and degree_target not in allowed:
        return []
    if allowed == {0, n}:
        return [list(f)] if degree_target in (None, n) else []

    best_p = None
    best_factors = None
    for p in primes:
        fp = gf_monic(gf_strip(list(f), p), p)
        facs = gf_factor_squarefree(fp, p)
        if best_factors is None or len(facs) < len(best_factors):
            best_p, best_factors = p, facs
    p = best_p
    bound = _mignotte_bound(f)
    pl, lifted = hensel_lift(p, list(f), best_factors, 2 * bound + 1)

    result = _recombine(f, lifted, pl, allowed)
    if degree_target is not None:
        result = [g for g in result if len(g) - 1 == degree_target]
    return result


def _recombine(f, lifted, pl, allowed):
    lifted = list(lifted)
    f = list(f)
    result = []
    s = 1
    half = pl // 2
    screen_pts = (0, 1, -1)
    while 2 * s <= len(lifted):
        lc = f[-1]
        fvals = [zz_eval(f, t) for t in screen_pts]
        gvals = [[zz_eval(g, t) % pl for t in screen_pts] for g in lifted]
        used = None
        for combo in combinations(range(len(lifted)), s):
            dsum = sum(len(lifted[i]) - 1 for i in combo)
            if dsum not in allowed:
                continue
            # evaluation screens at 0, 1, -1 before building the product
            ok = True
            for t in range(len(screen_pts)):
                if fvals[t] == 0:
                    continue
                v = lc % pl
                for i in combo:
                    v = v * gvals[i][t] % pl
                if v > half:
                    v -= pl
                if v == 0 or (lc * fvals[t]) % v != 0:
                    ok = False
                    break
            if not ok:
                continue
            g = [lc]
            for i in combo:
                g = _trunc_sym(zz_mul(g, lifted[i]), pl)
            _, gp = zz_primitive(g)
            if not gp:
                continue
            q, ok = _zz_trial_div(f, gp)
            if ok:
                result.append(gp)
                f = q
                lifted = [lifted[i] for i in range(len(lifted)) if i not in combo]
                used = combo
                break
        if used is None:
            s += 1
    if len(f) - 1 > 0:
        result.append(zz_primitive(f)[1])
    result.sort(key=lambda g: (len(g), tuple(reversed(g))))
    return result


_TRIAL_PRIME = (1 << 61) - 1


def _zz_trial_div(f, g):
    """Exact division of integer polynomials; (quotient, True) on success.
    A single-word modular division runs first to reject non-divisors
    before any big-integer work."""
    db = len(g) - 1
    if len(f) - 1 < db:
        return None, False
    q = _TRIAL_PRIME
    if g[-1] % q:
        a = [c % q for c in f]
        inv = pow(g[-1] % q, -1, q)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                fct = c * inv % q
                for j in range(db + 1):
                    a[i - db + j] = (a[i - db + j] - fct * g[j]) % q
        if any(a[:db]):
            return None, False
    a = list(f)
    lb = g[-1]
    qout = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c % lb:
            return None, False
        fct = c // lb
        qout[i - db] = fct
        for j in range(db + 1):
            a[i - db + j] -= fct * g[j]
    if zz_strip(a):
        return None, False
    return zz_strip(qout), True


# ---------------------------------------------------------------------------
# Public interface over Q.

@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor**multiplicity) with monic irreducible factors."""

    unit: Fraction
    factors: tuple

    def expand(self) -> PolyQ:
        out = PolyQ.constant(self.unit)
        for g, m in self.factors:
            out = out * g ** m
        return out

    def degrees(self):
        out = []
        for g, m in self.factors:
            out.extend([g.degree] * m)
        return sorted(out)

    def __iter__(self):
        return iter(self.factors)


def factor_over_Q(f: PolyQ) -> Factorization:
    """Complete irreducible factorization over Q with deterministic ordering
    (by degree, then lexicographically on coefficient tuples)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit, parts = squarefree_decomposition(f)
    factors = []
    for part, mult in parts:
        fint = part.to_int_coeffs()
        for g in factor_zz_squarefree(fint):
            gq = PolyQ(g).monic()
            factors.append((gq, mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return Factorization(Fraction(unit), tuple(factors))


def irreducible_over_Q(f: PolyQ) -> bool:
    if f.degree < 1:
        return False
    fac = factor_over_Q(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


def factors_of_degree(f: PolyQ, d: int):
    """Monic irreducible degree-d factors of f over Q, gated by a modular
    degree analysis so that hopeless inputs return early."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    _, parts = squarefree_decomposition(f)
    out = []
    for part, _ in parts:
        fint = part.to_int_coeffs()
        if len(fint) - 1 < d:
            continue
        for g in factor_zz_squarefree(fint, degree_target=d):
            out.append(PolyQ(g).monic())
    out.sort(key=lambda g: g.coeffs)
    return out


def degree_combination_possible(f: PolyQ, d: int, prime_count=DEGREE_FILTER_PRIMES):
    """True when the modular degree analysis across `prime_count` good primes
    leaves a subset of factor degrees summing to d."""
    _, parts = squarefree_decomposition(f)
    total = set()
    acc = {0}
    for part, _ in parts:
        fint = part.to_int_coeffs()
        allowed = possible_factor_degrees(fint, count=prime_count)
        acc = {a + b for a in acc for b in allowed if a + b <= d}
    total = acc
    return d in total


def rational_roots(f: PolyQ):
    """All rational roots of f (without multiplicity), deterministic order.

    Uses modular roots, Newton lifting and rational reconstruction rather
    than divisor enumeration, so large coefficients stay cheap.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    fint = f.to_int_coeffs()
    roots = set()
    # strip powers of x
    k = 0
    while fint[0] == 0:
        fint = fint[1:]
        roots.add(Fraction(0))
        k += 1
        if len(fint) == 1:
            return sorted(roots)
    if len(fint) - 1 == 0:
        return sorted(roots)
    # work squarefree
    fq = PolyQ(fint)
    g = _gcd_monic(fq, fq.derivative())
    if g.degree > 0:
        fq = fq.exact_div(g)
        for r in rational_roots(fq):
            roots.add(r)
        for r in rational_roots(g):
            roots.add(r)
        return sorted(roots)
    fint = fq.to_int_coeffs()
    if len(fint) == 2:
        roots.add(Fraction(-fint[0], fint[1]))
        return sorted(roots)
    a0, an = abs(fint[0]), abs(fint[-1])
    p = _good_primes(fint, 1)[0]
    bound = 2 * a0 * an + 1
    fp = gf_strip(list(fint), p)
    xp = gf_pow_mod([0, 1], p, fp, p)
    lin = gf_gcd(fp, gf_sub(xp, [0, 1], p), p)
    if len(lin) <= 1:
        return sorted(roots)
    mod_roots = [(-c) % p for c in _linear_factors_constants(lin, p)]
    dfint = [fint[i] * i for i in range(1, len(fint))]
    for r0 in mod_roots:
        r = r0
        pk = p
        while pk < bound:
            pk = pk * pk
            fr = zz_eval(fint, r) % pk
            dfr = zz_eval(dfint, r) % pk
            if dfr % p == 0:
                break
            r = (r - fr * pow(dfr, -1, pk)) % pk
        else:
            cand = _rational_reconstruct(r, pk, a0, an)
            if cand is not None and f(cand) == 0:
                roots.add(cand)
            continue
    return sorted(roots)


def _linear_factors_constants(lin, p):
    """Constant terms of the linear factors of a product of distinct linear
    polynomials mod p."""
    out = []
    stack = [lin]
    rng = random.Random(_edf_seed(lin, p))
    while stack:
        g = stack.pop()
        d = len(g) - 1
        if d == 0:
            continue
        if d == 1:
            gm = gf_monic(g, p)
            out.append(gm[0])
            continue
        while True:
            a = rng.randrange(p)
            h = gf_pow_mod([a, 1], (p - 1) // 2, g, p)
            split = gf_gcd(g, gf_sub(h, [1], p), p)
            if 0 < len(split) - 1 < d:
                stack.append(split)
                stack.append(gf_divrem(g, split, p)[0])
                break
    return out


def _rational_reconstruct(r, m, num_bound, den_bound):
    """u/v with u = r*v mod m, |u| <= num_bound, 0 < v <= den_bound."""
    a, b = m, r % m
    ua, ub = 0, 1
    while b > num_bound:
        q = a // b
        a, b = b, a - q * b
        ua, ub = ub, ua - q * ub
    if ub == 0:
        return None
    v = ub
    u = b
    if v < 0:
        u, v = -u, -v
    if v > den_bound or v == 0:
        return None
    if gcd(abs(u), v) != 1:
        return None
    return Fraction(u, v)
