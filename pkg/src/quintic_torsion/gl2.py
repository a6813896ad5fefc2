"""Finite subgroups of GL2(Z/nZ): generation, orbits, and the constrained
subgroup searches behind the mod-25 and mod-125 verifications.

Matrices are (a, b, c, d) tuples acting on column vectors, v -> Mv.  The
searches enumerate subgroups of GL2(Z/5m) whose reduction mod m is a
prescribed group T: such a subgroup is an extension of T by a stable
subspace of the elementary abelian kernel I + m*M2(F5), and the possible
extensions are the solutions of an F5-linear system (a cocycle condition
over a spanning tree of the Cayley graph of T), taken modulo coboundaries.
An order-bounded cyclic-extension enumerator covers the bounded search,
where it is exact, and cross-checks the linear-algebra engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

MAX_ELEMENTS = 2_000_000


# ---------------------------------------------------------------------------
# Matrix helpers.

def mat_mul(A, B, n):
    a, b, c, d = A
    e, f, g, h = B
    return ((a * e + b * g) % n, (a * f + b * h) % n,
            (c * e + d * g) % n, (c * f + d * h) % n)


def mat_inv(A, n):
    a, b, c, d = A
    det = (a * d - b * c) % n
    di = pow(det, -1, n)
    return (d * di % n, -b * di % n, -c * di % n, a * di % n)


def mat_det(A, n):
    return (A[0] * A[3] - A[1] * A[2]) % n


def mat_identity(n):
    return (1 % n, 0, 0, 1 % n)


def mat_pow(A, k, n):
    R = mat_identity(n)
    while k:
        if k & 1:
            R = mat_mul(R, A, n)
        A = mat_mul(A, A, n)
        k >>= 1
    return R


def mat_order(A, n, cap=10 ** 6):
    R = A
    k = 1
    I = mat_identity(n)
    while R != I:
        R = mat_mul(R, A, n)
        k += 1
        if k > cap:
            raise ArithmeticError("order exceeds cap")
    return k


def mat_apply(A, v, n):
    a, b, c, d = A
    x, y = v
    return ((a * x + b * y) % n, (c * x + d * y) % n)


def mat_transpose(A):
    a, b, c, d = A
    return (a, c, b, d)


class MatGroup:
    """Subgroup of GL2(Z/nZ) with a materialized element set."""

    def __init__(self, modulus, generators, elements):
        self.modulus = modulus
        self.generators = tuple(generators)
        self.elements = frozenset(elements)
        self.order = len(self.elements)
        self._sorted = None

    @staticmethod
    def generate(gens, modulus, cap=MAX_ELEMENTS):
        """BFS closure of the generators; deterministic element order."""
        n = modulus
        gens = [tuple(x % n for x in g) for g in gens]
        for g in gens:
            try:
                mat_inv(g, n)
            except ValueError:
                raise ValueError("generator %r is not invertible mod %d" % (g, n))
        I = mat_identity(n)
        seen = {I}
        frontier = [I]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mat_mul(x, g, n)
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > cap:
                            raise RuntimeError("materialization cap exceeded")
                        nxt.append(y)
            frontier = nxt
        return MatGroup(n, gens, seen)

    def sorted_elements(self):
        if self._sorted is None:
            self._sorted = sorted(self.elements)
        return self._sorted

    def __contains__(self, A):
        return tuple(x % self.modulus for x in A) in self.elements

    def __eq__(self, other):
        return (isinstance(other, MatGroup) and self.modulus == other.modulus
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.modulus, self.elements))

    def __repr__(self):
        return "MatGroup(mod %d, order %d)" % (self.modulus, self.order)

    def reduce_mod(self, m) -> "MatGroup":
        if self.modulus % m:
            raise ValueError("m must divide the modulus")
        gens = [tuple(x % m for x in g) for g in self.generators]
        els = {tuple(x % m for x in e) for e in self.elements}
        return MatGroup(m, gens, els)

    def is_abelian(self):
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i):
                if mat_mul(gens[i], gens[j], self.modulus) != mat_mul(gens[j], gens[i], self.modulus):
                    return False
        return True

    def center_size(self):
        els = self.sorted_elements()
        count = 0
        for z in els:
            if all(mat_mul(z, g, self.modulus) == mat_mul(g, z, self.modulus)
                   for g in self.generators):
                count += 1
        return count

    def max_element_order(self):
        return max(mat_order(g, self.modulus, cap=self.order + 1)
                   for g in self.sorted_elements() if g != mat_identity(self.modulus))


# ---------------------------------------------------------------------------
# Orbits and level data.

def exact_order_vectors(n, N):
    """Vectors in (Z/n)^2 of exact additive order N (N | n)."""
    from math import gcd

    if n % N:
        raise ValueError("N must divide n")
    g0 = n // N
    out = []
    for x in range(n):
        for y in range(n):
            if gcd(gcd(x, y), n) == g0:
                out.append((x, y))
    return out


def vector_orbits(gens, n, vectors):
    """Partition the vector list into orbits under the generated action."""
    todo = set(vectors)
    orbits = []
    while todo:
        v = min(todo)
        orb = {v}
        frontier = [v]
        while frontier:
            w = frontier.pop()
            for g in gens:
                u = mat_apply(g, w, n)
                if u not in orb:
                    orb.add(u)
                    frontier.append(u)
        todo -= orb
        orbits.append(sorted(orb))
    return orbits


def orbit_capped(gens, n, v, cap):
    """Orbit of v, abandoned (returns None) once it exceeds cap elements."""
    orb = {v}
    frontier = [v]
    while frontier:
        w = frontier.pop()
        for g in gens:
            u = mat_apply(g, w, n)
            if u not in orb:
                orb.add(u)
                if len(orb) > cap:
                    return None
                frontier.append(u)
    return sorted(orb)


@dataclass(frozen=True)
class LevelData:
    """Fingerprint of a mod-p image: isogeny-line degree, point degrees,
    image order."""

    d0: int
    dv_set: frozenset
    d: int

    def as_tuple(self):
        return (self.d0, sorted(self.dv_set), self.d)


def level_data(G: MatGroup) -> LevelData:
    """The (d0, dv set, d) data of a subgroup of GL2(F_p): minimal orbit size
    on the p+1 lines, the set of orbit sizes on nonzero vectors, and the
    group order."""
    p = G.modulus
    if not _is_prime(p):
        raise ValueError("level data needs a prime modulus")
    gens = G.generators if G.generators else [mat_identity(p)]
    nonzero = [(x, y) for x in range(p) for y in range(p) if x or y]
    dv = frozenset(len(o) for o in vector_orbits(gens, p, nonzero))
    lines = [(1, b) for b in range(p)] + [(0, 1)]
    line_orbits = _line_orbits(gens, p, lines)
    d0 = min(len(o) for o in line_orbits)
    return LevelData(d0, dv, G.order)


def _line_orbits(gens, p, lines):
    def normalize(v):
        x, y = v
        if x:
            xi = pow(x, -1, p)
            return (1, y * xi % p)
        return (0, 1)

    todo = set(lines)
    orbits = []
    while todo:
        v = min(todo)
        orb = {v}
        frontier = [v]
        while frontier:
            w = frontier.pop()
            for g in gens:
                u = normalize(mat_apply(g, w, p))
                if u not in orb:
                    orb.add(u)
                    frontier.append(u)
        todo -= orb
        orbits.append(sorted(orb))
    return orbits


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# Abstract identification of small groups.

C5, C20, F5, OTHER = "C5", "C20", "F5", "other"


def identify_group(G) -> str:
    """C5 / C20 / F5 for groups of order 5 or 20, else "other".

    Among order-20 groups the Frobenius group is the one with trivial
    center; the cyclic one has an element of order 20.
    """
    if G.order == 5:
        return C5
    if G.order == 20:
        if G.max_element_order() == 20:
            return C20
        if G.center_size() == 1:
            return F5
    return OTHER


class PermGroup:
    """Tiny permutation group on range(k), materialized."""

    def __init__(self, perms, k):
        self.k = k
        ident = tuple(range(k))
        seen = {ident}
        frontier = [ident]
        gens = [tuple(p) for p in perms]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = tuple(x[g[i]] for i in range(k))
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        self.elements = frozenset(seen)
        self.order = len(seen)
        self.generators = gens

    def max_element_order(self):
        best = 1
        for p in self.elements:
            k = 1
            q = p
            ident = tuple(range(self.k))
            while q != ident:
                q = tuple(p[q[i]] for i in range(self.k))
                k += 1
            best = max(best, k)
        return best

    def center_size(self):
        def mul(a, b):
            return tuple(a[b[i]] for i in range(self.k))

        return sum(1 for z in self.elements
                   if all(mul(z, g) == mul(g, z) for g in self.generators))


def normal_core(G: MatGroup, S) -> frozenset:
    """Largest normal subgroup of G inside S (the intersection of the
    conjugates of S)."""
    n = G.modulus
    Sset = frozenset(tuple(x % n for x in s) for s in S)
    core = set(Sset)
    for x in G.sorted_elements():
        xi = mat_inv(x, n)
        core = {g for g in core if mat_mul(mat_mul(x, g, n), xi, n) in Sset}
        if len(core) == 1:
            break
    return frozenset(core)


def f5_lattice_census(G: MatGroup):
    """Subgroup counts of a Frobenius group of order 20, by index, plus a
    check that the five index-5 subgroups form a single conjugacy class."""
    if identify_group(G) != F5:
        raise ValueError("census requires a Frobenius group of order 20")
    subs = _all_subgroups_smallgroup(G)
    by_index = {}
    for s in subs:
        by_index[G.order // len(s)] = by_index.get(G.order // len(s), 0) + 1
    index5 = [s for s in subs if G.order // len(s) == 5]
    single = _single_conjugacy_class(G, index5)
    return {"by_index": by_index, "index5_single_class": single}


def _all_subgroups_smallgroup(G: MatGroup):
    """All subgroups of a small group, as frozensets (joins of cyclic
    subgroups; every subgroup of a group of order 20 is 2-generated)."""
    n = G.modulus
    els = G.sorted_elements()
    cyclic = set()
    for g in els:
        sub = [mat_identity(n)]
        x = g
        while x != mat_identity(n):
            sub.append(x)
            x = mat_mul(x, g, n)
        cyclic.add(frozenset(sub))
    subs = set(cyclic)
    for a in cyclic:
        for b in cyclic:
            gens = list({g for g in a | b})
            subs.add(frozenset(MatGroup.generate(gens, n).elements))
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def _single_conjugacy_class(G: MatGroup, subs):
    if not subs:
        return True
    n = G.modulus
    first = subs[0]
    orbit = set()
    for x in G.sorted_elements():
        xi = mat_inv(x, n)
        orbit.add(frozenset(mat_mul(mat_mul(x, g, n), xi, n) for g in first))
    return all(s in orbit for s in subs)


# ---------------------------------------------------------------------------
# F5^4 linear algebra (coordinates of the kernel I + m*M2(F5)).

def _vec_red(v):
    return tuple(x % 5 for x in v)


def _mat2_of_vec(v):
    return (v[0], v[1], v[2], v[3])


def conj_action_matrix(gbar):
    """4x4 matrix over F5 of w -> gbar w gbar^{-1} on M2(F5), columns indexed
    by the basis E11, E12, E21, E22."""
    gi = mat_inv(gbar, 5)
    cols = []
    for idx in range(4):
        w = [0, 0, 0, 0]
        w[idx] = 1
        img = mat_mul(mat_mul(gbar, tuple(w), 5), gi, 5)
        cols.append(img)
    return tuple(tuple(cols[j][i] % 5 for j in range(4)) for i in range(4))


def _mat4_apply(M, v):
    return tuple(sum(M[i][j] * v[j] for j in range(4)) % 5 for i in range(4))


def _rref(rows):
    rows = [list(_vec_red(r)) for r in rows]
    out = []
    pivots = []
    for col in range(4):
        pr = None
        for i, r in enumerate(rows):
            if r[col] and all(r[c] == 0 for c in range(col)):
                pr = i
                break
        if pr is None:
            continue
        row = rows.pop(pr)
        inv = pow(row[col], -1, 5)
        row = [x * inv % 5 for x in row]
        rows = [[(x - r[col] * y) % 5 for x, y in zip(r, row)] for r in rows]
        out = [[(x - r2[col] * y) % 5 for x, y in zip(r2, row)] if r2[col] else r2
               for r2 in out]
        out.append(row)
        pivots.append(col)
    return [tuple(r) for r in out], pivots


def all_subspaces():
    """Every subspace of F5^4, as a tuple of RREF basis rows.  Enumerated
    directly: one RREF basis per choice of pivot columns and free entries."""
    from itertools import combinations

    spaces = [()]
    for k in range(1, 5):
        for pivots in combinations(range(4), k):
            free_positions = []
            for i, p in enumerate(pivots):
                for c in range(p + 1, 4):
                    if c not in pivots:
                        free_positions.append((i, c))
            for values in iproduct(range(5), repeat=len(free_positions)):
                rows = [[0] * 4 for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, c), val in zip(free_positions, values):
                    rows[i][c] = val
                spaces.append(tuple(tuple(r) for r in rows))
    return sorted(spaces, key=lambda b: (len(b), b))


_ALL_SUBSPACES = None


def _subspaces():
    global _ALL_SUBSPACES
    if _ALL_SUBSPACES is None:
        _ALL_SUBSPACES = all_subspaces()
    return _ALL_SUBSPACES


def _in_span(rows, v):
    v = list(_vec_red(v))
    for r in rows:
        piv = next(i for i, x in enumerate(r) if x)
        if v[piv]:
            f = v[piv]
            v = [(a - f * b) % 5 for a, b in zip(v, r)]
    return not any(v)


def stable_subspaces(action_mats):
    """Subspaces of F5^4 stable under every given 4x4 matrix."""
    out = []
    for rows in _subspaces():
        ok = True
        for M in action_mats:
            for r in rows:
                if not _in_span(rows, _mat4_apply(M, r)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(rows)
    return out


# ---------------------------------------------------------------------------
# Lifting a group through one level (modulus m -> 5m).

@dataclass
class LiftedSubgroup:
    """A subgroup of GL2(Z/5m) with prescribed reduction mod m."""

    modulus: int
    gens: tuple           # lifted generators of the reduction target
    kernel_basis: tuple   # basis of U in M2(F5)-coordinates
    order: int

    def all_gens(self):
        m = self.modulus // 5
        ker = [_unit_plus(m, u, self.modulus) for u in self.kernel_basis]
        return list(self.gens) + ker


def _unit_plus(m, w, n):
    return ((1 + m * w[0]) % n, (m * w[1]) % n, (m * w[2]) % n, (1 + m * w[3]) % n)


_IDENT4 = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def _vadd(a, b):
    return tuple((x + y) % 5 for x, y in zip(a, b))


def _vsub(a, b):
    return tuple((x - y) % 5 for x, y in zip(a, b))


def _mat4_add(A, B):
    return tuple(tuple((x + y) % 5 for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def _mat4_sub(A, B):
    return tuple(tuple((x - y) % 5 for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def _mat4_mul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(4)) % 5
                       for j in range(4)) for i in range(4))


_ZERO4x4 = tuple(tuple(0 for _ in range(4)) for _ in range(4))


def lift_subgroups(T: MatGroup):
    """All subgroups G of GL2(Z/5m) with reduction mod m equal to T, where
    m = T.modulus: one representative per stable kernel subspace and
    cocycle class, conjugation by the kernel quotiented out.

    Each lift is T extended by a subspace U of the elementary abelian
    kernel; the lifted generators are sigma(s_i)(I + m A_i), and the A_i
    solve an F5-linear consistency system over the Cayley graph of T.
    """
    m = T.modulus
    n = 5 * m
    gens = list(T.generators)
    if not gens:
        gens = [mat_identity(m)]
    r = len(gens)
    parent, ordered = _spanning_tree(T, gens)
    gens5 = [tuple(x % 5 for x in g) for g in gens]
    acts = [conj_action_matrix(g5) for g5 in gens5]
    act_inv = [conj_action_matrix(mat_inv(g5, 5)) for g5 in gens5]
    sigma = {e: tuple(x % n for x in e) for e in list(parent) + [mat_identity(m)]}

    zero4 = (0, 0, 0, 0)
    # x_h = base_h + sum_k L_{h,k} A_k, affine in the generator unknowns
    xg = {mat_identity(m): (zero4, tuple(_ZERO4x4 for _ in range(r)))}
    for h in ordered:
        g, i = parent[h]
        base_g, lin_g = xg[g]
        c = _factor_set(sigma, g, gens[i], h, m, n)
        base_h = _vadd(_mat4_apply(act_inv[i], base_g), c)
        lin_h = [_mat4_mul(act_inv[i], L) for L in lin_g]
        lin_h[i] = _mat4_add(lin_h[i], _IDENT4)
        xg[h] = (base_h, tuple(lin_h))

    # non-tree Cayley edges give the consistency equations
    eq_coeffs = []
    eq_consts = []
    for g in [mat_identity(m)] + ordered:
        for i, s in enumerate(gens):
            h = mat_mul(g, s, m)
            if parent.get(h) == (g, i):
                continue
            base_g, lin_g = xg[g]
            base_h, lin_h = xg[h]
            c = _factor_set(sigma, g, s, h, m, n)
            const = _vsub(_vadd(_mat4_apply(act_inv[i], base_g), c), base_h)
            coeffs = []
            for k in range(r):
                ck = _mat4_sub(_mat4_mul(act_inv[i], lin_g[k]), lin_h[k])
                if k == i:
                    ck = _mat4_add(ck, _IDENT4)
                coeffs.append(ck)
            eq_coeffs.append(coeffs)
            eq_consts.append(const)

    out = []
    for U in stable_subspaces(acts):
        sols = _solve_mod_subspace(eq_coeffs, eq_consts, r, U)
        if sols is None:
            continue
        part, null = sols
        directions = _quotient_directions(act_inv, r, U)
        for rep in _affine_reps(part, null, directions, 4 * r):
            lifted = []
            for i in range(r):
                A = rep[4 * i: 4 * i + 4]
                base = sigma[gens[i]]
                lifted.append(_apply_offset(base, A, m, n))
            out.append(LiftedSubgroup(n, tuple(lifted), tuple(U),
                                      T.order * 5 ** len(U)))
    return out


def _apply_offset(base, A, m, n):
    """base * (I + m*A) mod n with A in M2(F5) coordinates."""
    Amat = (A[0] % 5, A[1] % 5, A[2] % 5, A[3] % 5)
    one_plus = ((1 + m * Amat[0]) % n, (m * Amat[1]) % n,
                (m * Amat[2]) % n, (1 + m * Amat[3]) % n)
    return mat_mul(base, one_plus, n)


def _spanning_tree(T: MatGroup, gens):
    """(parent map, BFS order) of the Cayley graph from the identity."""
    m = T.modulus
    I = mat_identity(m)
    parent = {}
    seen = {I}
    frontier = [I]
    ordered = []
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = mat_mul(x, g, m)
                if y not in seen:
                    seen.add(y)
                    parent[y] = (x, i)
                    ordered.append(y)
                    nxt.append(y)
        frontier = nxt
    if len(seen) != T.order:
        raise AssertionError("generators do not span the group")
    return parent, ordered


def _factor_set(sigma, g, s, h, m, n):
    """c(g, s) in M2(F5) with sigma(g) sigma(s) = sigma(gs) (I + m c)."""
    left = mat_mul(sigma[g], sigma[s], n)
    corr = mat_mul(mat_inv(sigma[h], n), left, n)
    c = []
    for i, ident in enumerate((1, 0, 0, 1)):
        diff = (corr[i] - ident) % n
        if diff % m:
            raise AssertionError("factor set not in the kernel")
        c.append((diff // m) % 5)
    return tuple(c)


def _complement_rows(U):
    """Coordinate functionals of F5^4 / U: reduce by the RREF of U, then
    read off the non-pivot coordinates."""
    rows, _ = _rref(list(U))
    pivset = {next(i for i, x in enumerate(rr) if x) for rr in rows}
    free = [i for i in range(4) if i not in pivset]
    return rows, free


def _project(rows, free, v):
    red = _reduce_by(rows, v)
    return [red[i] for i in free]


def _reduce_by(rows, v):
    v = list(_vec_red(v))
    for rr in rows:
        piv = next(i for i, x in enumerate(rr) if x)
        if v[piv]:
            f = v[piv]
            v = [(a - f * b) % 5 for a, b in zip(v, rr)]
    return v


def _solve_mod_subspace(eq_coeffs, eq_consts, r, U):
    """Solve the lift system modulo U: returns (particular, nullspace basis)
    over F5^(4r), or None when no lift exists for this kernel subspace."""
    rows, free = _complement_rows(U)
    dim = len(free)
    mat = []
    vec = []
    for coeffs, const in zip(eq_coeffs, eq_consts):
        # row block: projection of (sum_k M_k A_k + const) = 0
        cols = []
        for k in range(r):
            Mk = coeffs[k]
            for j in range(4):
                ej_img = tuple(Mk[i][j] for i in range(4))
                cols.append(_project(rows, free, ej_img))
        pconst = _project(rows, free, const)
        for t in range(dim):
            mat.append([cols[c][t] for c in range(4 * r)])
            vec.append((-pconst[t]) % 5)
    return _gauss_affine(mat, vec, 4 * r)


def _quotient_directions(act_inv, r, U):
    """Directions in F5^(4r) that do not change the lifted subgroup: shifts
    of any A_i by U, and coboundaries w - Ad(s_i^{-1}) w."""
    dirs = []
    for i in range(r):
        for u in U:
            v = [0] * (4 * r)
            v[4 * i: 4 * i + 4] = list(_vec_red(u))
            dirs.append(v)
    for w in _IDENT4:
        v = []
        for i in range(r):
            img = _vsub(w, _mat4_apply(act_inv[i], w))
            v.extend(img)
        dirs.append(list(v))
    return dirs


def _affine_reps(part, null, directions, nunk, cap=4096):
    """Representatives of (part + span(null)) modulo span(directions)."""
    # reduce directions to a basis inside the solution space coordinates
    dir_rref = _rref_general(directions, nunk)
    comp = []
    for v in null:
        if not _in_span_general(dir_rref + comp_rref(comp, nunk), v, nunk):
            comp.append(v)
    reps = []
    total = 5 ** len(comp)
    if total > cap:
        raise RuntimeError("too many cocycle classes (%d)" % total)
    for combo in iproduct(range(5), repeat=len(comp)):
        v = list(part)
        for c, basis in zip(combo, comp):
            for t in range(nunk):
                v[t] = (v[t] + c * basis[t]) % 5
        reps.append(tuple(v))
    return reps


def comp_rref(vectors, nunk):
    return _rref_general(vectors, nunk)


def _rref_general(vectors, nunk):
    rows = [list(v) for v in vectors]
    out = []
    for col in range(nunk):
        pr = None
        for i, rr in enumerate(rows):
            if rr[col] % 5 and all(rr[c] % 5 == 0 for c in range(col)):
                pr = i
                break
        if pr is None:
            continue
        row = rows.pop(pr)
        inv = pow(row[col] % 5, -1, 5)
        row = [x * inv % 5 for x in row]
        rows = [[(x - rr[col] * y) % 5 for x, y in zip(rr, row)] for rr in rows]
        out = [[(x - rr2[col] * y) % 5 for x, y in zip(rr2, row)] if rr2[col] % 5 else rr2
               for rr2 in out]
        out.append(row)
    return out


def _in_span_general(rref_rows, v, nunk):
    v = [x % 5 for x in v]
    for rr in rref_rows:
        piv = next((i for i, x in enumerate(rr) if x % 5), None)
        if piv is None:
            continue
        if v[piv]:
            f = v[piv]
            v = [(a - f * b) % 5 for a, b in zip(v, rr)]
    return not any(x % 5 for x in v)


def _gauss_affine(mat, vec, nunk):
    """Solve mat * x = vec over F5; (particular, nullspace basis) or None."""
    rows = [list(r) + [v] for r, v in zip(mat, vec)]
    pivots = []
    rr = 0
    for c in range(nunk):
        pr = None
        for i in range(rr, len(rows)):
            if rows[i][c] % 5:
                pr = i
                break
        if pr is None:
            continue
        rows[rr], rows[pr] = rows[pr], rows[rr]
        inv = pow(rows[rr][c] % 5, -1, 5)
        rows[rr] = [x * inv % 5 for x in rows[rr]]
        for i in range(len(rows)):
            if i != rr and rows[i][c] % 5:
                f = rows[i][c] % 5
                rows[i] = [(a - f * b) % 5 for a, b in zip(rows[i], rows[rr])]
        pivots.append(c)
        rr += 1
    for i in range(rr, len(rows)):
        if rows[i][nunk] % 5:
            return None
    part = [0] * nunk
    for i, c in enumerate(pivots):
        part[c] = rows[i][nunk] % 5
    free = [c for c in range(nunk) if c not in pivots]
    null = []
    for fc in free:
        v = [0] * nunk
        v[fc] = 1
        for i, c in enumerate(pivots):
            v[c] = (-rows[i][fc]) % 5
        null.append(v)
    return part, null


# ---------------------------------------------------------------------------
# The three base groups for the mod-5 image searches (as printed generators).

BASE_GROUPS = {
    "5B.1.2": ((2, 0, 0, 1), (1, 1, 0, 1)),
    "5B.1.1": ((1, 0, 0, 2), (1, 1, 0, 1)),
    "5Cs.1.1": ((1, 0, 0, 2),),
}


@dataclass(frozen=True)
class SubgroupFinding:
    """One qualifying (subgroup, vector) pair from a preimage search."""

    base_label: str
    level: int
    subgroup_gens: tuple
    subgroup_order: int
    kernel_dim: int
    witness_vector: tuple
    orbit_size: int
    quotient_label: str
    subgroup_class: str

    def to_dict(self):
        return {
            "base": self.base_label,
            "level": self.level,
            "generators": [list(g) for g in self.subgroup_gens],
            "order": self.subgroup_order,
            "kernel_dim": self.kernel_dim,
            "vector": list(self.witness_vector),
            "orbit_size": self.orbit_size,
            "quotient": self.quotient_label,
            "subgroup_class": self.subgroup_class,
        }


def _perm_label(gens, n, orbit):
    """Isomorphism label of the permutation image on a small orbit."""
    index = {v: i for i, v in enumerate(orbit)}
    perms = []
    for g in gens:
        perms.append(tuple(index[mat_apply(g, v, n)] for v in orbit))
    P = PermGroup(perms, len(orbit))
    if P.order == 5:
        return C5
    if P.order == 20:
        if P.max_element_order() == 20:
            return C20
        if P.center_size() == 1:
            return F5
    return OTHER


def preimage_group(base_label: str) -> MatGroup:
    """The full preimage in GL2(Z/25) of the named mod-5 base group."""
    gens5 = BASE_GROUPS[base_label]
    lifted = [tuple(x % 25 for x in g) for g in gens5]
    kernel = [_unit_plus(5, w, 25) for w in _IDENT4]
    return MatGroup.generate(list(lifted) + kernel, 25)


def _full_image_subgroups_25(base_label: str):
    """Subgroups of GL2(Z/25) reducing mod 5 exactly onto the base group,
    via the stable-subspace lift engine, deduplicated up to conjugacy in
    the full preimage."""
    H = MatGroup.generate(BASE_GROUPS[base_label], 5)
    out = []
    for lifted in lift_subgroups(H):
        G = MatGroup.generate(lifted.all_gens(), 25)
        if G.order != lifted.order:
            raise AssertionError("lifted subgroup has unexpected order")
        out.append((G, lifted))
    P = preimage_group(base_label)
    return _dedup_conjugate(out, P), P


def _dedup_conjugate(groups_with_meta, P: MatGroup):
    """One representative per P-conjugacy class."""
    n = P.modulus
    buckets = {}
    kept = []
    for G, meta in groups_with_meta:
        key = (G.order, _conj_invariant(G))
        found = False
        for G2, _ in buckets.get(key, []):
            if _are_conjugate(G, G2, P):
                found = True
                break
        if not found:
            buckets.setdefault(key, []).append((G, meta))
            kept.append((G, meta))
    return kept


def _conj_invariant(G: MatGroup):
    from collections import Counter

    n = G.modulus
    cnt = Counter(((g[0] + g[3]) % n, mat_det(g, n)) for g in G.elements)
    return tuple(sorted(cnt.items()))


def _are_conjugate(G1: MatGroup, G2: MatGroup, P: MatGroup):
    if G1.order != G2.order:
        return False
    n = P.modulus
    gens = G1.generators
    for x in P.sorted_elements():
        xi = mat_inv(x, n)
        if all(mat_mul(mat_mul(x, g, n), xi, n) in G2.elements for g in gens):
            return True
    return False


def _findings_for_subgroup(base_label, level, G: MatGroup, kernel_dim, gens=None):
    """All orbit-size-5 findings on vectors of exact order `level`."""
    n = G.modulus
    gens = list(gens if gens is not None else G.generators)
    vectors = exact_order_vectors(n, level)
    sub_class = identify_group(G) if G.order in (5, 20) else OTHER
    findings = []
    for orb in vector_orbits(gens, n, vectors):
        if len(orb) != 5:
            continue
        label = _perm_label(gens, n, orb)
        findings.append(SubgroupFinding(
            base_label, level, tuple(gens), G.order, kernel_dim,
            orb[0], len(orb), label, sub_class))
    return findings


def preimage_search(base_label: str, level: int = 25, max_order=None):
    """Enumerate subgroups of GL2(Z/25) whose mod-5 reduction is (a
    conjugate of) the named base group, and report every subgroup-vector
    pair where an order-25 vector has an orbit of size 5.

    With max_order set, the enumeration runs bottom-up by cyclic
    extensions inside the full preimage (exact for bounded orders).
    """
    if base_label not in BASE_GROUPS:
        raise ValueError("unsupported base label %r" % base_label)
    if level != 25:
        raise ValueError("unsupported level %d for a direct search" % level)
    findings = []
    if max_order is None:
        groups, _ = _full_image_subgroups_25(base_label)
        for G, lifted in groups:
            findings.extend(_findings_for_subgroup(
                base_label, 25, G, len(lifted.kernel_basis), lifted.all_gens()))
    else:
        H = MatGroup.generate(BASE_GROUPS[base_label], 5)
        P = preimage_group(base_label)
        for S_els, S_gens in bounded_subgroups(P, max_order):
            img = MatGroup.generate([tuple(x % 5 for x in g) for g in S_gens] or
                                    [mat_identity(5)], 5)
            if img.elements != H.elements:
                continue
            G = MatGroup(25, S_gens, S_els)
            kdim = _kernel_dim(S_els)
            findings.extend(_findings_for_subgroup(base_label, 25, G, kdim, S_gens))
    findings.sort(key=lambda f: (f.subgroup_order, f.kernel_dim,
                                 f.subgroup_gens, f.witness_vector))
    return findings


def _kernel_dim(elements):
    count = sum(1 for e in elements if all((x - y) % 5 == 0
                for x, y in zip(e, (1, 0, 0, 1))))
    dim = 0
    while 5 ** dim < count:
        dim += 1
    return dim


def bounded_subgroups(P: MatGroup, max_order: int):
    """All subgroups of P of order <= max_order, one per conjugacy class of
    P, enumerated bottom-up by cyclic extensions (every subgroup of a
    solvable group arises from a chain with cyclic prime quotients)."""
    n = P.modulus
    I = mat_identity(n)
    primes = sorted({p for p in (2, 3, 5) if P.order % p == 0})
    classes = []          # (elements frozenset, gens tuple)
    bucket = {}
    seen_exact = set()
    image5 = sorted({tuple(x % 5 for x in e) for e in P.elements})

    def register(els, gens):
        G = MatGroup(n, gens, els)
        key = (len(els), _kernel_space_canonical(els, image5),
               _order_multiset(G), _conj_invariant(G))
        for other_els, _ in bucket.get(key, []):
            if _conjugate_sets(els, gens, other_els, P):
                return False
        bucket.setdefault(key, []).append((els, gens))
        classes.append((els, gens))
        return True

    triv = frozenset({I})
    register(triv, ())
    queue = [(triv, ())]
    while queue:
        S, gens = queue.pop()
        normalizer = _normalizer_elements(P, S, gens)
        # one candidate per coset of S: whether g**p lands in S only depends
        # on the coset of g, as does the extension it generates
        covered = set(S)
        reps = []
        for g in normalizer:
            if g in covered:
                continue
            reps.append(g)
            covered.update(mat_mul(s, g, n) for s in S)
        for p in primes:
            if p * len(S) > max_order:
                continue
            for g in reps:
                if mat_pow(g, p, n) not in S:
                    continue
                T = _extend_by(S, g, p, n)
                key = frozenset(T)
                if key in seen_exact:
                    continue
                seen_exact.add(key)
                new_gens = tuple(gens) + (g,)
                if register(key, new_gens):
                    queue.append((key, new_gens))
    return classes


def _order_multiset(G: MatGroup):
    from collections import Counter

    return tuple(sorted(Counter(
        mat_order(g, G.modulus, cap=G.order + 1) for g in G.elements).items()))


def _kernel_space_canonical(els, image5):
    """Canonical form (under conjugation by the mod-5 image) of the kernel
    subspace an order-bounded subgroup meets."""
    vecs = []
    for e in els:
        if all((x - y) % 5 == 0 for x, y in zip(e, (1, 0, 0, 1))):
            w = ((e[0] - 1) // 5 % 5, e[1] // 5 % 5, e[2] // 5 % 5,
                 (e[3] - 1) // 5 % 5)
            if any(w):
                vecs.append(w)
    if not vecs:
        return ()
    best = None
    for h in image5:
        M = conj_action_matrix(h)
        rows, _ = _rref([_mat4_apply(M, v) for v in vecs])
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best


def _conjugate_sets(els1, gens1, els2, P):
    n = P.modulus
    gens = gens1 if gens1 else [mat_identity(n)]
    for x in P.sorted_elements():
        xi = mat_inv(x, n)
        if all(mat_mul(mat_mul(x, g, n), xi, n) in els2 for g in gens):
            if len(els1) == len(els2):
                return True
    return False


def _normalizer_elements(P: MatGroup, S, gens):
    n = P.modulus
    if not gens:
        return P.sorted_elements()
    out = []
    for x in P.sorted_elements():
        xi = mat_inv(x, n)
        if all(mat_mul(mat_mul(x, g, n), xi, n) in S for g in gens):
            out.append(x)
    return out


def _extend_by(S, g, p, n):
    """S union S g union ... S g^(p-1) for g normalizing S with g^p in S."""
    out = set(S)
    coset = set(S)
    for _ in range(p - 1):
        coset = {mat_mul(s, g, n) for s in coset}
        out |= coset
    return out


# ---------------------------------------------------------------------------
# The mod-125 chain verification.

def mod125_chain_search():
    """Verify that no subgroup of GL2(Z/125) lying over a Frobenius-labeled
    mod-25 finding admits an order-125 vector with orbit size 5 and
    Frobenius quotient.  Returns the list of violations (expected empty)."""
    findings25 = preimage_search("5Cs.1.1", level=25)
    cand = {}
    for f in findings25:
        if f.quotient_label == F5:
            cand.setdefault(f.subgroup_gens, f)
    violations = []
    for gens25, finding in cand.items():
        T = MatGroup.generate(gens25, 25)
        for lifted in lift_subgroups(T):
            gens125 = lifted.all_gens()
            for v, label in _orbit5_vectors(gens125, 125, lifted.kernel_basis):
                if label == F5:
                    violations.append({
                        "mod25_generators": [list(g) for g in gens25],
                        "mod125_generators": [list(g) for g in gens125],
                        "vector": list(v),
                        "mod25_witness": list(finding.witness_vector),
                    })
    return violations


def _orbit5_vectors(gens, n, kernel_basis):
    """(vector, quotient label) for orbits of size exactly 5 among vectors
    of exact order n; a kernel-subspace bound prunes hopeless residue
    classes before any orbit is grown."""
    m = n // 5
    ok_classes = set()
    for vb in [(x, y) for x in range(5) for y in range(5) if x or y]:
        rank = _kernel_orbit_rank(kernel_basis, vb)
        if 5 ** rank <= 5:
            ok_classes.add(vb)
    vectors = [v for v in exact_order_vectors(n, n)
               if (v[0] % 5, v[1] % 5) in ok_classes]
    dead = set()
    out = []
    for v in vectors:
        if v in dead:
            continue
        orb = orbit_capped(gens, n, v, 5)
        if orb is None:
            dead.add(v)
            continue
        dead.update(orb)
        if len(orb) == 5:
            out.append((orb[0], _perm_label(gens, n, orb)))
    return out


def _kernel_orbit_rank(kernel_basis, vbar):
    """Rank of the map U -> F5^2, A -> A*vbar (the kernel subgroup's orbit
    of a vector over the residue class vbar has size 5^rank)."""
    imgs = []
    for u in kernel_basis:
        A = (u[0], u[1], u[2], u[3])
        imgs.append(mat_apply(A, vbar, 5))
    rows = [list(v) for v in imgs]
    rank = 0
    for col in range(2):
        pr = None
        for i in range(rank, len(rows)):
            if rows[i][col] % 5:
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = pow(rows[rank][col], -1, 5)
        rows[rank] = [x * inv % 5 for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % 5:
                f = rows[i][col]
                rows[i] = [(a - f * b) % 5 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# Trace-determinant profiles of the mod-25 classes with an unstable
# order-25 line (candidates for 25-torsion over a quintic field without a
# rational 25-isogeny; only determinant-surjective classes can be images).

_UNSTABLE_CACHE = None


def unstable_order25_class_profiles():
    """(trace, det) pair sets of the subgroups of GL2(Z/25) reducing onto
    the split-diagonal mod-5 base, carrying an orbit-5 order-25 vector
    whose line is not stable, with surjective determinant."""
    global _UNSTABLE_CACHE
    if _UNSTABLE_CACHE is None:
        profiles = []
        for f in preimage_search("5Cs.1.1", level=25):
            L = _line_of(f.witness_vector)
            stable = all(mat_apply(g, w, 25) in L
                         for g in f.subgroup_gens for w in L)
            if stable:
                continue
            G = MatGroup.generate(f.subgroup_gens, 25)
            if len({mat_det(g, 25) for g in G.elements}) != 20:
                continue
            pairs = frozenset(((g[0] + g[3]) % 25, mat_det(g, 25))
                              for g in G.elements)
            if pairs not in profiles:
                profiles.append(pairs)
        _UNSTABLE_CACHE = profiles
    return _UNSTABLE_CACHE


def _line_of(v):
    return frozenset((k * v[0] % 25, k * v[1] % 25) for k in range(25))
