"""PSL(2,q) acting on the conic plane.

Group elements are invertible 2x2 matrices over GF(q) up to scalars,
normalized so the first nonzero entry is 1; PSL(2,q) is the subset with
square determinant.  An element acts on the plane through its symmetric
square, which is a collineation fixing the conic, points transforming as
row vectors p -> p*M and lines as columns l -> Minv*l.

Conjugacy classes are keyed by the scalar T(g) = trace(g)^2/det(g): the
identity, two unipotent classes (T = 4), one class of involutions (T = 0),
and one class for every other value of T, which is split or nonsplit
according to whether T - 4 is a square.
"""

from __future__ import annotations

import numpy as np

from .gfq import factor_int
from .plane import ConicPlane, INTERNAL, PASSANT, SECANT


def _normalize2(F, M):
    M = np.asarray(M, dtype=np.int32)
    flat = M.reshape(-1, 4)
    first = (flat != 0).argmax(axis=1)
    lead = flat[np.arange(len(flat)), first]
    out = F.mulT[flat, F.invT[lead][:, None]]
    return out.reshape(M.shape)


def _mul2(F, A, B):
    """Product of (...,4) stacks of projective 2x2 matrices, normalized."""
    add, mul = F.addT, F.mulT
    A, B = np.broadcast_arrays(np.asarray(A, np.int32), np.asarray(B, np.int32))
    a = add[mul[A[..., 0], B[..., 0]], mul[A[..., 1], B[..., 2]]]
    b = add[mul[A[..., 0], B[..., 1]], mul[A[..., 1], B[..., 3]]]
    c = add[mul[A[..., 2], B[..., 0]], mul[A[..., 3], B[..., 2]]]
    d = add[mul[A[..., 2], B[..., 1]], mul[A[..., 3], B[..., 3]]]
    return _normalize2(F, np.stack([a, b, c, d], axis=-1))


def _inv2(F, M):
    M = np.asarray(M, np.int32)
    neg = F.negT
    return _normalize2(
        F, np.stack([M[..., 3], neg[M[..., 1]], neg[M[..., 2]], M[..., 0]], axis=-1)
    )


def _symmetric_square(F, M):
    """(n,4) projective 2x2 -> (n,3,3) collineation matrices."""
    add, mul = F.addT, F.mulT
    dbl = F.mulT[F.of_int(2)]
    a, b, c, d = (M[:, i] for i in range(4))
    out = np.empty((len(M), 3, 3), dtype=np.int32)
    out[:, 0, 0] = mul[a, a]
    out[:, 0, 1] = mul[a, b]
    out[:, 0, 2] = mul[b, b]
    out[:, 1, 0] = dbl[mul[a, c]]
    out[:, 1, 1] = add[mul[a, d], mul[b, c]]
    out[:, 1, 2] = dbl[mul[b, d]]
    out[:, 2, 0] = mul[c, c]
    out[:, 2, 1] = mul[c, d]
    out[:, 2, 2] = mul[d, d]
    return out


def _normalize3(F, V):
    V = np.asarray(V, np.int32)
    first = (V != 0).argmax(axis=1)
    lead = V[np.arange(len(V)), first]
    return F.mulT[V, F.invT[lead][:, None]]


class ConjClass:
    __slots__ = ("label", "family", "family_index", "T", "members", "size", "rep")

    def __init__(self, label, family, family_index, T, members):
        self.label = label
        self.family = family
        self.family_index = family_index
        self.T = T
        self.members = members
        self.size = len(members)
        self.rep = int(members[0])

    def __repr__(self):
        return f"ConjClass({self.label}, T={self.T}, size={self.size})"


class ConicGroup:
    def __init__(self, plane: ConicPlane):
        self.plane = plane
        F = plane.F
        self.F = F
        q = plane.q
        self.q = q

        self.EL = self._enumerate()
        self.n = len(self.EL)
        assert self.n == q * (q * q - 1) // 2

        self._code_index = np.full(q ** 4, -1, dtype=np.int32)
        codes = ((self.EL[:, 0] * q + self.EL[:, 1]) * q + self.EL[:, 2]) * q + self.EL[:, 3]
        self._code_index[codes] = np.arange(self.n)
        self.id_idx = self.index_of(_normalize2(F, np.array([1, 0, 0, 1])))

        self.inv_idx = self.index_many(_inv2(F, self.EL))
        self.SYM = _symmetric_square(F, self.EL)

        self._pt_code = np.full(q ** 3, -1, dtype=np.int32)
        for i, v in enumerate(plane.points):
            self._pt_code[(v[0] * q + v[1]) * q + v[2]] = i

        self._orbit_cache: dict[tuple[str, int], np.ndarray] = {}
        self._build_classes()

    # --- element bookkeeping ---

    def _enumerate(self):
        q, F = self.q, self.F
        rows = []
        for a, b, c, d in self._normalized_tuples():
            det = F.sub(F.mul(a, d), F.mul(b, c))
            if det != 0 and F.is_square(det):
                rows.append((a, b, c, d))
        return np.array(rows, dtype=np.int32)

    def _normalized_tuples(self):
        q = self.q
        yield (0, 0, 0, 1)
        for d in range(q):
            yield (0, 0, 1, d)
        for c in range(q):
            for d in range(q):
                yield (0, 1, c, d)
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    yield (1, b, c, d)

    def index_of(self, m) -> int:
        m = np.asarray(m, np.int32).reshape(4)
        q = self.q
        i = int(self._code_index[((m[0] * q + m[1]) * q + m[2]) * q + m[3]])
        assert i >= 0, "matrix not in the group"
        return i

    def index_many(self, M) -> np.ndarray:
        M = np.asarray(M, np.int32).reshape(-1, 4)
        q = self.q
        out = self._code_index[((M[:, 0] * q + M[:, 1]) * q + M[:, 2]) * q + M[:, 3]]
        assert (out >= 0).all(), "product left the group"
        return out

    def mul(self, i: int, j: int) -> int:
        return self.index_of(_mul2(self.F, self.EL[i], self.EL[j]))

    def mul_many(self, I, J) -> np.ndarray:
        return self.index_many(_mul2(self.F, self.EL[I], self.EL[J]))

    def t_values(self) -> np.ndarray:
        F = self.F
        tr = F.addT[self.EL[:, 0], self.EL[:, 3]]
        det = F.addT[
            F.mulT[self.EL[:, 0], self.EL[:, 3]],
            F.negT[F.mulT[self.EL[:, 1], self.EL[:, 2]]],
        ]
        return F.mulT[F.mulT[tr, tr], F.invT[det]]

    # --- conjugacy classes ---

    def conjugacy_orbit(self, seed: int) -> np.ndarray:
        """Indices of g^-1 s g over the whole group."""
        left = _mul2(self.F, _inv2(self.F, self.EL), self.EL[seed])
        return np.unique(self.index_many(_mul2(self.F, left, self.EL)))

    def _build_classes(self):
        F, q = self.F, self.q
        T = self.t_values()
        four = F.of_int(4)

        up_seed = self.index_of(_normalize2(F, np.array([1, 1, 0, 1])))
        um_seed = self.index_of(_normalize2(F, np.array([1, F.xi, 0, 1])))
        up = self.conjugacy_orbit(up_seed)
        um = self.conjugacy_orbit(um_seed)
        t4 = np.nonzero(T == four)[0]
        assert len(up) == len(um) == (q * q - 1) // 2
        assert set(t4.tolist()) == {self.id_idx} | set(up.tolist()) | set(um.tolist())

        classes = [
            ConjClass("id", "id", 0, four, np.array([self.id_idx])),
            ConjClass("u+", "unipotent", 1, four, up),
            ConjClass("u-", "unipotent", 2, four, um),
        ]

        inv_members = np.nonzero(T == 0)[0]
        expected_inv = q * (q + 1) // 2 if q % 4 == 1 else q * (q - 1) // 2
        assert len(inv_members) == expected_inv
        classes.append(ConjClass("inv", "involution", 0, 0, inv_members))

        n_split = (q - 5) // 4 if q % 4 == 1 else (q - 3) // 4
        n_nonsplit = (q - 1) // 4 if q % 4 == 1 else (q - 3) // 4

        for idx, Tv in enumerate(self._split_t_schedule(n_split), start=1):
            members = np.nonzero(T == Tv)[0]
            assert len(members) == q * (q + 1), f"split class T={Tv}"
            assert F.is_square(F.sub(Tv, four))
            classes.append(ConjClass(f"split{idx}", "split", idx, Tv, members))
        for idx, Tv in enumerate(self._nonsplit_t_schedule(n_nonsplit), start=1):
            members = np.nonzero(T == Tv)[0]
            assert len(members) == q * (q - 1), f"nonsplit class T={Tv}"
            assert not F.is_square(F.sub(Tv, four))
            classes.append(ConjClass(f"nonsplit{idx}", "nonsplit", idx, Tv, members))

        assert len(classes) == (q + 5) // 2
        assert sum(c.size for c in classes) == self.n

        self.classes = classes
        self.class_of = np.full(self.n, -1, dtype=np.int32)
        for ci, c in enumerate(classes):
            assert (self.class_of[c.members] == -1).all()
            self.class_of[c.members] = ci
        assert (self.class_of >= 0).all()

    def _split_t_schedule(self, count: int) -> list[int]:
        """T values (xi^i + xi^-i)^2 for i = 1, 2, ... until count are found."""
        F, four = self.F, self.F.of_int(4)
        out, seen = [], set()
        i = 1
        while len(out) < count:
            assert i < self.q, "ran out of split torus elements"
            s = F.pow_(F.xi, i)
            t = F.add(s, F.inv(s))
            Tv = F.mul(t, t)
            if Tv not in (0, four) and Tv not in seen:
                seen.add(Tv)
                out.append(Tv)
            i += 1
        return out

    def _nonsplit_t_schedule(self, count: int) -> list[int]:
        """T values (2a_k)^2 along powers of the least generator of the
        norm-one group {(a,b) : a^2 - xi b^2 = 1}."""
        F, four = self.F, self.F.of_int(4)
        g0 = self._norm_one_generator()
        out, seen = [], set()
        g = g0
        while len(out) < count:
            a = g[0]
            t = F.add(a, a)
            Tv = F.mul(t, t)
            if Tv not in (0, four) and Tv not in seen:
                seen.add(Tv)
                out.append(Tv)
            g = self._norm_one_mul(g, g0)
            assert g != g0 or len(out) >= count, "ran out of norm-one elements"
        return out

    def _norm_one_mul(self, u, v):
        F = self.F
        return (
            F.add(F.mul(u[0], v[0]), F.mul(F.xi, F.mul(u[1], v[1]))),
            F.add(F.mul(u[0], v[1]), F.mul(u[1], v[0])),
        )

    def _norm_one_generator(self):
        F, q = self.F, self.q
        primes = list(factor_int(q + 1))
        for a in range(q):
            for b in range(q):
                if F.sub(F.mul(a, a), F.mul(F.xi, F.mul(b, b))) != 1:
                    continue
                if all(self._norm_one_pow((a, b), (q + 1) // r) != (1, 0) for r in primes):
                    return (a, b)
        raise AssertionError("norm-one group has no generator?")

    def _norm_one_pow(self, g, n):
        out, base = (1, 0), g
        while n:
            if n & 1:
                out = self._norm_one_mul(out, base)
            base = self._norm_one_mul(base, base)
            n >>= 1
        return out

    # --- actions on the plane ---

    def point_orbit(self, point: int) -> np.ndarray:
        """Index of point^g for every group element g."""
        key = ("pt", point)
        if key not in self._orbit_cache:
            self._orbit_cache[key] = self._act(self.SYM, self.plane.points[point], row=True)
        return self._orbit_cache[key]

    def line_orbit(self, line: int) -> np.ndarray:
        key = ("ln", line)
        if key not in self._orbit_cache:
            SYMINV = self.SYM[self.inv_idx]
            self._orbit_cache[key] = self._act(SYMINV, self.plane.lines[line], row=False)
        return self._orbit_cache[key]

    def _act(self, MATS, v, row: bool) -> np.ndarray:
        F, q = self.F, self.q
        add, mul = F.addT, F.mulT
        comps = []
        for i in range(3):
            if row:
                s = mul[v[0], MATS[:, 0, i]]
                s = add[s, mul[v[1], MATS[:, 1, i]]]
                s = add[s, mul[v[2], MATS[:, 2, i]]]
            else:
                s = mul[MATS[:, i, 0], v[0]]
                s = add[s, mul[MATS[:, i, 1], v[1]]]
                s = add[s, mul[MATS[:, i, 2], v[2]]]
            comps.append(s)
        W = _normalize3(F, np.stack(comps, axis=-1))
        out = self._pt_code[(W[:, 0] * q + W[:, 1]) * q + W[:, 2]]
        assert (out >= 0).all()
        return out

    def stabilizer(self, point: int) -> np.ndarray:
        return np.nonzero(self.point_orbit(point) == point)[0]

    def class_profile(self, indices_or_mask) -> np.ndarray:
        idx = np.asarray(indices_or_mask)
        if idx.dtype == bool:
            idx = np.nonzero(idx)[0]
        return np.bincount(self.class_of[idx], minlength=len(self.classes))

    def class_indicator(self) -> np.ndarray:
        """(n, nclasses) 0/1 matrix, one column per conjugacy class."""
        out = np.zeros((self.n, len(self.classes)), dtype=np.int64)
        out[np.arange(self.n), self.class_of] = 1
        return out

    def __repr__(self):
        return f"ConicGroup(q={self.q}, order={self.n})"


def incidence_bool(plane: ConicPlane) -> np.ndarray:
    """Dense point x line incidence of the plane, cached on the instance."""
    cached = getattr(plane, "_inc_bool", None)
    if cached is None:
        npts = len(plane.points)
        cached = np.zeros((npts, npts), dtype=bool)
        for j in range(npts):
            cached[plane.points_on_line[j], j] = True
        plane._inc_bool = cached
    return cached


def canonical_internal_point(plane: ConicPlane) -> int:
    """The reference internal point (1, 0, -xi)."""
    F = plane.F
    return plane.point_index[(1, 0, F.neg(F.xi))]


def norm_stabilizer_families(plane: ConicPlane):
    """The four parametric families fixing (1, 0, -xi), as projective 2x2
    tuples: two of square determinant, two of nonsquare determinant."""
    F = plane.F
    xi, xinv = F.xi, F.inv(plane.F.xi)
    fams = [set(), set(), set(), set()]
    for c in range(plane.q):
        for d in range(plane.q):
            cc, dd = F.mul(c, c), F.mul(d, d)
            if F.sub(dd, F.mul(xi, cc)) == 1:
                fams[0].add(_tuple2(F, (d, F.mul(xi, c), c, d)))
            if F.sub(F.mul(xi, cc), dd) == 1:
                fams[1].add(_tuple2(F, (d, F.neg(F.mul(xi, c)), c, F.neg(d))))
            if F.sub(F.mul(xi, dd), cc) == 1:
                fams[2].add(_tuple2(F, (d, c, F.mul(c, xinv), d)))
            if F.sub(cc, F.mul(xi, dd)) == 1:
                fams[3].add(_tuple2(F, (d, F.neg(c), F.mul(c, xinv), F.neg(d))))
    return fams


def _tuple2(F, m):
    return tuple(int(x) for x in _normalize2(F, np.array(m, dtype=np.int32)))


def outer_coset_stabilizer(plane: ConicPlane, point: int) -> set:
    """Projective 2x2 matrices of nonsquare determinant fixing the point."""
    F, q = plane.F, plane.q
    target = plane.points[point]
    out = set()
    for m in _all_tuples(q):
        a, b, c, d = m
        det = F.sub(F.mul(a, d), F.mul(b, c))
        if det == 0 or F.is_square(det):
            continue
        M = _symmetric_square(F, np.array([m], dtype=np.int32))[0]
        img = tuple(
            F.add(F.add(F.mul(target[0], M[0, j]), F.mul(target[1], M[1, j])),
                  F.mul(target[2], M[2, j]))
            for j in range(3)
        )
        if plane.normalize(img) == target:
            out.add(m)
    return out


def _all_tuples(q):
    yield (0, 0, 0, 1)
    for d in range(q):
        yield (0, 0, 1, d)
    for c in range(q):
        for d in range(q):
            yield (0, 1, c, d)
    for b in range(q):
        for c in range(q):
            for d in range(q):
                yield (1, b, c, d)


def verify_group(group: ConicGroup, rng=None) -> dict:
    """Order, census, action and conjugation consistency; raises on failure."""
    q, n = group.q, group.n
    rng = rng or np.random.default_rng(12)
    assert n == q * (q ** 2 - 1) // 2
    assert len(group.classes) == (q + 5) // 2

    sizes = {c.label: c.size for c in group.classes}
    assert sizes["id"] == 1
    assert sizes["u+"] == sizes["u-"] == (q * q - 1) // 2
    assert sizes["inv"] == (q * (q + 1) // 2 if q % 4 == 1 else q * (q - 1) // 2)
    for c in group.classes:
        if c.family == "split":
            assert c.size == q * (q + 1)
        if c.family == "nonsplit":
            assert c.size == q * (q - 1)

    # every involution squares to the identity and nothing else does
    inv_cls = next(c for c in group.classes if c.label == "inv")
    sq = group.mul_many(np.arange(n), np.arange(n))
    order2 = set(np.nonzero(sq == group.id_idx)[0].tolist()) - {group.id_idx}
    assert order2 == set(inv_cls.members.tolist())

    # conjugation fixes classes (exhaustive for small q, sampled beyond)
    gs = range(n) if n <= 400 else [int(x) for x in rng.choice(n, 60, replace=False)]
    for g in gs:
        left = _mul2(group.F, _inv2(group.F, group.EL[g]), group.EL)
        conj = group.index_many(_mul2(group.F, left, group.EL[g][None, :]))
        assert (group.class_of[conj] == group.class_of).all()

    # the action is a right action and preserves the point classes
    plane = group.plane
    pts = rng.choice(len(plane.points), 6, replace=False)
    pairs = rng.integers(0, n, size=(40, 2))
    for p in pts:
        porb = group.point_orbit(int(p))
        assert plane.point_class[int(porb[0])] == plane.point_class[int(p)]
        for g, h in pairs:
            gh = group.mul(int(g), int(h))
            assert group.point_orbit(int(porb[g]))[h] == porb[gh]

    # lines transform contragrediently: incidence is preserved
    incb = incidence_bool(plane)
    ls = rng.choice(len(plane.lines), 4, replace=False)
    for l in ls:
        lorb = group.line_orbit(int(l))
        for p in plane.points_on_line[int(l)]:
            assert incb[group.point_orbit(p), lorb].all()

    return {"q": q, "order": n, "classes": [(c.label, c.size) for c in group.classes]}


def verify_stabilizer(group: ConicGroup, point: int | None = None) -> dict:
    """Stabilizer sizes and class profile, with the parametric families and
    the outer coset checked at the reference point."""
    plane, q = group.plane, group.q
    canonical = canonical_internal_point(plane)
    if point is None:
        point = canonical

    stab = group.stabilizer(point)
    assert len(stab) == q + 1

    profile = group.class_profile(stab)
    labels = [c.label for c in group.classes]
    prof = dict(zip(labels, profile.tolist()))
    expected_inv = (q + 1) // 2 if q % 4 == 1 else (q + 3) // 2
    assert prof["id"] == 1
    assert prof["u+"] == prof["u-"] == 0
    assert prof["inv"] == expected_inv, f"K cap [0] = {prof['inv']}"
    for c in group.classes:
        if c.family == "split":
            assert prof[c.label] == 0
        if c.family == "nonsplit":
            assert prof[c.label] == 2
    assert sum(profile) == q + 1

    outer = outer_coset_stabilizer(plane, point)
    assert len(outer) == q + 1, "outer coset stabilizer size"

    if point == canonical:
        fams = norm_stabilizer_families(plane)
        inner = {tuple(int(x) for x in group.EL[i]) for i in stab}
        assert fams[0] | fams[1] == inner
        assert fams[2] | fams[3] == outer
        assert len(fams[0]) == len(fams[1]) == len(fams[2]) == len(fams[3]) == (q + 1) // 2

    return {"q": q, "stab_order": 2 * (q + 1), "profile": prof}


def pair_configuration(plane: ConicPlane, p: int, r: int):
    """(line kind, r on p^perp) for distinct internal points p, r."""
    kind = plane.line_class[plane.line_through(p, r)]
    assert kind in (PASSANT, SECANT), "two internal points never span a tangent"
    on_polar = bool(incidence_bool(plane)[r, plane.polar_of_point[p]])
    return kind, on_polar


def verify_parity(group: ConicGroup, inc) -> dict:
    """Exhaustive parity census over all ordered internal pairs.

    For each pair (p, r) this counts, per conjugacy class, the elements h
    with (p^perp)^h through r, and the elements with p^h inside the
    neighbor set N(r) (its complement for q = 3 mod 4), then checks the
    full table of even/odd patterns by pair configuration.
    """
    plane, q = group.plane, group.q
    res = q % 4
    ncls = len(group.classes)
    fam = [c.family for c in group.classes]
    sizes = np.array([c.size for c in group.classes], dtype=np.int64)
    ind = group.class_indicator()
    incb = incidence_bool(plane)
    internal = inc.internal
    N = inc.N

    split_ix = [k for k in range(ncls) if fam[k] == "split"]
    nonsplit_ix = [k for k in range(ncls) if fam[k] == "nonsplit"]
    ix = {lbl: k for k, lbl in enumerate(c.label for c in group.classes)}
    id_ix, up_ix, um_ix, inv_ix = ix["id"], ix["u+"], ix["u-"], ix["inv"]

    # N(r) rows as global-point booleans
    neigh = np.zeros((N, len(plane.points)), dtype=bool)
    for i in range(N):
        loc = inc.neighbor_set(i)
        neigh[i, [internal[j] for j in np.nonzero(loc)[0]]] = True

    checked = 0
    for i, p in enumerate(internal):
        lorb = group.line_orbit(plane.polar_of_point[p])
        porb = group.point_orbit(p)
        polar_counts = incb[internal][:, lorb].astype(np.int64) @ ind
        neigh_counts = neigh[:, porb].astype(np.int64) @ ind
        for j, r in enumerate(internal):
            if r == p:
                continue
            kind, on_polar = pair_configuration(plane, p, r)
            if on_polar:
                assert kind == (SECANT if res == 1 else PASSANT), "forced line kind"

            hp = polar_counts[j] & 1
            assert hp[up_ix] == 0 and hp[um_ix] == 0
            assert hp[inv_ix] == hp[id_ix], "[0] parity tracks the identity class"
            odd_split = int(hp[split_ix].sum()) if split_ix else 0
            odd_nonsplit = int(hp[nonsplit_ix].sum()) if nonsplit_ix else 0
            if on_polar:
                assert hp[id_ix] == 1 and odd_split == 0 and odd_nonsplit == 0
            elif kind == PASSANT:
                assert hp[id_ix] == 0 and odd_split == 0
                assert odd_nonsplit == 0 if res == 1 else odd_nonsplit in (0, 2)
            else:
                assert hp[id_ix] == 0 and odd_nonsplit == 0
                assert odd_split in (0, 2) if res == 1 else odd_split == 0

            up = neigh_counts[j] & 1 if res == 1 else (sizes - neigh_counts[j]) & 1
            assert up[inv_ix] == 0, "[0] is always even in the neighbor census"
            assert up[up_ix] == up[um_ix], "F+ and F- agree in the aggregate"
            odd_split = int(up[split_ix].sum()) if split_ix else 0
            odd_nonsplit = int(up[nonsplit_ix].sum()) if nonsplit_ix else 0
            odd_kind = PASSANT if res == 1 else SECANT
            if kind == odd_kind:
                assert up[id_ix] == 1 and up[up_ix] == 1
                if res == 1:
                    assert odd_split == 0 and odd_nonsplit == 1
                else:
                    assert odd_split == 1 and odd_nonsplit == 0
            else:
                assert up[id_ix] == 0 and up[up_ix] == 0
                assert odd_split == 0 and odd_nonsplit == 0
            checked += 1

    return {"q": q, "pairs": checked}
