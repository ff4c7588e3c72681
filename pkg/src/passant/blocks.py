"""The class algebra of PSL(2,q) over GF(2^k) and its block idempotents.

The center of the modular group algebra is spanned by conjugacy class sums;
over the splitting field GF(2^k) it decomposes into a direct product of
local rings, one per 2-block.  The primitive idempotents are found by
splitting each component along the minimal polynomial of multiplication by
class sums: every eigenvalue is rational over GF(2^k), so the minimal
polynomials factor into powers of linear terms and a CRT cofactor per root
already yields an exact idempotent.

Blocks act on the internal-point permutation module through the parity
matrices of the class sums, and the projector ranks reproduce the kernel
decomposition of the incidence map.
"""

from __future__ import annotations

import numpy as np

from .gfq import binary_splitting_field
from .gf2 import ext_matmul, ext_rank, ext_solve

# --- polynomial helpers over a small field, ascending coefficients ---

def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f

def _padd(F, f, g):
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return _ptrim(out)

def _pmul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return _ptrim(out)

def _pdivmod(F, f, g):
    f = f[:]
    if len(f) < len(g):
        return [], f
    q = [0] * (len(f) - len(g) + 1)
    ginv = F.inv(g[-1])
    while len(f) >= len(g) and _ptrim(f):
        c = F.mul(f[-1], ginv)
        shift = len(f) - len(g)
        q[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] = F.sub(f[shift + i], F.mul(c, gc))
        _ptrim(f)
    return _ptrim(q), f

def _pxgcd(F, f, g):
    r0, r1 = f[:], g[:]
    s0, s1 = [1], []
    while r1:
        q, r = _pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(F, s0, _pmul(F, q, s1))
    return r0, s0

def _peval(F, f, x):
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


class ClassAlgebra:
    """Structure constants of the class algebra, and its mod 2 reduction."""

    def __init__(self, group):
        self.group = group
        self.q = group.q
        self.F2 = binary_splitting_field(group.q)
        classes = group.classes
        r = len(classes)
        self.r = r
        cls = group.class_of

        a = np.zeros((r, r, r), dtype=np.int64)
        for k, c in enumerate(classes):
            a[:, :, k] = self._products_landing_at(c.rep)
        self.a = a

        # a second representative must give the same table
        for k, c in enumerate(classes):
            if c.size > 1:
                alt = self._products_landing_at(int(c.members[1]))
                assert (alt == a[:, :, k]).all(), f"class {c.label} is not well defined"

        sizes = np.array([c.size for c in classes], dtype=np.int64)
        assert (a == a.transpose(1, 0, 2)).all(), "class algebra is commutative"
        assert (a[0] == np.eye(r, dtype=np.int64)).all(), "identity class"
        assert ((a * sizes[None, None, :]).sum(axis=2) == sizes[:, None] * sizes[None, :]).all()

        self._odd = [[np.nonzero(a[i, j] & 1)[0] for j in range(r)] for i in range(r)]

    def _products_landing_at(self, z: int) -> np.ndarray:
        group, r = self.group, len(self.group.classes)
        y = group.mul_many(group.inv_idx, np.full(group.n, z, dtype=np.int64))
        out = np.zeros((r, r), dtype=np.int64)
        np.add.at(out, (group.class_of, group.class_of[y]), 1)
        return out

    def multiply(self, u, v) -> np.ndarray:
        """Product of two center elements in the class-sum basis (codes)."""
        F, r = self.F2, self.r
        out = np.zeros(r, dtype=np.int32)
        for i in np.nonzero(u)[0]:
            for j in np.nonzero(v)[0]:
                c = F.mul(int(u[i]), int(v[j]))
                for k in self._odd[i][j]:
                    out[k] ^= c
        return out

    def identity(self) -> np.ndarray:
        e = np.zeros(self.r, dtype=np.int32)
        e[0] = 1
        return e


def expected_block_count(q: int) -> int:
    m = q - 1 if q % 4 == 1 else q + 1
    while m % 2 == 0:
        m //= 2
    n_defect0 = (q - 1) // 4 if q % 4 == 1 else (q - 3) // 4
    return 1 + n_defect0 + (m - 1) // 2


def central_idempotents(alg: ClassAlgebra) -> list[np.ndarray]:
    """Primitive central idempotents, split off class sum by class sum."""
    F, r = alg.F2, alg.r
    idems = [alg.identity()]
    for cix in range(1, r):
        b = np.zeros(r, dtype=np.int32)
        b[cix] = 1
        refined = []
        for e in idems:
            refined.extend(_split_component(alg, e, b))
        idems = refined
    count = expected_block_count(alg.q)
    assert len(idems) == count, f"found {len(idems)} blocks, expected {count}"

    total = np.zeros(r, dtype=np.int32)
    for e in idems:
        assert (alg.multiply(e, e) == e).all(), "not idempotent"
        total ^= e
    assert (total == alg.identity()).all(), "idempotents do not sum to 1"
    for i in range(len(idems)):
        for j in range(i + 1, len(idems)):
            assert not alg.multiply(idems[i], idems[j]).any(), "not orthogonal"
    return idems


def _split_component(alg: ClassAlgebra, e, b) -> list[np.ndarray]:
    F = alg.F2
    y = alg.multiply(e, b)

    # minimal polynomial of y inside the component with identity e
    rows = [e.copy()]
    while True:
        nxt = alg.multiply(rows[-1], y)
        coeffs = ext_solve(F, np.array(rows, dtype=np.int32).T, nxt)
        if coeffs is not None:
            break
        rows.append(nxt)
    mpoly = [int(c) for c in coeffs] + [1]  # monic, char 2 so signs vanish

    roots = []
    rem = mpoly
    for lam in range(F.q):
        mult = 0
        while len(rem) > 1 and _peval(F, rem, lam) == 0:
            rem, zero = _pdivmod(F, rem, [lam, 1])  # divide by (x - lam) = (x + lam)
            assert not zero
            mult += 1
        if mult:
            roots.append((lam, mult))
    assert len(rem) == 1, "minimal polynomial did not split over the field"
    if len(roots) == 1:
        return [e]

    out = []
    for lam, mult in roots:
        factor = [lam, 1]
        power = [1]
        for _ in range(mult):
            power = _pmul(F, power, factor)
        cofactor, _ = _pdivmod(F, mpoly, power)
        g, u = _pxgcd(F, cofactor, power)
        assert len(g) == 1, "cofactor not invertible modulo its prime power"
        u = [F.div(c, g[0]) for c in u]
        h, _r = _pmul(F, cofactor, u), None
        _q, h = _pdivmod(F, h, mpoly)

        # evaluate h at y, with the component identity for the constant term
        acc = np.zeros(alg.r, dtype=np.int32)
        for c in reversed(h):
            acc = alg.multiply(acc, y)
            if c:
                sc = np.array([F.mul(int(x), c) if x else 0 for x in e], dtype=np.int32)
                acc ^= sc
        # purification is a no-op for exact CRT splits; kept as a safeguard
        for _ in range(F.e + 2):
            sq = alg.multiply(acc, acc)
            if (sq == acc).all():
                break
            acc = sq
        assert (alg.multiply(acc, acc) == acc).all()
        out.append(acc)

    check = np.zeros(alg.r, dtype=np.int32)
    for x in out:
        check ^= x
    assert (check == e).all(), "component split lost mass"
    return out


def label_blocks(alg: ClassAlgebra, idems) -> list[str]:
    """'principal' / 'defect0' / 'intermediate' for each idempotent.

    The principal block is the one the augmentation map does not kill; a
    block has defect zero iff its center is one dimensional.
    """
    F, r, q = alg.F2, alg.r, alg.q
    odd_size = np.array([c.size & 1 for c in alg.group.classes], dtype=bool)
    labels = []
    for e in idems:
        aug = 0
        for i in np.nonzero(odd_size)[0]:
            aug = F.add(aug, int(e[i]))
        if aug == 1:
            labels.append("principal")
            continue
        assert aug == 0
        rows = np.zeros((r, r), dtype=np.int32)
        for j in range(r):
            b = np.zeros(r, dtype=np.int32)
            b[j] = 1
            rows[j] = alg.multiply(e, b)
        labels.append("defect0" if ext_rank(F, rows) == 1 else "intermediate")

    n_defect0 = (q - 1) // 4 if q % 4 == 1 else (q - 3) // 4
    m = q - 1 if q % 4 == 1 else q + 1
    while m % 2 == 0:
        m //= 2
    assert labels.count("principal") == 1
    assert labels.count("defect0") == n_defect0
    assert labels.count("intermediate") == (m - 1) // 2
    return labels


def verify_block_patterns(alg: ClassAlgebra, idems, labels) -> dict:
    """Check every determinate idempotent coefficient, per block family.

    Coefficients at the identity class, the unipotent pair, the involution
    class, and one full torus family are pinned by the family; the other
    torus family varies with the block and is only reported.
    """
    group, q = alg.group, alg.q
    res = q % 4
    ix = {c.label: k for k, c in enumerate(group.classes)}
    split_ix = [k for k, c in enumerate(group.classes) if c.family == "split"]
    nonsplit_ix = [k for k, c in enumerate(group.classes) if c.family == "nonsplit"]
    report = {}
    for e, lab in zip(idems, labels):
        assert e[ix["u+"]] == e[ix["u-"]], "unipotent coefficients always agree"
        assert e[ix["inv"]] == 0, "the involution class sum vanishes in every block"
        if lab == "principal":
            assert e[ix["id"]] == 1
            pinned, free = (nonsplit_ix, split_ix) if res == 1 else (split_ix, nonsplit_ix)
            assert all(e[k] == 1 for k in pinned)
        else:
            assert e[ix["id"]] == 0
            assert e[ix["u+"]] == 1
            if lab == "defect0":
                pinned, free = (split_ix, nonsplit_ix) if res == 1 else (nonsplit_ix, split_ix)
                assert all(e[k] == 0 for k in pinned)
            else:
                pinned, free = (nonsplit_ix, split_ix) if res == 1 else (split_ix, nonsplit_ix)
                assert all(e[k] == 0 for k in pinned)
        report[lab] = report.get(lab, 0) + 1
    return report


# --- the permutation module over the internal points ---

def class_action_matrices(group, inc) -> list[np.ndarray]:
    """Parity of #{h in C : p_i^h = p_j}, one 0/1 matrix per class."""
    loc = np.full(len(group.plane.points), -1, dtype=np.int64)
    loc[inc.internal] = np.arange(inc.N)
    ORB = np.stack([loc[group.point_orbit(g)] for g in inc.internal])
    assert (ORB >= 0).all()
    out = []
    for c in group.classes:
        sub = ORB[:, c.members]
        M = np.zeros((inc.N, inc.N), dtype=np.int64)
        for i in range(inc.N):
            M[i] = np.bincount(sub[i], minlength=inc.N)
        out.append((M & 1).astype(np.int32))
    return out


def block_projectors(alg: ClassAlgebra, idems, Ms) -> list[np.ndarray]:
    """P_B = sum of e_B(C-hat) M_C over GF(2^k); addition of codes is XOR."""
    out = []
    for e in idems:
        P = np.zeros(Ms[0].shape, dtype=np.int32)
        for c in np.nonzero(e)[0]:
            P ^= Ms[c] * int(e[c])
        out.append(P)
    return out


def verify_module_decomposition(alg: ClassAlgebra, idems, labels, inc) -> dict:
    """Projector axioms plus the block-by-block kernel dimensions."""
    F, q = alg.F2, alg.q
    res = q % 4
    N = inc.N
    Ms = class_action_matrices(alg.group, inc)
    Ab = inc.A_bool.astype(np.int64)

    # each class matrix commutes with A over GF(2)
    for M in Ms:
        assert (((M @ Ab) & 1) == ((Ab @ M) & 1)).all()

    Ps = block_projectors(alg, idems, Ms)
    total = np.zeros((N, N), dtype=np.int32)
    for i, P in enumerate(Ps):
        assert (ext_matmul(F, P, P) == P).all(), "projector not idempotent"
        total ^= P
        for Q in Ps[i + 1:]:
            assert not ext_matmul(F, P, Q).any(), "projectors not orthogonal"
    assert (total == np.eye(N, dtype=np.int32)).all(), "projectors do not sum to I"

    K = inc.kernel_basis().to_bool().astype(np.int32)
    R = inc.image_basis().to_bool().astype(np.int32)
    ranks, kdims, rdims = [], [], []
    for P in Ps:
        ranks.append(ext_rank(F, P))
        kdims.append(ext_rank(F, ext_matmul(F, K, P)))
        rdims.append(ext_rank(F, ext_matmul(F, R, P)))
    assert sum(ranks) == N, "block components do not fill the module"
    assert sum(kdims) == N - inc.rank(), "kernel mass lost across blocks"

    piece = q - 1 if res == 1 else q + 1
    for lab, dk, dr in zip(labels, kdims, rdims):
        if lab == "defect0":
            assert dk == piece, f"kernel slice in a defect-0 block is {dk}"
            assert dr == 0, "the image must die in every defect-0 block"
        elif lab == "principal":
            assert dk == (0 if res == 1 else 1)
        else:
            assert dk == 0

    if res == 3:
        # the complement of <J-hat> inside the kernel: image of x -> xC
        M2 = inc.C.row_basis().to_bool().astype(np.int32)
        for lab, P in zip(labels, Ps):
            d = ext_rank(F, ext_matmul(F, M2, P)) if len(M2) else 0
            assert d == (piece if lab == "defect0" else 0)

    return {
        "q": q,
        "labels": labels,
        "component_dims": ranks,
        "kernel_dims": kdims,
        "image_dims": rdims,
    }


def block_ideal_dimensions(alg: ClassAlgebra, idems) -> list[int]:
    """Dimensions of the two-sided ideals e_B F[H], by elimination on the
    group basis.  Quadratic memory in |H|; gate by q before calling."""
    group, F = alg.group, alg.F2
    n = group.n
    inv_all = group.inv_idx
    div_class = np.empty((n, n), dtype=np.int16)
    for h in range(n):
        y = group.mul_many(np.arange(n), np.full(n, inv_all[h], dtype=np.int64))
        div_class[h] = group.class_of[y]
    dims = []
    for e in idems:
        codes = np.asarray(e, dtype=np.int32)
        M = codes[div_class]
        dims.append(ext_rank(F, M))
    assert sum(dims) == n, "ideal dimensions must fill the group algebra"
    return dims
