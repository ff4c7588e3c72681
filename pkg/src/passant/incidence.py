"""The passant-line / internal-point incidence matrix A over GF(2).

Rows and columns are both indexed by the internal points in lexicographic
order; row i is the polar passant of the i-th internal point, so
A[i,j] = 1 iff p_j lies on p_i^perp, and A is symmetric with zero diagonal.

D = A^2 + I and C = D + J are the auxiliary operators whose images carve
the kernel of x -> xA; computing dim ker A is the point of the package.
"""

from __future__ import annotations

import numpy as np

from .gf2 import BitMatrix, rank_dense_oracle
from .plane import ConicPlane, PASSANT


class IncidenceSystem:
    def __init__(self, plane: ConicPlane):
        self.plane = plane
        self.q = plane.q
        self.internal = list(plane.internal_points)
        self.N = len(self.internal)
        self.local = {g: i for i, g in enumerate(self.internal)}

        rows = []
        for g in self.internal:
            polar = plane.polar_of_point[g]
            acc = 0
            for pt in plane.points_on_line[polar]:
                j = self.local.get(pt)
                if j is not None:
                    acc |= 1 << j
            rows.append(acc)
        self.A = BitMatrix(rows, self.N)
        self.A_bool = self.A.to_bool()

        Ai = self.A_bool.astype(np.int64)
        self.A2_int = Ai @ Ai
        self.A3_int = self.A2_int @ Ai

        eye = BitMatrix.identity(self.N)
        self.A2 = BitMatrix.from_bool(self.A2_int & 1)
        self.D = self.A2 + eye
        ones = BitMatrix([(1 << self.N) - 1] * self.N, self.N)
        self.C = self.D + ones

    # --- neighbor sets, straight from the line classes ---

    def passant_mates(self, i: int) -> np.ndarray:
        """Internal points r != p_i with line(p_i, r) a passant (local bool)."""
        plane, gi = self.plane, self.internal[i]
        out = np.zeros(self.N, dtype=bool)
        for j, gj in enumerate(self.internal):
            if gj != gi:
                out[j] = plane.line_class[plane.line_through(gi, gj)] == PASSANT
        return out

    def neighbor_set(self, i: int) -> np.ndarray:
        """N(p_i): passant mates, plus p_i itself when q = 3 mod 4."""
        out = self.passant_mates(i)
        if self.q % 4 == 3:
            out[i] = True
        return out

    def co_neighbor_set(self, i: int) -> np.ndarray:
        """The variant with the opposite rule at p_i (rows of A^2 mod 2)."""
        out = self.passant_mates(i)
        if self.q % 4 == 1:
            out[i] = True
        return out

    # --- linear invariants ---

    def rank(self) -> int:
        return self.A.rank()

    def null_dimension(self) -> int:
        return self.N - self.A.rank()

    def kernel_basis(self) -> BitMatrix:
        return self.A.left_nullspace()

    def image_basis(self) -> BitMatrix:
        return self.A.row_basis()


def verify_incidence(inc: IncidenceSystem) -> dict:
    """Check every structural fact about A, D, C; raises on failure."""
    q, N, plane = inc.q, inc.N, inc.plane
    res = q % 4
    assert N == q * (q - 1) // 2

    w = (q + 1) // 2
    assert inc.A.weights() == [w] * N
    assert inc.A.col_weights() == [w] * N
    assert inc.A.transpose() == inc.A
    assert all(inc.A.get(i, i) == 0 for i in range(N)), "internal points avoid their polars"

    # integer A^2: diagonal (q+1)/2, off-diagonal 1 exactly on passant joins
    for i in range(N):
        assert inc.A2_int[i, i] == w
    mates = np.zeros((N, N), dtype=bool)
    for i in range(N):
        mates[i] = inc.passant_mates(i)
    off = ~np.eye(N, dtype=bool)
    assert (inc.A2_int[off] == mates[off].astype(np.int64)).all()

    # rows of A^2 mod 2 and of D are the two neighbor-set variants
    A2b = inc.A2.to_bool()
    Db = inc.D.to_bool()
    nsize = (q * q - 1) // 4 if res == 1 else (q * q + 3) // 4
    for i in range(N):
        assert (A2b[i] == inc.co_neighbor_set(i)).all()
        nb = inc.neighbor_set(i)
        assert (Db[i] == nb).all()
        assert int(nb.sum()) == nsize
    assert all(inc.D.get(i, i) == (1 if res == 3 else 0) for i in range(N))

    # A^3 = A mod 2, with value q at incident positions
    A3 = inc.A3_int
    assert ((A3 & 1) == inc.A_bool).all()
    assert (A3[inc.A_bool] == q).all()

    # D A = 0 mod 2, with the exact even overlaps from the incident cases
    DA = Db.astype(np.int64) @ inc.A_bool.astype(np.int64).T
    assert (DA % 2 == 0).all()
    expect_inc = (q - 1) // 2 if res == 1 else (q + 1) // 2
    expect_diag = 0 if res == 1 else (q + 1) // 2
    for i in range(N):
        for j in range(N):
            if i == j:
                assert DA[i, i] == expect_diag
            elif inc.A_bool[j, i]:
                assert DA[i, j] == expect_inc

    # rank and kernel
    r = inc.rank()
    nullity = N - r
    assert nullity == (q - 1) ** 2 // 4, f"kernel dim {nullity}"
    assert rank_dense_oracle(inc.A_bool) == r

    K = inc.kernel_basis()
    assert K.nrows == nullity
    assert (K @ inc.A).is_zero()
    R = inc.image_basis()
    assert R.nrows == r
    stacked = BitMatrix(R.rows + K.rows, N)
    assert stacked.rank() == N, "image and kernel are not complementary"

    # the image of x -> xD is the whole kernel
    assert (inc.D @ inc.A).is_zero()
    assert inc.D.rank() == nullity

    out = {"q": q, "N": N, "rank": r, "nullity": nullity}
    if res == 3:
        # all-ones row sits in the kernel and complements the image of C
        ones = (1 << N) - 1
        assert inc.A.mul_vec(ones) == 0
        assert (inc.C @ inc.A).is_zero()
        rc = inc.C.rank()
        assert rc == nullity - 1
        assert BitMatrix(inc.C.rows + [ones], N).rank() == nullity
        out["rank_C"] = rc
    return out


def verify_equivariance(inc: IncidenceSystem, group, sample: int | None = None,
                        rng=None) -> int:
    """Check P_h A = A P_h for all h (or a sample); returns how many checked."""
    loc = inc.local
    if sample is None:
        hs = range(group.n)
    else:
        rng = rng or np.random.default_rng(2024)
        hs = [int(x) for x in rng.choice(group.n, size=sample, replace=False)]
    count = 0
    for h in hs:
        # sigma[i] = local index of p_i^h
        porb = [loc[int(group.point_orbit(g)[h])] for g in inc.internal]
        for i in range(inc.N):
            permuted = 0
            row = inc.A.rows[porb[i]]
            for j in range(inc.N):
                if (row >> porb[j]) & 1:
                    permuted |= 1 << j
            assert permuted == inc.A.rows[i], f"equivariance fails at h={h}"
        count += 1
    return count
