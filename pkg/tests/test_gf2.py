import numpy as np
import pytest

from passant.gfq import GF
from passant.gf2 import (
    BitMatrix, rank_dense_oracle, write_alist, read_alist,
    ext_mul, ext_matmul, ext_rank, ext_rref, ext_solve,
)


def test_identity_and_matmul():
    rng = np.random.default_rng(7)
    M = BitMatrix.from_bool(rng.integers(0, 2, size=(9, 9)).astype(bool))
    I = BitMatrix.identity(9)
    assert I @ M == M and M @ I == M
    assert (M + M).is_zero()


def test_matmul_matches_numpy():
    rng = np.random.default_rng(1)
    for _ in range(25):
        a = rng.integers(0, 2, size=(7, 11)).astype(bool)
        b = rng.integers(0, 2, size=(11, 5)).astype(bool)
        left = (BitMatrix.from_bool(a) @ BitMatrix.from_bool(b)).to_bool()
        right = (a.astype(int) @ b.astype(int)) % 2
        assert (left == right.astype(bool)).all()


def test_rank_against_dense_oracle():
    rng = np.random.default_rng(42)
    for _ in range(200):
        m, n = rng.integers(1, 20, size=2)
        arr = rng.integers(0, 2, size=(m, n)).astype(bool)
        assert BitMatrix.from_bool(arr).rank() == rank_dense_oracle(arr)


def test_left_nullspace_annihilates():
    rng = np.random.default_rng(3)
    for _ in range(40):
        arr = rng.integers(0, 2, size=(12, 8)).astype(bool)
        M = BitMatrix.from_bool(arr)
        ker = M.left_nullspace()
        assert ker.nrows + M.rank() == 12
        if ker.nrows:
            assert (ker @ M).is_zero()
        assert ker.rank() == ker.nrows


def test_row_basis_spans_same_space():
    rng = np.random.default_rng(5)
    arr = rng.integers(0, 2, size=(10, 6)).astype(bool)
    M = BitMatrix.from_bool(arr)
    B = M.row_basis()
    assert B.rank() == B.nrows == M.rank()
    stacked = BitMatrix(M.rows + B.rows, M.ncols)
    assert stacked.rank() == M.rank()


def test_alist_round_trip(tmp_path):
    rng = np.random.default_rng(11)
    arr = rng.integers(0, 2, size=(6, 9)).astype(bool)
    arr[0] = 0  # zero rows must survive
    path = tmp_path / "m.alist"
    write_alist(path, BitMatrix.from_bool(arr))
    back = read_alist(path)
    assert (back == arr).all()
    first = open(path).readline().split()
    assert first == ["9", "6"]  # columns first


def test_ext_field_matmul_associative():
    F = GF(4)
    rng = np.random.default_rng(13)
    A = rng.integers(0, 4, size=(5, 6)).astype(np.int32)
    B = rng.integers(0, 4, size=(6, 4)).astype(np.int32)
    C = rng.integers(0, 4, size=(4, 3)).astype(np.int32)
    left = ext_matmul(F, ext_matmul(F, A, B), C)
    right = ext_matmul(F, A, ext_matmul(F, B, C))
    assert (left == right).all()


def test_ext_mul_matches_scalar():
    F = GF(16)
    rng = np.random.default_rng(17)
    a = rng.integers(0, 16, size=50).astype(np.int32)
    b = rng.integers(0, 16, size=50).astype(np.int32)
    prod = ext_mul(F, a, b)
    for x, y, z in zip(a, b, prod):
        assert F.mul(int(x), int(y)) == int(z)


def test_ext_rank_and_rref():
    F = GF(4)
    rng = np.random.default_rng(19)
    for _ in range(20):
        M = rng.integers(0, 4, size=(6, 6)).astype(np.int32)
        r = ext_rank(F, M)
        R, pivots = ext_rref(F, M)
        assert len(pivots) == r
        for k, j in enumerate(pivots):
            col = R[:, j]
            assert col[k] == 1 and (np.delete(col, k) == 0).all()


def test_ext_solve_consistency():
    F = GF(4)
    rng = np.random.default_rng(23)
    for _ in range(30):
        A = rng.integers(0, 4, size=(6, 4)).astype(np.int32)
        x = rng.integers(0, 4, size=4).astype(np.int32)
        b = ext_matmul(F, A, x.reshape(-1, 1)).ravel()
        sol = ext_solve(F, A, b)
        assert sol is not None
        assert (ext_matmul(F, A, sol.reshape(-1, 1)).ravel() == b).all()
