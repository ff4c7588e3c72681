"""Linear algebra over GF(2) on integer bitsets, and over GF(2^k) on numpy
arrays of field codes.

BitMatrix rows are Python ints (bit j = column j), so row operations are
single XORs.  The numpy boolean elimination at the bottom is deliberately
independent of the bitset code path and acts as a rank oracle in tests.

GF(2^k) arrays hold integer codes from gfq.Fq with p = 2; addition of codes
is XOR, multiplication goes through the log/antilog tables.
"""

from __future__ import annotations

import numpy as np


class BitMatrix:
    __slots__ = ("rows", "ncols")

    def __init__(self, rows: list[int], ncols: int):
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def zeros(cls, m: int, n: int) -> "BitMatrix":
        return cls([0] * m, n)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def from_bool(cls, arr) -> "BitMatrix":
        arr = np.asarray(arr)
        rows = []
        for row in arr:
            acc = 0
            for j in np.nonzero(row)[0]:
                acc |= 1 << int(j)
            rows.append(acc)
        return cls(rows, arr.shape[1])

    def to_bool(self) -> np.ndarray:
        out = np.zeros((len(self.rows), self.ncols), dtype=bool)
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    out[i, j] = True
                r >>= 1
                j += 1
        return out

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows[:], self.ncols)

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def __eq__(self, other) -> bool:
        return self.ncols == other.ncols and self.rows == other.rows

    def __add__(self, other) -> "BitMatrix":
        assert self.ncols == other.ncols and self.nrows == other.nrows
        return BitMatrix([a ^ b for a, b in zip(self.rows, other.rows)], self.ncols)

    def __matmul__(self, other) -> "BitMatrix":
        assert self.ncols == other.nrows
        out = []
        for r in self.rows:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= other.rows[j]
                r >>= 1
                j += 1
            out.append(acc)
        return BitMatrix(out, other.ncols)

    def transpose(self) -> "BitMatrix":
        out = [0] * self.ncols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    out[j] |= 1 << i
                r >>= 1
                j += 1
        return BitMatrix(out, self.nrows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def weights(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def col_weights(self) -> list[int]:
        return self.transpose().weights()

    def mul_vec(self, v: int) -> int:
        """Row vector v times this matrix."""
        acc = 0
        j = 0
        while v:
            if v & 1:
                acc ^= self.rows[j]
            v >>= 1
            j += 1
        return acc

    def rank(self) -> int:
        basis: dict[int, int] = {}
        for r in self.rows:
            while r:
                lead = r.bit_length() - 1
                if lead in basis:
                    r ^= basis[lead]
                else:
                    basis[lead] = r
                    break
        return len(basis)

    def row_basis(self) -> "BitMatrix":
        """A reduced basis of the row space."""
        basis: dict[int, int] = {}
        for r in self.rows:
            while r:
                lead = r.bit_length() - 1
                if lead in basis:
                    r ^= basis[lead]
                else:
                    basis[lead] = r
                    break
        # back-substitute so each pivot column is cleared elsewhere
        for lead in sorted(basis, reverse=True):
            for l2 in basis:
                if l2 > lead and (basis[l2] >> lead) & 1:
                    basis[l2] ^= basis[lead]
        return BitMatrix([basis[l] for l in sorted(basis)], self.ncols)

    def left_nullspace(self) -> "BitMatrix":
        """Basis of {x : x A = 0}, rows as bit vectors of length nrows."""
        basis: dict[int, tuple[int, int]] = {}
        out = []
        for i, r in enumerate(self.rows):
            t = 1 << i
            while r:
                lead = r.bit_length() - 1
                if lead not in basis:
                    basis[lead] = (r, t)
                    break
                br, bt = basis[lead]
                r ^= br
                t ^= bt
            else:
                out.append(t)
        return BitMatrix(out, self.nrows)

    def __repr__(self):
        return f"BitMatrix({self.nrows}x{self.ncols})"


def rank_dense_oracle(arr) -> int:
    """GF(2) rank by dense boolean elimination, independent of BitMatrix."""
    M = np.array(arr, dtype=bool, copy=True)
    m, n = M.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        hits = np.nonzero(M[r:, c])[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        below = np.nonzero(M[r + 1:, c])[0] + r + 1
        M[below] ^= M[r]
        r += 1
    return r


# --- alist serialization (columns first, 1-based, zero padded) ---

def write_alist(path, mat) -> None:
    arr = mat.to_bool() if isinstance(mat, BitMatrix) else np.asarray(mat, dtype=bool)
    m, n = arr.shape
    cols = [list(np.nonzero(arr[:, j])[0] + 1) for j in range(n)]
    rows = [list(np.nonzero(arr[i, :])[0] + 1) for i in range(m)]
    cmax = max((len(c) for c in cols), default=0)
    rmax = max((len(r) for r in rows), default=0)
    with open(path, "w") as fh:
        fh.write(f"{n} {m}\n")
        fh.write(f"{cmax} {rmax}\n")
        fh.write(" ".join(str(len(c)) for c in cols) + "\n")
        fh.write(" ".join(str(len(r)) for r in rows) + "\n")
        for c in cols:
            fh.write(" ".join(str(x) for x in c + [0] * (cmax - len(c))) + "\n")
        for r in rows:
            fh.write(" ".join(str(x) for x in r + [0] * (rmax - len(r))) + "\n")


def read_alist(path) -> np.ndarray:
    with open(path) as fh:
        chunks = [[int(x) for x in line.split()] for line in fh if line.strip()]
    n, m = chunks[0]
    cmax, rmax = chunks[1]
    col_w, row_w = chunks[2], chunks[3]
    assert len(col_w) == n and len(row_w) == m
    arr = np.zeros((m, n), dtype=bool)
    for j in range(n):
        ones = [x for x in chunks[4 + j] if x]
        assert len(ones) == col_w[j] <= cmax
        arr[[x - 1 for x in ones], j] = True
    for i in range(m):
        ones = [x for x in chunks[4 + n + i] if x]
        assert len(ones) == row_w[i] <= rmax
        assert all(arr[i, x - 1] for x in ones)
    return arr


# --- GF(2^k) arrays of field codes ---

def ext_mul(F, a, b) -> np.ndarray:
    a, b = np.broadcast_arrays(np.asarray(a, np.int32), np.asarray(b, np.int32))
    out = np.zeros(a.shape, dtype=np.int32)
    mask = (a != 0) & (b != 0)
    out[mask] = F.exp_np[F.log_np[a[mask]] + F.log_np[b[mask]]]
    return out

def ext_scale(F, s: int, a) -> np.ndarray:
    a = np.asarray(a, np.int32)
    if s == 0:
        return np.zeros(a.shape, dtype=np.int32)
    out = np.zeros(a.shape, dtype=np.int32)
    mask = a != 0
    out[mask] = F.exp_np[F.log_np[a[mask]] + F.log[s]]
    return out

def ext_outer(F, u, v) -> np.ndarray:
    u, v = np.asarray(u, np.int32), np.asarray(v, np.int32)
    out = np.zeros((u.size, v.size), dtype=np.int32)
    mask = (u != 0)[:, None] & (v != 0)[None, :]
    logs = F.log_np[u][:, None] + F.log_np[v][None, :]
    out[mask] = F.exp_np[logs[mask]]
    return out

def ext_matmul(F, A, B) -> np.ndarray:
    A, B = np.asarray(A, np.int32), np.asarray(B, np.int32)
    m, n = A.shape
    n2, p = B.shape
    assert n == n2
    C = np.zeros((m, p), dtype=np.int32)
    for k in range(n):
        C ^= ext_outer(F, A[:, k], B[k, :])
    return C

def ext_rank(F, M) -> int:
    M = np.array(M, dtype=np.int32, copy=True)
    m, n = M.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        hits = np.nonzero(M[r:, c])[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = ext_scale(F, F.inv(int(M[r, c])), M[r])
        col = M[r + 1:, c]
        live = np.nonzero(col)[0]
        if live.size:
            M[r + 1 + live] ^= ext_outer(F, col[live], M[r])
        r += 1
    return r

def ext_rref(F, M) -> tuple[np.ndarray, list[int]]:
    M = np.array(M, dtype=np.int32, copy=True)
    m, n = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        hits = np.nonzero(M[r:, c])[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = ext_scale(F, F.inv(int(M[r, c])), M[r])
        col = M[:, c].copy()
        col[r] = 0
        live = np.nonzero(col)[0]
        if live.size:
            M[live] ^= ext_outer(F, col[live], M[r])
        pivots.append(c)
        r += 1
    return M, pivots

def ext_solve(F, A, b):
    """Solve A x = b over the binary extension field; one solution or None."""
    A = np.asarray(A, np.int32)
    b = np.asarray(b, np.int32)
    m, n = A.shape
    aug = np.concatenate([A, b.reshape(m, 1)], axis=1)
    R, pivots = ext_rref(F, aug)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int32)
    for r, c in enumerate(pivots):
        x[c] = R[r, n]
    return x
