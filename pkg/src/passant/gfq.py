"""Small finite fields GF(p^e) with deterministic, reproducible tables.

Elements are integer codes 0..q-1, the little-endian base-p encoding of the
coefficient vector over the prime field.  The reducing polynomial is the
lexicographically least monic irreducible (ascending coefficient order), and
the distinguished generator xi is the least primitive element under the code
ordering, so every table built here is a pure function of q.
"""

from __future__ import annotations

import math

import numpy as np

_FIELDS: dict[int, "Fq"] = {}

# fields up to this order get dense q x q lookup tables for vectorized use
_DENSE_LIMIT = 64


def GF(q: int) -> "Fq":
    """Return the cached field of order q."""
    if q not in _FIELDS:
        _FIELDS[q] = Fq(q)
    return _FIELDS[q]


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _prime_power(q: int) -> tuple[int, int]:
    fac = factor_int(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    [(p, e)] = fac.items()
    return p, e


# --- polynomial helpers over the prime field, used only during construction ---

def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    f = f[:]
    q = [0] * (len(f) - len(g) + 1) if len(f) >= len(g) else []
    ginv = pow(g[-1], p - 2, p)
    while len(f) >= len(g) and _poly_trim(f):
        shift = len(f) - len(g)
        c = f[-1] * ginv % p
        q[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _poly_trim(f)
    return _poly_trim(q), f


def _poly_is_irreducible(f: list[int], p: int) -> bool:
    e = len(f) - 1
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for code in range(p ** d):
            g, rest = [], code
            for _ in range(d):
                g.append(rest % p)
                rest //= p
            g.append(1)
            if not _poly_divmod(f, g, p)[1]:
                return False
    return True


class Fq:
    """Arithmetic in GF(q) on integer codes.

    Fields small enough for the projective geometry (q <= 64) carry dense
    q x q numpy tables addT/mulT plus negT/invT so bulk matrix work can stay
    vectorized; larger binary fields work through log/antilog tables only.
    """

    def __init__(self, q: int):
        p, e = _prime_power(q)
        self.q, self.p, self.e = q, p, e
        self.modulus = self._find_modulus()
        self.dense = q <= _DENSE_LIMIT

        self.xi = self._least_primitive()
        self.exp = [0] * (q - 1)
        self.log = [-1] * q
        x = 1
        for i in range(q - 1):
            self.exp[i] = x
            self.log[x] = i
            x = self._mul_codes(x, self.xi)
        assert x == 1 and self.log.count(-1) == 1, "xi is not primitive"

        # nonzero squares are the even powers of xi
        self.squares = frozenset(self.exp[i] for i in range(0, q - 1, 2))
        self.nonsquares = frozenset(range(1, q)) - self.squares
        if p > 2:
            # cross-check against Euler's criterion once, then trust log parity
            for a in range(1, q):
                euler = self.pow_(a, (q - 1) // 2) == 1
                assert euler == (a in self.squares), "Euler criterion disagrees with log parity"

        if self.dense:
            self.addT = np.zeros((q, q), dtype=np.int32)
            for a in range(q):
                for b in range(q):
                    self.addT[a, b] = self._add_codes(a, b)
            self.mulT = np.array(
                [[self._mul_codes(a, b) for b in range(q)] for a in range(q)],
                dtype=np.int32,
            )
            self.negT = np.array([self._neg_code(a) for a in range(q)], dtype=np.int32)
            self.invT = np.zeros(q, dtype=np.int32)
            for a in range(1, q):
                self.invT[a] = self.exp[(q - 1 - self.log[a]) % (q - 1)]
        if p > 2:
            self.half = self.inv(self.of_int(2))

        # doubled antilog table, so vectorized products can skip the mod
        self.exp_np = np.array(self.exp + self.exp, dtype=np.int32)
        self.log_np = np.array([0] + self.log[1:], dtype=np.int32)

    # --- construction internals ---

    def _find_modulus(self) -> tuple[int, ...]:
        p, e = self.p, self.e
        if e == 1:
            return (0, 1)
        for code in range(p ** e):
            f, rest = [], code
            for _ in range(e):
                f.append(rest % p)
                rest //= p
            f.append(1)
            if _poly_is_irreducible(f, p):
                return tuple(f)
        raise AssertionError("no irreducible polynomial found")

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _add_codes(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = self._digits(a), self._digits(b)
        out = 0
        for i in range(self.e - 1, -1, -1):
            out = out * self.p + (da[i] + db[i]) % self.p
        return out

    def _neg_code(self, a: int) -> int:
        out = 0
        for d in reversed(self._digits(a)):
            out = out * self.p + (-d) % self.p
        return out

    def _mul_codes(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return a * b % p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # fold down with x^e = -(low part of the modulus)
        for i in range(2 * e - 2, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * self.modulus[j]) % p
        out = 0
        for d in reversed(prod[:e]):
            out = out * p + d
        return out

    def _pow_codes(self, a: int, n: int) -> int:
        out, base = 1, a
        while n:
            if n & 1:
                out = self._mul_codes(out, base)
            base = self._mul_codes(base, base)
            n >>= 1
        return out

    def _least_primitive(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        primes = list(factor_int(n))
        for a in range(2, self.q):
            if all(self._pow_codes(a, n // r) != 1 for r in primes):
                return a
        raise AssertionError("no primitive element found")

    # --- scalar arithmetic on codes ---

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._add_codes(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self._neg_code(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if a == 0:
            return 0 if n else 1
        return self.exp[self.log[a] * n % (self.q - 1)]

    def of_int(self, n: int) -> int:
        """Image of the rational integer n in the prime subfield."""
        return n % self.p

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(self._digits(a))

    def from_coeffs(self, cs) -> int:
        out = 0
        for d in reversed(list(cs)):
            out = out * self.p + d % self.p
        return out

    def is_square(self, a: int) -> bool:
        if a == 0:
            raise ValueError("0 is neither a square nor a nonsquare here")
        return a in self.squares

    def units(self) -> range:
        return range(1, self.q)

    def __repr__(self) -> str:
        return f"Fq({self.q})"


def shifted_square_counts(F: Fq) -> dict[tuple[str, str], int]:
    """Count units x by the square classes of x and x+1.

    Key ('sq', 'non') counts squares x with x+1 a nonsquare; x = -1 falls
    out of every bucket since x+1 = 0 is in neither class.
    """
    out = {(u, v): 0 for u in ("sq", "non") for v in ("sq", "non")}
    for x in F.units():
        x1 = F.add(x, 1)
        if x1 == 0:
            continue
        key = ("sq" if F.is_square(x) else "non", "sq" if F.is_square(x1) else "non")
        out[key] += 1
    return out


def binary_splitting_field(q: int) -> Fq:
    """The field GF(2^k) over which the class algebra mod 2 splits.

    k is the order of 2 modulo the odd part of lcm(q-1, q+1), which makes
    every eigenvalue of the class sums rational over GF(2^k).
    """
    m = math.lcm(q - 1, q + 1)
    while m % 2 == 0:
        m //= 2
    if m == 1:
        return GF(2)
    k, r = 1, 2 % m
    while r != 1:
        r = r * 2 % m
        k += 1
    return GF(2 ** k)
