"""Ordinary character table of PSL(2,q) and the internal-point character.

Torus classes carry an angle: the i-th split class is the image of
diag(x^i, x^-i) for a primitive root x, the k-th nonsplit class the k-th
power of a norm-one generator.  The involution class is itself a torus
element (split when q = 1 mod 4, nonsplit when q = 3 mod 4), so every row
is generated from four value rules plus the torus angle of the column.

The two half-degree characters are determined up to swapping their values
on the unipotent pair; a swap permutes two rows, so orthogonality and the
multiplicity checks below do not depend on the choice made here.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

TOL = 1e-6


class CharacterTable:
    """Complex table, one row per irreducible, columns in class order."""

    def __init__(self, group):
        self.group = group
        q = group.q
        self.q = q
        self.tags = self._column_tags()
        self.names: list[str] = []
        self.degrees: list[int] = []
        rows = []
        eps = cmath.exp(2j * math.pi / (q - 1))
        dlt = cmath.exp(2j * math.pi / (q + 1))

        def add(name, fn):
            vals = np.array([fn(tag) for tag in self.tags], dtype=np.complex128)
            self.names.append(name)
            self.degrees.append(int(round(vals[0].real)))
            rows.append(vals)

        add("triv", lambda tag: 1.0)
        add("st", self._steinberg)
        if q % 4 == 1:
            for r in range(1, (q - 5) // 4 + 1):
                add(f"phi{r}", self._principal(eps, r))
            for s in range(1, (q - 1) // 4 + 1):
                add(f"chi{s}", self._discrete(dlt, s))
            rq = math.sqrt(q)
            for name, sign in (("beta1", 1.0), ("beta2", -1.0)):
                add(name, self._half_split(sign * rq))
        else:
            for r in range(1, (q - 3) // 4 + 1):
                add(f"phi{r}", self._principal(eps, r))
            for s in range(1, (q - 3) // 4 + 1):
                add(f"chi{s}", self._discrete(dlt, s))
            rq = math.sqrt(q)
            for name, sign in (("eta1", 1.0), ("eta2", -1.0)):
                add(name, self._half_nonsplit(sign * rq * 1j))
        self.table = np.array(rows)
        assert self.table.shape == (len(group.classes), len(group.classes))

    def _column_tags(self):
        q = self.group.q
        tags = []
        for c in self.group.classes:
            if c.family == "involution":
                if q % 4 == 1:
                    tags.append(("split", (q - 1) // 4))
                else:
                    tags.append(("nonsplit", (q + 1) // 4))
            elif c.family == "unipotent":
                tags.append(("u", 1.0 if c.family_index == 1 else -1.0))
            elif c.family == "id":
                tags.append(("id", 0))
            else:
                tags.append((c.family, c.family_index))
        return tags

    def _steinberg(self, tag):
        kind = tag[0]
        if kind == "id":
            return complex(self.q)
        if kind == "u":
            return 0.0
        return 1.0 if kind == "split" else -1.0

    def _principal(self, eps, r):
        q = self.q

        def fn(tag):
            kind, val = tag
            if kind == "id":
                return complex(q + 1)
            if kind == "u":
                return 1.0
            if kind == "split":
                return eps ** (2 * r * val) + eps ** (-2 * r * val)
            return 0.0

        return fn

    def _discrete(self, dlt, s):
        q = self.q

        def fn(tag):
            kind, val = tag
            if kind == "id":
                return complex(q - 1)
            if kind == "u":
                return -1.0
            if kind == "nonsplit":
                return -(dlt ** (2 * s * val) + dlt ** (-2 * s * val))
            return 0.0

        return fn

    def _half_split(self, root):
        q = self.q

        def fn(tag):
            kind, val = tag
            if kind == "id":
                return complex((q + 1) / 2)
            if kind == "u":
                return (1.0 + val * root) / 2
            if kind == "split":
                return complex((-1.0) ** val)
            return 0.0

        return fn

    def _half_nonsplit(self, root):
        q = self.q

        def fn(tag):
            kind, val = tag
            if kind == "id":
                return complex((q - 1) / 2)
            if kind == "u":
                return (-1.0 + val * root) / 2
            if kind == "nonsplit":
                return complex(-((-1.0) ** val))
            return 0.0

        return fn

    # --- inner products ---

    def inner(self, x, y) -> complex:
        sizes = np.array([c.size for c in self.group.classes], dtype=np.float64)
        return (sizes * np.asarray(x) * np.conj(np.asarray(y))).sum() / self.group.n

    def permutation_character(self) -> np.ndarray:
        """Fixed internal points of a representative, per class."""
        internal = self.group.plane.internal_points
        vals = []
        for c in self.group.classes:
            fixed = sum(1 for p in internal if self.group.point_orbit(p)[c.rep] == p)
            vals.append(float(fixed))
        return np.array(vals, dtype=np.complex128)

    def multiplicities(self) -> dict[str, int]:
        pi = self.permutation_character()
        out = {}
        for name, row in zip(self.names, self.table):
            m = self.inner(pi, row)
            assert abs(m.imag) < TOL and abs(m.real - round(m.real)) < TOL, (name, m)
            out[name] = int(round(m.real))
        return out


def verify_characters(group) -> dict:
    """Orthogonality, degree bookkeeping, and column sums for the table."""
    ct = CharacterTable(group)
    q, n = group.q, group.n
    r = len(group.classes)

    gram = np.zeros((r, r), dtype=np.complex128)
    for i in range(r):
        for j in range(r):
            gram[i, j] = ct.inner(ct.table[i], ct.table[j])
    assert np.abs(gram - np.eye(r)).max() < TOL, "rows are not orthonormal"

    sizes = np.array([c.size for c in group.classes], dtype=np.float64)
    col = ct.table.conj().T @ ct.table  # column gram, unweighted
    target = np.diag(n / sizes)
    assert np.abs(col - target).max() < TOL * n, "column orthogonality fails"

    assert sum(d * d for d in ct.degrees) == n, "degree squares must sum to |H|"
    assert len(ct.names) == (q + 5) // 2
    return {"q": q, "names": ct.names, "degrees": ct.degrees}


def _suborbit_count(group) -> int:
    """Orbits of a point stabilizer on the internal points."""
    internal = group.plane.internal_points
    p0 = internal[0]
    orbit = set(group.point_orbit(p0).tolist())
    assert orbit == set(internal), "the group must be transitive on internal points"
    stab = group.stabilizer(p0)
    assert len(stab) == group.q + 1
    seen: set[int] = set()
    count = 0
    for p in internal:
        if p in seen:
            continue
        seen.update(group.point_orbit(p)[stab].tolist())
        count += 1
    return count


def verify_permutation_module(group) -> dict:
    """Multiplicity pattern of the internal-point character.

    The discrete series each appear once when q = 1 mod 4, the principal
    series each appear once when q = 3 mod 4, and the half-degree pair
    enters exactly when q is 1 or 3 mod 8.  Fails loudly at q = 3 where
    the module is trivial, so callers keep that case out.
    """
    q = group.q
    ct = CharacterTable(group)
    mult = ct.multiplicities()
    N = len(group.plane.internal_points)

    assert mult["triv"] == 1
    halves = ("beta1", "beta2") if q % 4 == 1 else ("eta1", "eta2")
    expected_half = 1 if q % 8 in (1, 3) else 0
    assert mult[halves[0]] == expected_half and mult[halves[1]] == expected_half
    if q % 4 == 1:
        assert mult["st"] == 1
        for name in mult:
            if name.startswith("chi"):
                assert mult[name] == 1, (name, mult[name])
    else:
        assert mult["st"] == 0
        for name in mult:
            if name.startswith("phi"):
                assert mult[name] == 1, (name, mult[name])

    total = sum(m * d for m, d in zip(mult.values(), ct.degrees))
    assert total == N, "multiplicities must rebuild the module dimension"

    pi = ct.permutation_character()
    self_inner = ct.inner(pi, pi)
    assert abs(self_inner.imag) < TOL and abs(self_inner.real - round(self_inner.real)) < TOL
    rank = int(round(self_inner.real))
    assert rank == sum(m * m for m in mult.values())
    assert rank == _suborbit_count(group), "Burnside count disagrees"
    return {"q": q, "multiplicities": mult, "rank": rank}
