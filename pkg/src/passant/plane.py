"""The projective plane PG(2,q) over odd GF(q) with its standard conic.

Points and lines are homogeneous triples of field codes, normalized so the
first nonzero coordinate is 1 and listed in lexicographic order.  The conic
is the zero set of X1^2 - X0*X2; its polarity swaps internal points with
passant lines, external points with secant lines.
"""

from __future__ import annotations

from .gfq import GF, Fq

INTERNAL, EXTERNAL, ON_CONIC = "internal", "external", "conic"
PASSANT, TANGENT, SECANT = "passant", "tangent", "secant"


class ConicPlane:
    def __init__(self, q: int):
        F = GF(q)
        if F.p == 2 or q < 3:
            raise ValueError("need an odd prime power q >= 3")
        self.q = q
        self.F = F

        self.points = self._homogeneous_triples()
        self.lines = list(self.points)
        self.point_index = {v: i for i, v in enumerate(self.points)}
        self.line_index = self.point_index
        npts = len(self.points)
        assert npts == q * q + q + 1

        self.conic = [self.point_index[(1, r, F.mul(r, r))] for r in range(q)]
        self.conic.append(self.point_index[(0, 0, 1)])
        self.conic.sort()
        conic_set = set(self.conic)

        self.point_class = [self._point_class(v) for v in self.points]
        self.line_class = [self._line_class(v) for v in self.lines]
        assert {i for i, c in enumerate(self.point_class) if c == ON_CONIC} == conic_set

        self.internal_points = [i for i, c in enumerate(self.point_class) if c == INTERNAL]
        self.external_points = [i for i, c in enumerate(self.point_class) if c == EXTERNAL]
        self.passants = [j for j, c in enumerate(self.line_class) if c == PASSANT]
        self.tangents = [j for j, c in enumerate(self.line_class) if c == TANGENT]
        self.secants = [j for j, c in enumerate(self.line_class) if c == SECANT]
        assert len(self.internal_points) == len(self.passants) == q * (q - 1) // 2
        assert len(self.external_points) == len(self.secants) == q * (q + 1) // 2
        assert len(self.tangents) == q + 1

        self.polar_of_point = [self.line_index[self._polar_point(v)] for v in self.points]
        self.polar_of_line = [self.point_index[self._polar_line(v)] for v in self.lines]
        for i in range(npts):
            assert self.polar_of_line[self.polar_of_point[i]] == i

        self.points_on_line = [
            [i for i in range(npts) if self.incident(i, j)] for j in range(npts)
        ]
        self.lines_through_point = [
            [j for j in range(npts) if self.incident(i, j)] for i in range(npts)
        ]

    # --- construction ---

    def _homogeneous_triples(self):
        q = self.q
        out = [(0, 0, 1)]
        out += [(0, 1, z) for z in range(q)]
        out += [(1, y, z) for y in range(q) for z in range(q)]
        return out

    def normalize(self, v):
        F = self.F
        for c in v:
            if c:
                s = F.inv(c)
                return tuple(F.mul(s, x) for x in v)
        raise ValueError("zero vector is not projective")

    def _point_class(self, v):
        F = self.F
        d = F.sub(F.mul(v[1], v[1]), F.mul(v[0], v[2]))
        if d == 0:
            return ON_CONIC
        return EXTERNAL if F.is_square(d) else INTERNAL

    def _line_class(self, v):
        F = self.F
        d = F.sub(F.mul(v[1], v[1]), F.mul(F.of_int(4), F.mul(v[0], v[2])))
        if d == 0:
            return TANGENT
        return SECANT if F.is_square(d) else PASSANT

    def _polar_point(self, v):
        # the polarity of X1^2 - X0*X2 sends (x, y, z) to the line [z, -2y, x]
        F = self.F
        return self.normalize((v[2], F.neg(F.add(v[1], v[1])), v[0]))

    def _polar_line(self, v):
        F = self.F
        two = F.of_int(2)
        return self.normalize(
            (F.neg(F.mul(two, v[2])), v[1], F.neg(F.mul(two, v[0])))
        )

    # --- incidence ---

    def dot(self, u, v):
        F = self.F
        s = 0
        for a, b in zip(u, v):
            s = F.add(s, F.mul(a, b))
        return s

    def incident(self, point, line) -> bool:
        return self.dot(self.points[point], self.lines[line]) == 0

    def cross(self, u, v):
        F = self.F
        return (
            F.sub(F.mul(u[1], v[2]), F.mul(u[2], v[1])),
            F.sub(F.mul(u[2], v[0]), F.mul(u[0], v[2])),
            F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0])),
        )

    def line_through(self, p1: int, p2: int) -> int:
        w = self.cross(self.points[p1], self.points[p2])
        return self.line_index[self.normalize(w)]

    def meet(self, l1: int, l2: int) -> int:
        w = self.cross(self.lines[l1], self.lines[l2])
        return self.point_index[self.normalize(w)]

    # --- census helpers ---

    def line_profile(self, line: int):
        """How many conic/external/internal points the line carries."""
        out = {ON_CONIC: 0, EXTERNAL: 0, INTERNAL: 0}
        for i in self.points_on_line[line]:
            out[self.point_class[i]] += 1
        return out

    def point_profile(self, point: int):
        """How many tangent/secant/passant lines pass through the point."""
        out = {TANGENT: 0, SECANT: 0, PASSANT: 0}
        for j in self.lines_through_point[point]:
            out[self.line_class[j]] += 1
        return out

    def polar_meet_class(self, point: int, line: int) -> str:
        """Point class of p^perp meet l (for lines other than p^perp)."""
        return self.point_class[self.meet(self.polar_of_point[point], line)]

    def __repr__(self):
        return f"ConicPlane(q={self.q})"


def verify_plane(plane: ConicPlane) -> dict:
    """Exhaustive census of the conic geometry.

    Checks every line profile against its type, the dual point profiles,
    that the polarity exchanges the three point classes with the three
    line classes, and that no tangent passes through two internal points.
    """
    q = plane.q
    assert len(plane.conic) == q + 1
    assert len(plane.internal_points) == q * (q - 1) // 2
    assert len(plane.external_points) == q * (q + 1) // 2
    assert len(plane.tangents) == q + 1
    assert len(plane.secants) == q * (q + 1) // 2
    assert len(plane.passants) == q * (q - 1) // 2

    expected_line = {
        TANGENT: {ON_CONIC: 1, EXTERNAL: q, INTERNAL: 0},
        SECANT: {ON_CONIC: 2, EXTERNAL: (q - 1) // 2, INTERNAL: (q - 1) // 2},
        PASSANT: {ON_CONIC: 0, EXTERNAL: (q + 1) // 2, INTERNAL: (q + 1) // 2},
    }
    expected_point = {
        ON_CONIC: {TANGENT: 1, SECANT: q, PASSANT: 0},
        EXTERNAL: {TANGENT: 2, SECANT: (q - 1) // 2, PASSANT: (q - 1) // 2},
        INTERNAL: {TANGENT: 0, SECANT: (q + 1) // 2, PASSANT: (q + 1) // 2},
    }
    polar_pairs = {ON_CONIC: TANGENT, EXTERNAL: SECANT, INTERNAL: PASSANT}

    for j, kind in enumerate(plane.line_class):
        assert len(plane.points_on_line[j]) == q + 1
        assert plane.line_profile(j) == expected_line[kind], (j, kind)
    for i, kind in enumerate(plane.point_class):
        assert len(plane.lines_through_point[i]) == q + 1
        assert plane.point_profile(i) == expected_point[kind], (i, kind)
        assert plane.line_class[plane.polar_of_point[i]] == polar_pairs[kind]
        on_own_polar = plane.incident(i, plane.polar_of_point[i])
        assert on_own_polar == (kind == ON_CONIC)

    internal = plane.internal_points
    for a in range(len(internal)):
        for b in range(a + 1, len(internal)):
            kind = plane.line_class[plane.line_through(internal[a], internal[b])]
            assert kind != TANGENT, "two internal points on a tangent"

    return {"q": q, "points": len(plane.points), "internal": len(internal)}
