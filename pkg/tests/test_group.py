import numpy as np
import pytest

from passant.plane import ConicPlane
from passant.group import (
    ConicGroup, verify_group, verify_stabilizer,
    canonical_internal_point, outer_coset_stabilizer,
)


@pytest.fixture(scope="module", params=[5, 7, 9])
def group(request):
    return ConicGroup(ConicPlane(request.param))


def test_order(group):
    q = group.q
    assert group.n == q * (q * q - 1) // 2


def test_class_equation(group):
    q = group.q
    sizes = [c.size for c in group.classes]
    assert sum(sizes) == group.n
    assert len(group.classes) == (q + 5) // 2
    by_label = {c.label: c.size for c in group.classes}
    assert by_label["id"] == 1
    assert by_label["u+"] == by_label["u-"] == (q * q - 1) // 2
    if q % 4 == 1:
        assert by_label["inv"] == q * (q + 1) // 2
    else:
        assert by_label["inv"] == q * (q - 1) // 2


def test_split_and_nonsplit_class_sizes(group):
    q = group.q
    for c in group.classes:
        if c.family == "split":
            assert c.size == q * (q + 1)
        elif c.family == "nonsplit":
            assert c.size == q * (q - 1)


def test_classes_partition_the_group(group):
    cover = np.zeros(group.n, dtype=int)
    for c in group.classes:
        cover[c.members] += 1
    assert (cover == 1).all()
    for c in group.classes:
        assert (group.class_of[c.members] == group.classes.index(c)).all()


def test_action_is_a_right_action(group):
    rng = np.random.default_rng(0)
    pts = rng.integers(0, len(group.plane.points), size=8)
    gs = rng.integers(0, group.n, size=8)
    hs = rng.integers(0, group.n, size=8)
    for p, g, h in zip(pts, gs, hs):
        gh = group.mul(int(g), int(h))
        assert group.point_orbit(int(p))[gh] == \
            group.point_orbit(int(group.point_orbit(int(p))[g]))[h]


def test_action_preserves_point_classes(group):
    plane = group.plane
    rng = np.random.default_rng(1)
    for g in rng.integers(0, group.n, size=10):
        orb = [group.point_orbit(p)[g] for p in plane.internal_points]
        assert {plane.point_class[i] for i in orb} == {"internal"}


def test_stabilizer_order_and_profile(group):
    q = group.q
    p0 = canonical_internal_point(group.plane)
    stab = group.stabilizer(p0)
    assert len(stab) == q + 1
    info = verify_stabilizer(group)
    assert info["profile"]["id"] == 1
    inv = (q + 1) // 2 if q % 4 == 1 else (q + 3) // 2
    assert info["profile"]["inv"] == inv


def test_outer_coset_matches_inner_size(group):
    plane = group.plane
    p0 = canonical_internal_point(plane)
    outer = outer_coset_stabilizer(plane, p0)
    assert len(outer) == group.q + 1


def test_full_group_verification():
    info = verify_group(ConicGroup(ConicPlane(5)))
    assert info["order"] == 60
