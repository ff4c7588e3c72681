import numpy as np
import pytest

from passant.plane import ConicPlane
from passant.group import ConicGroup
from passant.chartable import (
    CharacterTable, verify_characters, verify_permutation_module, TOL,
)


@pytest.fixture(scope="module", params=[5, 7, 9, 11])
def group(request):
    return ConicGroup(ConicPlane(request.param))


def test_table_is_square(group):
    ct = CharacterTable(group)
    r = len(group.classes)
    assert ct.table.shape == (r, r)
    assert len(ct.names) == (group.q + 5) // 2


def test_degree_squares_sum_to_group_order(group):
    ct = CharacterTable(group)
    assert sum(d * d for d in ct.degrees) == group.n


def test_rows_orthonormal(group):
    ct = CharacterTable(group)
    for i, x in enumerate(ct.table):
        for j, y in enumerate(ct.table):
            val = ct.inner(x, y)
            assert abs(val - (1.0 if i == j else 0.0)) < TOL


def test_column_orthogonality(group):
    ct = CharacterTable(group)
    sizes = np.array([c.size for c in group.classes], dtype=np.float64)
    gram = ct.table.conj().T @ ct.table
    assert np.abs(gram - np.diag(group.n / sizes)).max() < TOL * group.n


def test_half_characters_are_algebraic_conjugates(group):
    ct = CharacterTable(group)
    a, b = ct.table[-2], ct.table[-1]
    assert np.abs(np.sort_complex(a) - np.sort_complex(b)).max() < TOL


def test_permutation_character_is_integral(group):
    ct = CharacterTable(group)
    pi = ct.permutation_character()
    assert np.abs(pi.imag).max() == 0
    assert pi[0].real == len(group.plane.internal_points)


def test_multiplicity_pattern(group):
    info = verify_permutation_module(group)
    mult = info["multiplicities"]
    assert mult["triv"] == 1
    q = group.q
    if q % 4 == 1:
        assert mult["st"] == 1
        assert all(v == 1 for k, v in mult.items() if k.startswith("chi"))
    else:
        assert mult["st"] == 0
        assert all(v == 1 for k, v in mult.items() if k.startswith("phi"))


def test_frozen_burnside_ranks():
    expected = {5: 3, 7: 6, 9: 6, 11: 9}
    for q, rank in expected.items():
        info = verify_permutation_module(ConicGroup(ConicPlane(q)))
        assert info["rank"] == rank


def test_q3_reduces_to_a4():
    # the generic construction degenerates to the alternating group table
    g = ConicGroup(ConicPlane(3))
    info = verify_characters(g)
    assert sorted(info["degrees"]) == [1, 1, 1, 3]
