"""Acceptance gate: one test per shipping criterion, smallest q first.

Each test prints a single PASS line with its measured quantity so the
verbose run reads as a checklist.  Shared geometry is cached module-wide;
the whole file must stay comfortably inside the stated time budgets.
"""

import os
import time

import numpy as np
import pytest

from passant.plane import ConicPlane, verify_plane
from passant.group import ConicGroup, verify_group, verify_stabilizer, verify_parity
from passant.incidence import IncidenceSystem, verify_incidence, verify_equivariance
from passant.blocks import (
    ClassAlgebra, central_idempotents, expected_block_count, label_blocks,
    verify_block_patterns, verify_module_decomposition,
)
from passant.chartable import verify_characters, verify_permutation_module
from passant.gf2 import BitMatrix, rank_dense_oracle, write_alist, read_alist

ALL_Q = (3, 5, 7, 9, 11, 13)

_planes: dict[int, ConicPlane] = {}
_groups: dict[int, ConicGroup] = {}
_systems: dict[int, IncidenceSystem] = {}


def plane(q):
    if q not in _planes:
        _planes[q] = ConicPlane(q)
    return _planes[q]


def group(q):
    if q not in _groups:
        _groups[q] = ConicGroup(plane(q))
    return _groups[q]


def system(q):
    if q not in _systems:
        _systems[q] = IncidenceSystem(plane(q))
    return _systems[q]


def test_criterion_1_kernel_dimension():
    t0 = time.monotonic()
    got = {}
    for q in ALL_Q:
        inc = system(q)
        nullity = inc.null_dimension()
        assert nullity == (q - 1) ** 2 // 4, (q, nullity)
        assert inc.rank() == (q - 1) * (q + 1) // 4
        got[q] = nullity
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    print(f"PASS criterion 1: dim ker A = (q-1)^2/4 for q in {ALL_Q} ({elapsed:.1f}s)")


def test_criterion_2_cube_identity():
    for q in ALL_Q:
        inc = system(q)
        assert inc.A @ inc.A @ inc.A == inc.A, q
        # integer cube equals q exactly at every incident position
        assert (inc.A3_int[inc.A_bool] == q).all()
    print(f"PASS criterion 2: A^3 = A over GF(2) for q in {ALL_Q}")


def test_criterion_3_geometry_census():
    for q in ALL_Q:
        verify_plane(plane(q))
    print(f"PASS criterion 3: exhaustive tangency census for q in {ALL_Q}")


def test_criterion_4_parity_census():
    t0 = time.monotonic()
    pairs = {}
    for q in (5, 7, 9, 13):
        info = verify_parity(group(q), system(q))
        pairs[q] = info["pairs"]
    elapsed = time.monotonic() - t0
    assert elapsed < 600.0
    assert pairs[13] == 78 * 77
    print(f"PASS criterion 4: parity census, all ordered pairs, q in (5,7,9,13) ({elapsed:.1f}s)")


def test_criterion_5_block_structure():
    counts = {}
    for q in (5, 7, 9, 11, 13):
        alg = ClassAlgebra(group(q))
        idems = central_idempotents(alg)
        labels = label_blocks(alg, idems)
        verify_block_patterns(alg, idems, labels)
        counts[q] = len(idems)
    assert counts == {5: 2, 7: 2, 9: 3, 11: 4, 13: 5}
    print(f"PASS criterion 5: block counts {counts} with exact idempotent patterns")


def test_criterion_6_module_decomposition():
    for q in ALL_Q:
        alg = ClassAlgebra(group(q))
        idems = central_idempotents(alg)
        labels = label_blocks(alg, idems)
        info = verify_module_decomposition(alg, idems, labels, system(q))
        assert sum(info["kernel_dims"]) == (q - 1) ** 2 // 4
    print(f"PASS criterion 6: kernel splits across defect-0 blocks for q in {ALL_Q}")


def test_criterion_7_character_suite():
    for q in ALL_Q:
        verify_characters(group(q))
    for q in (5, 13):
        mult = verify_permutation_module(group(q))["multiplicities"]
        assert all(v == 1 for k, v in mult.items() if k.startswith("chi"))
    for q in (7, 11):
        mult = verify_permutation_module(group(q))["multiplicities"]
        assert all(v == 1 for k, v in mult.items() if k.startswith("phi"))
    print("PASS criterion 7: character orthogonality and multiplicity pattern")


def test_criterion_8_rank_oracle_and_equivariance():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        arr = rng.integers(0, 2, size=(64, 64)).astype(bool)
        assert BitMatrix.from_bool(arr).rank() == rank_dense_oracle(arr)
    checked = {}
    for q in ALL_Q:
        sample = None if q <= 7 else 100
        checked[q] = verify_equivariance(system(q), group(q), sample=sample,
                                         rng=np.random.default_rng(q))
    assert checked[5] == group(5).n and checked[7] == group(7).n
    assert all(checked[q] == 100 for q in (9, 11, 13))
    print("PASS criterion 8: 1000 rank oracle draws; equivariance exhaustive to q=7")


def test_criterion_9_export_round_trip(tmp_path):
    for q in ALL_Q:
        inc = system(q)
        path = tmp_path / f"q{q}.alist"
        write_alist(path, inc.A)
        back = read_alist(path)
        assert (back == inc.A.to_bool()).all()
        assert inc.A.weights() == [(q + 1) // 2] * inc.N
    print(f"PASS criterion 9: alist round trip and row weight (q+1)/2 for q in {ALL_Q}")


@pytest.mark.skipif(not os.environ.get("PASSANT_LARGE_Q"),
                    reason="set PASSANT_LARGE_Q=1 for the q=17,19 checks")
def test_optional_large_q():
    for q in (17, 19):
        inc = IncidenceSystem(ConicPlane(q))
        assert inc.null_dimension() == (q - 1) ** 2 // 4
    print("PASS optional: kernel dimension at q=17 and q=19")
