import json

import numpy as np
import pytest

from passant.cli import main
from passant.gf2 import read_alist
from passant.incidence import IncidenceSystem
from passant.plane import ConicPlane


def test_verify_all_small(capsys):
    assert main(["verify", "--q", "5", "--suite", "all"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 6
    assert "FAIL" not in out


def test_verify_single_suite(capsys):
    assert main(["verify", "--q", "7", "--suite", "geometry"]) == 0
    out = capsys.readouterr().out
    assert "PASS geometry" in out


def test_rank_output(capsys):
    assert main(["rank", "--q", "9"]) == 0
    out = capsys.readouterr().out
    assert "rank=20" in out and "nullity=16" in out


def test_rejects_bad_q():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--q", "4", "--suite", "geometry"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["rank", "--q", "21"])
    assert exc.value.code == 2


def test_export_alist_round_trip(tmp_path, capsys):
    path = tmp_path / "q7.alist"
    assert main(["export", "--q", "7", "--format", "alist", "--out", str(path)]) == 0
    arr = read_alist(path)
    expected = IncidenceSystem(ConicPlane(7)).A.to_bool()
    assert (arr == expected).all()


def test_export_json(tmp_path, capsys):
    path = tmp_path / "q5.json"
    assert main(["export", "--q", "5", "--format", "json", "--out", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["q"] == 5
    assert len(data["rows"]) == 10
    assert len(data["internal_points"]) == 10
    assert all(sum(row) == 3 for row in data["rows"])


def test_export_csv(tmp_path, capsys):
    path = tmp_path / "q5.csv"
    assert main(["export", "--q", "5", "--format", "csv", "--out", str(path)]) == 0
    rows = [line.split(",") for line in path.read_text().strip().splitlines()]
    arr = np.array(rows, dtype=int)
    assert arr.shape == (10, 10)
    assert (arr.sum(axis=1) == 3).all()
