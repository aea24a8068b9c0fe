"""End-to-end CLI behavior: deterministic output, JSON shapes, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "qdisk.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
        timeout=120,
    )


def test_det_2x2():
    result = run_cli("det", str(FIXTURES / "board2x2.txt"))
    assert result.returncode == 0
    assert result.stdout.strip() == "0"


def test_validate_glue_fixture():
    result = run_cli("validate", str(FIXTURES / "fig1.glue"))
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["faces"] == 13
    assert payload["boundary_vertex_squares"]["4"] == 1


def test_matrix_glue_fixture():
    result = run_cli("matrix", str(FIXTURES / "fig1.glue"))
    payload = json.loads(result.stdout)
    assert payload["rows"] == 6 and payload["cols"] == 7
    assert payload["entries"][0] == [1, 1, 0, 1, 0, 0, 0]


def test_diagonals_lines(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("##\n##\n")
    result = run_cli("diagonals", str(f))
    lines = result.stdout.strip().splitlines()
    assert len(lines) == 4
    assert all("good=True" in line for line in lines)


def test_tilings_counts(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("###\n###\n")
    assert run_cli("tilings", str(f)).stdout.strip() == "3"
    signed = run_cli("tilings", str(f), "--signed").stdout.strip()
    assert signed in ("1", "-1")
    listing = json.loads(run_cli("tilings", str(f), "--list").stdout)
    assert len(listing) == 3


def test_match_loner_fixture():
    result = run_cli("match", str(FIXTURES / "loner.board"))
    payload = json.loads(result.stdout)
    assert len(payload["pairs"]) == 2
    assert payload["loner"] is not None
    assert payload["trace"]["tilings"] == 5


def test_ldu_and_rank(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("###\n###\n")
    payload = json.loads(run_cli("ldu", str(f)).stdout)
    assert payload["D_shape"] == [3, 3]
    assert len(payload["D_ones"]) == 3
    assert run_cli("rank", str(f)).stdout.strip() == "3"


def test_solve_roundtrip(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("##\n##\n")
    ok = json.loads(run_cli("solve", str(f), "--rhs", "1,1").stdout)
    assert ok["x"] is not None
    bad = json.loads(run_cli("solve", str(f), "--rhs", "1,0").stdout)
    assert bad["x"] is None and bad["code"] == "no_rational_solution"


def test_cutpaste_board_output(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("###\n###\n")
    payload = json.loads(run_cli("cutpaste", str(f)).stdout)
    assert all(c["format"] == "board" for c in payload["components"])
    assert payload["balanced"] is True


def test_cutpaste_glue_output_for_slit_disk():
    payload = json.loads(run_cli("cutpaste", str(FIXTURES / "fig1.glue")).stdout)
    assert payload["components"]
    assert all(c["format"] == "glue" for c in payload["components"])


def test_error_is_structured_json(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("#.\n.#\n")
    result = run_cli("validate", str(f))
    assert result.returncode == 1
    payload = json.loads(result.stdout)
    assert payload["code"] == "not_a_disk"
    assert payload["location"] == str(f)


def test_stdin_input():
    result = run_cli("det", "-", stdin="##\n##\n")
    assert result.stdout.strip() == "0"


def test_contradicting_side_flag_is_structured(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("##\n")  # balanced diagonal forces the deleted side
    result = run_cli("cutpaste", str(f), "--corner", "0,0", "--side", "left")
    assert result.returncode == 1
    assert json.loads(result.stdout)["code"] == "invalid_argument"


def test_output_is_byte_identical_across_runs(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("###\n###\n")
    first = run_cli("ldu", str(f)).stdout
    second = run_cli("ldu", str(f)).stdout
    assert first == second


def test_corpus_and_crosscheck():
    listing = run_cli("corpus", "--all-boards", "--max-cells", "5")
    again = run_cli("corpus", "--all-boards", "--max-cells", "5")
    assert listing.stdout == again.stdout
    assert len(json.loads(listing.stdout)) == 1 + 1 + 2 + 5 + 12

    report = run_cli("crosscheck", "--all-boards", "--max-cells", "7")
    assert report.returncode == 0
    payload = json.loads(report.stdout)
    assert payload["discrepancies"] == []
    assert payload["checked"] > 100


def test_crosscheck_random_and_glued():
    report = run_cli("crosscheck", "--random", "--seed", "5", "--count", "10", "--max-cells", "12")
    assert report.returncode == 0
    report = run_cli("crosscheck", "--glued", "--seed", "5", "--count", "5", "--max-cells", "14")
    assert report.returncode == 0
    assert json.loads(report.stdout)["discrepancies"] == []
