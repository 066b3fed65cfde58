import json
import math

import pytest

from vesica.cli import main
from vesica.methods import bion_angle, tempier_angle


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- angle -----------------------------------------------------------------------

def test_angle_bion(capsys):
    code, out, err = run_cli(capsys, "angle", "bion", "9")
    assert code == 0 and err == ""
    lines = dict(line.split(maxsplit=1) for line in out.strip().splitlines())
    assert float(lines["approx"]) == pytest.approx(bion_angle(9), abs=0)
    assert float(lines["exact"]) == pytest.approx(2 * math.pi / 9, abs=0)
    assert float(lines["error"]) == pytest.approx(2 * math.pi / 9 - bion_angle(9))
    assert float(lines["rel_error"]) == pytest.approx(0.0069, abs=1e-3)


def test_angle_tempier_with_base(capsys):
    code, out, _ = run_cli(capsys, "angle", "tempier", "9", "--base", "1.75")
    assert code == 0
    approx = float(out.splitlines()[0].split()[1])
    assert approx == pytest.approx(tempier_angle(9, 1.75), abs=0)


def test_angle_base_rejected_for_bion(capsys):
    code, out, err = run_cli(capsys, "angle", "bion", "9", "--base", "1.75")
    assert code == 1 and out == "" and "--base" in err


def test_angle_domain_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "angle", "bion", "3")
    assert code == 2
    assert "n >= 4" in err and "Traceback" not in err


def test_usage_errors_exit_1(capsys):
    code, _, err = run_cli(capsys, "angle", "newton", "9")
    assert code == 1 and err != ""
    code, _, err = run_cli(capsys, "angle", "bion", "nine")
    assert code == 1
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 1


# --- table -----------------------------------------------------------------------

def test_table_csv_shape(capsys):
    code, out, _ = run_cli(capsys, "table", "bion")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,exact,approx,error,rel_error"
    assert len(lines) == 18  # header + n = 4..20
    first = lines[1].split(",")
    assert first[0] == "4"
    assert float(first[2]) == pytest.approx(bion_angle(4), abs=0)


def test_table_paper_rounding(capsys):
    code, out, _ = run_cli(capsys, "table", "tempier", "--paper")
    assert code == 0
    row12 = [line for line in out.splitlines() if line.startswith("12,")][0]
    assert row12 == "12,0.5236,0.5236,0.0000,0.0000"


def test_table_paper_csv_matches_published_values(capsys):
    from test_acceptance import TEMPIER_TABLE

    code, out, _ = run_cli(
        capsys, "table", "tempier", "--from", "4", "--to", "20", "--paper", "--format", "csv"
    )
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 17
    for row in rows:
        n, _, approx, error, rel_error = row.split(",")
        _, want_approx, want_error, want_rel = TEMPIER_TABLE[int(n)]
        assert float(approx) == pytest.approx(want_approx, abs=1e-3)
        assert float(error) == pytest.approx(want_error, abs=1e-3)
        assert float(rel_error) == pytest.approx(want_rel, abs=1e-3)


def test_table_custom_range(capsys):
    code, out, _ = run_cli(capsys, "table", "bion", "--from", "5", "--to", "7")
    assert code == 0
    assert [line.split(",")[0] for line in out.strip().splitlines()[1:]] == ["5", "6", "7"]


def test_table_json(capsys):
    code, out, _ = run_cli(capsys, "table", "tempier", "--format", "json", "--paper")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 17
    assert rows[0] == {"n": 4, "exact": 1.5708, "approx": 1.5708, "error": 0.0, "rel_error": 0.0}


def test_table_rejects_bad_range(capsys):
    code, _, err = run_cli(capsys, "table", "bion", "--from", "3")
    assert code == 2 and err != ""


# --- construct / run ----------------------------------------------------------------

def test_construct_stdout_parses(capsys):
    from vesica.dsl import parse
    from vesica.methods import tempier_program

    code, out, _ = run_cli(capsys, "construct", "tempier", "9")
    assert code == 0
    assert parse(out) == tempier_program(9)


def test_construct_to_file_and_run_roundtrip(capsys, tmp_path):
    path = tmp_path / "nonagon.euc"
    code, out, _ = run_cli(capsys, "construct", "bion", "9", "-o", str(path))
    assert code == 0 and out == ""
    code, out, _ = run_cli(capsys, "run", str(path))
    assert code == 0
    name, _, value = out.strip().partition(" = ")
    assert name == "theta"
    assert abs(float(value) - bion_angle(9)) < 1e-10


def test_run_missing_file(capsys):
    code, _, err = run_cli(capsys, "run", "/nonexistent/file.euc")
    assert code == 1 and "cannot read" in err


def test_run_malformed_program(capsys, tmp_path):
    path = tmp_path / "broken.euc"
    path.write_text("point A = (1, 2\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "run", str(path))
    assert code == 2
    assert "line 1, column 16" in err and "Traceback" not in err


def test_run_geometric_failure(capsys, tmp_path):
    path = tmp_path / "disjoint.euc"
    path.write_text(
        "point A = (0, 0)\npoint B = (9, 0)\npoint U = (1, 0)\npoint W = (10, 0)\n"
        "circle ca = A U\ncircle cb = B W\nintersect X = ca cb pick first\n",
        encoding="utf-8",
    )
    code, _, err = run_cli(capsys, "run", str(path))
    assert code == 2 and "empty intersection" in err


def test_run_with_svg(capsys, tmp_path):
    euc = tmp_path / "fig.euc"
    svg = tmp_path / "fig.svg"
    run_cli(capsys, "construct", "tempier", "12", "-o", str(euc))
    code, out, _ = run_cli(capsys, "run", str(euc), "--svg", str(svg))
    assert code == 0
    assert svg.read_text(encoding="utf-8").startswith("<?xml")
    assert "theta = " in out


# --- polygon -------------------------------------------------------------------------

def test_polygon_writes_svg_and_reports_gap(capsys, tmp_path):
    svg = tmp_path / "nine.svg"
    code, out, _ = run_cli(capsys, "polygon", "bion", "9", "--svg", str(svg))
    assert code == 0
    assert out.startswith("closure_gap = 0.043638788750")
    assert "<polyline " in svg.read_text(encoding="utf-8")


def test_polygon_requires_svg_flag(capsys):
    code, _, err = run_cli(capsys, "polygon", "bion", "9")
    assert code == 1 and err != ""


def test_unwritable_output_path_exits_1(capsys):
    code, _, err = run_cli(capsys, "polygon", "bion", "9", "--svg", "/nonexistent/dir/x.svg")
    assert code == 1 and "Traceback" not in err and err != ""
    code, _, err = run_cli(capsys, "construct", "bion", "9", "-o", "/nonexistent/dir/x.euc")
    assert code == 1 and err != ""


# --- check ---------------------------------------------------------------------------

def test_check_nonagon(capsys):
    code, out, _ = run_cli(capsys, "check", "9")
    assert code == 0
    assert out == "9: NOT constructible (3 appears twice)\n"


def test_check_17gon(capsys):
    code, out, _ = run_cli(capsys, "check", "17")
    assert code == 0
    assert out == "17: constructible (17 = 17)\n"


def test_check_60gon(capsys):
    code, out, _ = run_cli(capsys, "check", "60")
    assert out == "60: constructible (60 = 2^2 * 3 * 5)\n"


def test_check_too_small(capsys):
    code, _, err = run_cli(capsys, "check", "2")
    assert code == 2 and err != ""


# --- rectify ---------------------------------------------------------------------------

def test_rectify_default_rows(capsys):
    code, out, _ = run_cli(capsys, "rectify")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["vesica", "1.73205", "3.15470"]
    assert lines[1].split() == ["rational", "1.75000", "3.14286"]
    assert lines[2].split() == ["exact", "1.75194", "3.14159"]


def test_rectify_custom_distance(capsys):
    code, out, _ = run_cli(capsys, "rectify", "--distance", "1.75")
    assert code == 0
    assert out.split() == ["custom", "1.75000", "3.14286"]


def test_rectify_invalid_distance(capsys):
    code, _, err = run_cli(capsys, "rectify", "--distance", "-1")
    assert code == 2 and err != ""


# --- determinism ------------------------------------------------------------------------

def test_streams_and_files_are_reproducible(capsys, tmp_path):
    _, out1, _ = run_cli(capsys, "table", "tempier", "--format", "json")
    _, out2, _ = run_cli(capsys, "table", "tempier", "--format", "json")
    assert out1 == out2

    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run_cli(capsys, "polygon", "tempier", "11", "--svg", str(a))
    run_cli(capsys, "polygon", "tempier", "11", "--svg", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
    assert "vesica" in out
