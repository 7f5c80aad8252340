"""Tests for the command-line entry point."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from main import EXIT_BUDGET, EXIT_INVALID, EXIT_IO, EXIT_OK, build_parser, run, to_run_config
from models import Algorithm, Command

LINE_BOX = "x:-4:4,y:-4:4"
ROOT = Path(__file__).resolve().parent.parent


def test_info_prints_polytope(capsys):
    assert run(["info", "z1+z2+1"]) == EXIT_OK
    info = json.loads(capsys.readouterr().out)
    assert info["bounds"] == [3, 3]
    assert info["maximally_sparse"] is True
    assert info["arity"] == 2
    assert info["terms"] == 3


def test_info_from_fixture_and_file(capsys, tmp_path):
    assert run(["info", "--fixture", "p1"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["bounds"] == [8, 14]

    source = tmp_path / "poly.txt"
    source.write_text("z1^2 + z2 + 1\n", encoding="utf-8")
    assert run(["info", "--poly-file", str(source)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["terms"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["info"],
        ["info", "z1+1", "--poly", "z2+1"],
        ["info", "z1+1", "--fixture", "p2"],
        ["info", "z1 +* z2"],
        ["info", "--fixture", "p9"],
        ["info", "--poly-file", "missing-polynomial.txt"],
        ["components", "z1+z2+1", "--depth", "20"],
        ["draw", "z1+z2+1", "--res", "5000x10"],
        ["draw", "z1+z2+1", "--samples", "0"],
        ["components", "z1+z2+1", "--domain", "x:-1:1"],
        ["draw", "z1+z2+1", "--alg", "fancy"],
    ],
)
def test_invalid_input_exits_with_two(argv, capsys):
    assert run(argv) == EXIT_INVALID
    assert capsys.readouterr().err


def test_run_config_conversion():
    args = build_parser().parse_args(
        ["draw", "z1+z2+1", "--alg", "naive", "--res", "30x20", "--depth", "5"]
    )
    run_config = to_run_config(args)
    assert run_config.command is Command.DRAW
    assert run_config.algorithm is Algorithm.NAIVE
    assert run_config.resolution == (30, 20)
    assert run_config.depth == 5
    assert run_config.poly_text == "z1+z2+1"


def test_components_report(tmp_path, capsys):
    report = tmp_path / "line.json"
    code = run(["components", "z1+z2+1", "--domain", LINE_BOX, "--depth", "6", "--report", str(report)])
    assert code == EXIT_OK
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["counts"]["components"] == 3
    assert data["flags"] == {"solid": True, "optimal": True}
    assert sorted(c["order"] for c in data["components"]) == [[0, 0], [0, 1], [1, 0]]
    assert "3 components" in capsys.readouterr().out


def test_components_report_is_reproducible(tmp_path):
    paths = [tmp_path / "one.json", tmp_path / "two.json"]
    for path, threads in zip(paths, ("1", "2")):
        argv = ["components", "z1+z2+1", "--domain", LINE_BOX, "--depth", "5",
                "--threads", threads, "--report", str(path)]
        assert run(argv) == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_budget_exit_code(tmp_path, env):
    env(budget=20)
    code = run(["components", "z1+z2+1", "--depth", "8", "--report", str(tmp_path / "r.json")])
    assert code == EXIT_BUDGET


def test_draw_writes_ppm(tmp_path):
    out = tmp_path / "line.ppm"
    assert run(["draw", "z1+z2+1", "--alg", "grid", "--res", "16x12", "--out", str(out)]) == EXIT_OK
    data = out.read_bytes()
    assert data.startswith(b"P6\n16 12\n255\n")
    assert len(data) == len(b"P6\n16 12\n255\n") + 16 * 12 * 3


def test_draw_writes_svg_and_report(tmp_path):
    out = tmp_path / "line.svg"
    report = tmp_path / "draw.json"
    argv = ["draw", "z1+z2+1", "--res", "24", "--out", str(out), "--report", str(report)]
    assert run(argv) == EXIT_OK
    assert "<polyline" in out.read_text(encoding="utf-8")
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["algorithm"] == "greedy"
    assert "seconds" not in data["stats"]


def test_draw_dichotomous(tmp_path):
    out = tmp_path / "line.ppm"
    argv = ["draw", "z1+z2+1", "--alg", "dichotomous", "--depth", "5", "--res", "32", "--out", str(out)]
    assert run(argv) == EXIT_OK
    assert out.read_bytes().startswith(b"P6\n32 32\n")


def test_member(capsys):
    assert run(["member", "z1+z2+1", "--point=-10,-10"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["status"] == "complement"
    assert result["order"] == [0, 0]
    assert result["lopsided_term"] == [0, 0]
    assert result["harnack_in_amoeba"] is False


def test_member_dimension_mismatch():
    assert run(["member", "z1+z2+1", "--point=1,2,3"]) == EXIT_INVALID


def test_spine_overlay(tmp_path, capsys):
    out = tmp_path / "spine.svg"
    report = tmp_path / "spine.json"
    argv = ["spine", "z1+z2+1", "--domain", LINE_BOX, "--depth", "6", "--res", "32",
            "--out", str(out), "--report", str(report)]
    assert run(argv) == EXIT_OK
    assert out.read_text(encoding="utf-8").count("<polyline") == 3
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["components"] == 3
    assert len(data["spine"]["vertices"]) == 1
    assert "spine: 1 vertices" in capsys.readouterr().out


@pytest.mark.parametrize("command", ["coamoeba", "compactified", "contour"])
def test_zero_locus_pictures(command, tmp_path):
    out = tmp_path / f"{command}.ppm"
    points = tmp_path / f"{command}.json"
    argv = [command, "z1+z2+1", "--grid", "12", "--res", "20", "--out", str(out), "--report", str(points)]
    assert run(argv) == EXIT_OK
    assert out.read_bytes().startswith(b"P6\n20 20\n")
    assert len(json.loads(points.read_text(encoding="utf-8"))) > 0


def test_scan(tmp_path, capsys):
    report = tmp_path / "scan.json"
    table = tmp_path / "scan.csv"
    argv = ["scan", "--count", "2", "--degree", "2", "--rule", "vertices-only", "--depth", "4",
            "--no-progress", "--report", str(report), "--table", str(table)]
    assert run(argv) == EXIT_OK
    data = json.loads(report.read_text(encoding="utf-8"))
    assert len(data["items"]) == 2
    assert data["confirmed"] == []
    assert len(table.read_text(encoding="utf-8").splitlines()) == 3
    assert "scan: 2 polynomials" in capsys.readouterr().out


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("", encoding="utf-8")
    argv = ["components", "z1+z2+1", "--depth", "4", "--report", str(blocker / "r.json")]
    assert run(argv) == EXIT_IO


def test_entry_script_runs_in_a_fresh_interpreter():
    """The script as a user runs it, with nothing imported beforehand."""
    done = subprocess.run(
        [sys.executable, str(ROOT / "app" / "main.py"), "info", "z1+z2+1"],
        cwd=ROOT,
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert done.returncode == EXIT_OK, done.stderr
    assert json.loads(done.stdout)["bounds"] == [3, 3]


@pytest.mark.parametrize(
    "first",
    ["models", "corpus", "amoeba", "algebra", "parsers", "storage", "utils", "utils.validators", "commands"],
)
def test_any_package_can_be_imported_first(first):
    source = (
        "import sys\n"
        f"sys.path[:0] = [{str(ROOT / 'src')!r}, {str(ROOT / 'app')!r}]\n"
        f"import {first}\n"
        "import models, corpus, amoeba, storage, utils.validators\n"
    )
    done = subprocess.run([sys.executable, "-c", source], capture_output=True, text=True, timeout=120)
    assert done.returncode == 0, done.stderr
