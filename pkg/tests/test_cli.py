import json
import subprocess
import sys

import pytest

from modulicones import cli
from modulicones.curves import nem_hrep
from modulicones.porta import porta_write
from modulicones.spaces import SpaceId


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def section_rows(text, section):
    lines = text.splitlines()
    start = lines.index(section) + 1
    return lines[start : lines.index("END")]


# --- space --------------------------------------------------------------------


def test_space_two_marked_seven_points(capsys):
    code, out, _ = run_cli(capsys, "space", "--n", "7", "--m", "2")
    assert code == 0
    assert "boundary divisors: 8" in out
    assert "picard number: 7" in out
    assert "ordered basis: b3, b4, b5, b*2, b*3, b*4, b*5" in out


def test_space_fully_marked_five_points(capsys):
    code, out, _ = run_cli(capsys, "space", "--n", "5", "--m", "3")
    assert code == 0
    assert "picard number: 4" in out
    assert "relations: 3" in out


def test_space_rejects_too_few_points(capsys):
    code, _, err = run_cli(capsys, "space", "--n", "3", "--m", "0")
    assert code == 2
    assert "n >= 4 required" in err


def test_space_requires_both_counts(capsys):
    code, _, err = run_cli(capsys, "space", "--n", "7")
    assert code == 2
    assert "--m" in err


# --- cone ---------------------------------------------------------------------


def test_cone_unpointed_rays(capsys):
    code, out, _ = run_cli(
        capsys, "cone", "--which", "nem", "--n", "8", "--m", "0", "--rep", "rays"
    )
    assert code == 0
    assert len(section_rows(out, "CONE_SECTION")) == 4


def test_cone_surface_effective_rays(capsys):
    code, out, _ = run_cli(
        capsys, "cone", "--which", "eff", "--n", "5", "--m", "2", "--rep", "rays"
    )
    assert code == 0
    assert len(section_rows(out, "CONE_SECTION")) == 4


def test_cone_refuses_three_marks(capsys):
    code, _, err = run_cli(capsys, "cone", "--which", "nem", "--n", "6", "--m", "3")
    assert code == 2
    assert "X(6,3)" in err


def test_cone_default_representation_is_the_inequality_system(capsys):
    code, out, _ = run_cli(capsys, "cone", "--which", "nem", "--n", "7", "--m", "1")
    assert code == 0
    assert out.startswith("DIM = 4\n")
    assert len(section_rows(out, "INEQUALITIES_SECTION")) == 9


def test_cone_requires_a_selector(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["cone", "--n", "7", "--m", "1"])
    assert info.value.code == 2


def test_cone_selector_parameter_checking(capsys):
    code, _, err = run_cli(capsys, "cone", "--which", "hyperelliptic")
    assert code == 2
    assert "--g" in err


def test_identical_invocations_are_byte_identical(capsys):
    argv = ("cone", "--which", "mg1", "--g", "5", "--n", "3", "--target", "mg")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


# --- member -------------------------------------------------------------------


def test_member_yes_with_combination(capsys):
    code, out, _ = run_cli(
        capsys,
        "member", "--which", "nem", "--n", "7", "--m", "1",
        "--coords", "10,6,3,1",
    )
    assert code == 0
    assert "member: yes" in out
    assert "combination:" in out


def test_member_no_with_functional(capsys):
    code, out, _ = run_cli(
        capsys,
        "member", "--which", "nem", "--n", "7", "--m", "1",
        "--coords", "0,0,0,-1",
    )
    assert code == 1
    assert "member: no" in out
    assert "separating functional:" in out


def test_member_parses_rational_coordinates(capsys):
    code, out, _ = run_cli(
        capsys,
        "member", "--which", "eff", "--n", "5", "--m", "2",
        "--coords", "-1/3, 1/3, 1/3",
    )
    assert code == 0
    assert "member: yes" in out


# --- push ---------------------------------------------------------------------


def test_push_to_the_genus_two_pointed_space(capsys):
    code, out, _ = run_cli(capsys, "push", "--map", "m21", "--coords", "5,12,6,2")
    assert code == 0
    assert "(1, 6, 5)" in out


def test_push_along_the_double_cover(capsys):
    code, out, _ = run_cli(
        capsys, "push", "--map", "hyperelliptic", "--g", "3", "--coords", "1,0,0"
    )
    assert code == 0
    assert "(3/14, 2, 0)" in out


def test_push_rejects_out_of_range_parameters(capsys):
    code, _, err = run_cli(
        capsys,
        "push", "--map", "pointed", "--g", "3", "--n", "5", "--coords", "1,0,0",
    )
    assert code == 2
    assert err.startswith("error:")


# --- counterexample -----------------------------------------------------------


def test_counterexample_reports_a_verified_certificate(capsys):
    code, out, _ = run_cli(capsys, "counterexample", "--n", "6")
    assert code == 0
    assert "(2, 0, 0, 2, -6, -2, -2, 2)" in out
    assert "certificate verified: yes" in out


# --- verify-paper -------------------------------------------------------------


def test_verify_paper_full_run_flags_the_recorded_discrepancy(capsys):
    code, out, _ = run_cli(capsys, "verify-paper")
    assert code == 1
    assert "12 passed, 1 failed" in out
    assert "FAIL  check 02" in out
    # the failure line shows computed next to recorded
    assert "computed (2, 0, 0, 2, -6, -2, -2, 2)" in out


def test_verify_paper_section_filter(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--sections", "0,10")
    assert code == 0
    assert "2 passed, 0 failed" in out


def test_verify_paper_counterexample_section(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--sections", "4")
    assert code == 1
    assert out.count("check") == 1


def test_verify_paper_rejects_an_empty_selection(capsys):
    code, _, err = run_cli(capsys, "verify-paper", "--sections", "99")
    assert code == 2
    assert "no checks match" in err


# --- export -------------------------------------------------------------------


def test_export_porta_matches_the_library_serialization(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MODULICONES_OUTDIR", str(tmp_path))
    code, out, _ = run_cli(
        capsys, "export", "--which", "nem", "--n", "7", "--m", "1", "--format", "porta"
    )
    assert code == 0
    path = tmp_path / "nem-x7-1.ieq"
    assert str(path) == out.strip()
    assert path.read_text() == porta_write(nem_hrep(SpaceId(7, 1)), "hrep")


def test_export_is_reproducible(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MODULICONES_OUTDIR", str(tmp_path))
    argv = (
        "export", "--which", "nem", "--n", "8", "--m", "0",
        "--format", "porta", "--rep", "rays",
    )
    run_cli(capsys, *argv, "--out", "first.poi")
    run_cli(capsys, *argv, "--out", "second.poi")
    assert (tmp_path / "first.poi").read_bytes() == (tmp_path / "second.poi").read_bytes()


def test_export_moving_cone_rays_as_json(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MODULICONES_OUTDIR", str(tmp_path))
    code, out, _ = run_cli(
        capsys, "export", "--which", "m21-mov", "--format", "json", "--rep", "rays"
    )
    assert code == 0
    obj = json.loads((tmp_path / "m21-mov.json").read_text())
    assert obj["vrep"]["rays"] == [[1, 1, 0], [1, 6, 0], [1, 6, 20], [3, 3, 10]]


def test_export_latex_rays(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MODULICONES_OUTDIR", str(tmp_path))
    code, out, _ = run_cli(
        capsys,
        "export", "--which", "nef-fixture", "--n", "5", "--m", "2",
        "--format", "latex", "--rep", "rays",
    )
    assert code == 0
    text = (tmp_path / "nef-fixture-x5-2.tex").read_text()
    assert text.count("(") == 4


# --- installed entry point ------------------------------------------------------


def test_console_script_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "modulicones.cli", "space", "--n", "6", "--m", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "picard number: 2" in proc.stdout
