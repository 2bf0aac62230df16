"""Command-line surface: exit codes, output formats and golden files."""
from __future__ import annotations

import csv
import io
import json

import numpy as np
import pytest

from core import config
from core.errors import DomainError
from main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, MGF_COLUMNS, RunConfig, main, s_grid

GAUSSIAN_ARGS = ["--z", "2", "4", "--rho", "0.5", "--r", repr(8.0 ** 0.5)]


@pytest.fixture
def golden_keys(golden_dir):
    return json.loads((golden_dir / "report_keys.json").read_text(encoding="utf-8"))


def run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


# -----------------------------------------------------------------------------
# verify
# -----------------------------------------------------------------------------

@pytest.mark.slow
def test_verify_passes(capsys, golden_keys):
    code, payload = run_json(capsys, ["verify", "--format", "json"])
    assert code == EXIT_OK
    assert sorted(payload) == golden_keys["verify"]
    assert payload["passed"] and payload["seed"] == config.DEFAULT_SEED
    assert sorted(payload["checks"][0]) == golden_keys["check"]
    groups = {check["group"] for check in payload["checks"]}
    assert {"algebra", "real_form", "boson_rep", "group_law"} <= groups
    names = {check["name"] for check in payload["checks"]}
    assert {"[b, b_dag^3] = 3 b_dag^2 on interior", "g^3 g^-3 = identity"} <= names


@pytest.mark.slow
def test_verify_text_report(tmp_path):
    out = tmp_path / "report.txt"
    assert main(["verify", "--output", str(out)]) == EXIT_OK
    assert "jacobi basis triples" in out.read_text(encoding="utf-8")


@pytest.mark.slow
def test_verify_detects_perturbed_table(capsys):
    code, payload = run_json(capsys, ["verify", "--format", "json"])
    assert code == EXIT_OK, [c["name"] for c in payload["checks"] if not c["passed"]]
    code, payload = run_json(capsys, ["verify", "--format", "json", "--perturb", "0", "1", "2", "1e-3"])
    assert code == EXIT_FAILED
    failed = {check["name"] for check in payload["checks"] if not check["passed"]}
    # rescaling h keeps Jacobi; only the represented brackets notice
    assert "structure constants realized" in failed


def test_verify_rejects_diagonal_perturbation(capsys):
    assert main(["verify", "--perturb", "1", "1", "2", "1e-3"]) == EXIT_USAGE
    assert "diagonal" in capsys.readouterr().err


# -----------------------------------------------------------------------------
# mgf
# -----------------------------------------------------------------------------

def test_mgf_csv(capsys, golden_dir):
    argv = ["mgf", *GAUSSIAN_ARGS, "--s-min", "-0.2", "--s-max", "0.2", "--s-step", "0.1"]
    assert main(argv) == EXIT_OK
    text = capsys.readouterr().out
    with open(golden_dir / "mgf_header.csv", encoding="utf-8", newline="") as fh:
        header = fh.read()
    assert text.startswith(header)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [float(row["s"]) for row in rows] == [-0.2, -0.1, 0.0, 0.1, 0.2]
    for row in rows:
        s = float(row["s"])
        assert float(row["closed_form"]) == pytest.approx(np.exp(5 * s ** 2), rel=1e-12)
        assert float(row["rel_error"]) <= config.MGF_REL_TOL


def test_mgf_json(capsys):
    code, rows = run_json(capsys, ["mgf", *GAUSSIAN_ARGS, "--format", "json",
                                   "--s-min", "0", "--s-max", "0.1", "--s-step", "0.1"])
    assert code == EXIT_OK
    assert [tuple(row) for row in rows] == [MGF_COLUMNS] * 2
    assert rows[0]["closed_form"] == 1.0


def test_mgf_outside_domain(capsys):
    # L = -1 for z = 2 + 4i, rho = 0, r = 2, so s = 0.5 sits on the boundary
    argv = ["mgf", "--z", "2", "4", "--rho", "0", "--r", "2", "--s-max", "0.5"]
    assert main(argv) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_s_grid_includes_endpoints():
    cfg = RunConfig(command="mgf", s_min=-0.3, s_max=0.3, s_step=0.05)
    grid = s_grid(cfg)
    assert len(grid) == 13
    assert grid[0] == -0.3 and grid[-1] == 0.3 and grid[6] == 0.0


@pytest.mark.parametrize("kwargs", [
    dict(s_step=0.0),
    dict(s_min=0.2, s_max=0.1),
    dict(dim=config.MIN_DIM - 1),
])
def test_run_config_validation(kwargs):
    with pytest.raises(DomainError):
        RunConfig(command="mgf", **kwargs)


# -----------------------------------------------------------------------------
# rep
# -----------------------------------------------------------------------------

def test_rep_report(capsys, golden_keys):
    code, payload = run_json(capsys, ["rep", "--z", "2", "0", "--rho", "0", "--r", "2"])
    assert code == EXIT_OK
    assert sorted(payload) == golden_keys["rep"]
    assert payload["branch"] == "ReNonzero"
    assert payload["duality"] == {"a_dag-a*": 0.0, "h-h*": 0.0}
    assert payload["passed"]


def test_rep_two_mode(capsys, golden_keys):
    argv = ["rep", "--two-mode", "--z", "0", "2", "--r", "0.5", "--c", "1", "1", "--dim-per-mode", "12"]
    code, payload = run_json(capsys, argv)
    assert code == EXIT_OK
    assert sorted(payload) == golden_keys["rep_two_mode"]
    assert payload["case"] == "ii"


def test_rep_dump(tmp_path):
    out = tmp_path / "ops.json"
    assert main(["rep", "--dim", "8", "--dump", "--output", str(out)]) == EXIT_OK
    payload = json.loads(out.read_text(encoding="utf-8"))
    e_matrix = np.array(payload["operators"]["E"])
    assert e_matrix.shape == (8, 8, 2)
    assert np.array_equal(e_matrix[..., 0], np.eye(8))


def test_branch_mismatch(capsys):
    assert main(["rep", "--z", "0", "2", "--branch", "ReNonzero"]) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


# -----------------------------------------------------------------------------
# group and classify
# -----------------------------------------------------------------------------

def test_group_compose(capsys):
    argv = ["group", "compose", "--z", "0", "1",
            "--g1", "0", "0", "0", "0", "1", "0", "0", "0",
            "--g2", "1", "0", "0", "0", "0", "0", "0", "0"]
    code, payload = run_json(capsys, argv)
    assert code == EXIT_OK
    assert payload["result"] == [[1, 0], [1, 0], [1, 0], [0, 0]]


def test_group_inverse(capsys):
    argv = ["group", "inverse", "--z", "0", "2", "--g1", "1", "0", "0", "0", "0", "0", "0", "0"]
    code, payload = run_json(capsys, argv)
    assert code == EXIT_OK
    assert payload["result"] == [[-1, 0], [0, 0], [0, 0], [0, 0]]


def test_group_fuzz(capsys, golden_keys):
    code, payload = run_json(capsys, ["group", "fuzz", "--count", "200", "--seed", "7"])
    assert code == EXIT_OK
    assert sorted(payload) == golden_keys["group_fuzz"]
    assert payload["count"] == 200 and payload["passed"]


def test_group_compose_needs_both_elements(capsys):
    assert main(["group", "compose", "--g1", *["0"] * 8]) == EXIT_USAGE


def test_classify_text(capsys, golden_dir):
    assert main(["classify", "--z", "2", "0"]) == EXIT_OK
    assert capsys.readouterr().out == (golden_dir / "classify_z2.txt").read_text(encoding="utf-8")


def test_classify_json(capsys):
    code, payload = run_json(capsys, ["classify", "--z", "2", "4", "--format", "json"])
    assert code == EXIT_OK
    assert payload["case"] == "both nonzero"
    assert payload["mapping"] == ["e4 = 0.5*p", "e1 = p + 2*q", "e2 = H", "e3 = -E"]


def test_classify_rejects_trivial_extension(capsys):
    assert main(["classify", "--z", "0", "0"]) == EXIT_USAGE


# -----------------------------------------------------------------------------
# argument errors
# -----------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    [],
    ["nonsense"],
    ["mgf", "--z", "1"],
    ["verify", "--format", "xml"],
    ["group", "rotate"],
])
def test_bad_arguments_exit_two(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
