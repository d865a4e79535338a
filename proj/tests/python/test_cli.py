"""End-to-end checks of the command-line tool: exit codes, report fields,
determinism. The binary path arrives via SIMPLEXSUM_CLI, fixture files via
SIMPLEXSUM_FIXTURES."""

import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ["SIMPLEXSUM_CLI"]
FIXTURES = Path(os.environ["SIMPLEXSUM_FIXTURES"])


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def report_of(result):
    return json.loads(result.stdout)


def test_verify_bipyramid_exact():
    result = run("verify", "--input", str(FIXTURES / "bipyramid.json"))
    assert result.returncode == 0
    report = report_of(result)
    assert report["command"] == "verify"
    assert report["backend"] == "exact"
    assert report["coefficients"] == ["3", "-2", "-2", "-2", "3"]
    assert report["residual_vector"] == ["0", "0", "0"]
    assert report["residual_scalar"] == "0"
    assert report["verdict"] == "pass"
    assert report["tolerance"] == "exact"
    assert "runtime_ms" in report


def test_verify_perturbed_fixture_still_exact():
    base = report_of(run("verify", "--input", str(FIXTURES / "bipyramid.json")))
    result = run("verify", "--input", str(FIXTURES / "bipyramid_perturbed.json"))
    assert result.returncode == 0
    report = report_of(result)
    # the identity is unconditional: residual stays zero, coefficients move
    assert report["residual_vector"] == ["0", "0", "0"]
    assert report["residual_scalar"] == "0"
    assert report["verdict"] == "pass"
    assert report["coefficients"] != base["coefficients"]


def test_verify_float_backend():
    result = run("verify", "--input", str(FIXTURES / "bipyramid.json"),
                 "--backend", "float", "--tolerance", "1e-9")
    assert result.returncode == 0
    report = report_of(result)
    assert report["coefficients"] == [3.0, -2.0, -2.0, -2.0, 3.0]
    assert report["verdict"] == "pass"
    assert report["tolerance"] == 1e-9


def test_verify_csv_input():
    result = run("verify", "--input", str(FIXTURES / "square.csv"))
    assert result.returncode == 0
    report = report_of(result)
    assert report["coefficients"] == ["1", "-1", "1", "-1"]
    assert report["verdict"] == "pass"


def test_verify_wrong_point_count_is_input_error():
    result = run("verify", "--input", str(FIXTURES / "wrong_count.json"))
    assert result.returncode == 2
    assert "error" in result.stderr


def test_verify_missing_file_is_input_error():
    result = run("verify", "--input", str(FIXTURES / "does_not_exist.json"))
    assert result.returncode == 2


def test_verify_malformed_json_is_input_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dimension": 2, "points": [[0.25, 1], [0, 0], [1, 0], [1, 1]]}')
    result = run("verify", "--input", str(bad))
    assert result.returncode == 2
    assert "quote decimals" in result.stderr


def test_barycentric_exact():
    result = run("barycentric", "--simplex", str(FIXTURES / "unit_triangle.json"),
                 "--point", "1/4,1/2")
    assert result.returncode == 0
    report = report_of(result)
    assert report["lambdas"] == ["1/4", "1/4", "1/2"]
    assert report["lambda_sum"] == "1"
    assert report["reconstruction_exact"] is True
    assert report["verdict"] == "pass"


def test_barycentric_vertex():
    result = run("barycentric", "--simplex", str(FIXTURES / "unit_triangle.json"),
                 "--point", "0,0")
    assert result.returncode == 0
    assert report_of(result)["lambdas"] == ["1", "0", "0"]


def test_barycentric_decimal_point_parses_exactly():
    result = run("barycentric", "--simplex", str(FIXTURES / "unit_triangle.json"),
                 "--point", "0.25,0.5")
    assert result.returncode == 0
    assert report_of(result)["lambdas"] == ["1/4", "1/4", "1/2"]


def test_barycentric_degenerate_simplex():
    result = run("barycentric", "--simplex", str(FIXTURES / "collinear_simplex.json"),
                 "--point", "0,1")
    assert result.returncode == 1
    report = report_of(result)
    assert report["verdict"] == "degenerate"
    assert "witness" in report["error"]


def test_barycentric_float_backend():
    result = run("barycentric", "--simplex", str(FIXTURES / "unit_triangle.json"),
                 "--point", "1/4,1/2", "--backend", "float")
    assert result.returncode == 0
    report = report_of(result)
    assert report["lambdas"] == pytest.approx([0.25, 0.25, 0.5])
    assert report["verdict"] == "pass"


def test_delta_paths_agree():
    result = run("delta", "--input", str(FIXTURES / "bipyramid.json"), "--index", "0")
    assert result.returncode == 0
    report = report_of(result)
    assert report["delta"] == "3"
    assert report["delta_expanded"] == "3"
    assert report["paths_agree"] is True

    result = run("delta", "--input", str(FIXTURES / "bipyramid.json"), "--index", "1")
    assert report_of(result)["delta"] == "-2"


def test_delta_index_out_of_range():
    result = run("delta", "--input", str(FIXTURES / "bipyramid.json"), "--index", "5")
    assert result.returncode == 2


def test_suite_passes_and_is_deterministic(tmp_path):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    args = ("suite", "--dims", "1..3", "--trials", "10", "--seed", "42")
    result_a = run(*args, "--out", str(out_a))
    result_b = run(*args, "--out", str(out_b))
    assert result_a.returncode == 0
    assert result_b.returncode == 0

    report_a = json.loads(out_a.read_text())
    report_b = json.loads(out_b.read_text())
    assert report_a["verdict"] == "pass"
    assert report_a["trial_count"] == 30
    assert report_a["failures"] == []

    # byte-identical apart from the runtime field
    for report in (report_a, report_b):
        del report["runtime_ms"]
    assert json.dumps(report_a, sort_keys=True) == json.dumps(report_b, sort_keys=True)


def test_suite_zero_trials_is_usage_error():
    result = run("suite", "--dims", "1..2", "--trials", "0")
    assert result.returncode == 2


def test_suite_bad_dims_is_usage_error():
    result = run("suite", "--dims", "3..1", "--trials", "5")
    assert result.returncode == 2


def test_unknown_subcommand_is_input_error():
    result = run("frobnicate")
    assert result.returncode == 2


def test_out_file_matches_stdout(tmp_path):
    out = tmp_path / "report.json"
    result = run("verify", "--input", str(FIXTURES / "bipyramid.json"), "--out", str(out))
    assert result.returncode == 0
    assert out.read_text() == result.stdout
