import json

import numpy as np
import pytest

from hardyopa.cli import main

HALF_ZERO = '{"blaschke":{"zeros":[{"re":0.5,"im":0}]}}'
OUTER_HALF = '{"outer_poly":[{"re":1.0,"im":0.0},{"re":0.5,"im":0.0}]}'


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_project_command(capsys):
    code, out, _ = run(
        capsys, ["project", "--p", "3", "--grid", "1024", "--input", HALF_ZERO]
    )
    assert code == 0
    report = json.loads(out)
    assert report["distance"] == pytest.approx(0.75 ** (1.0 / 3.0))
    assert report["j_at_zero"] == {"re": -0.5, "im": 0.0}


def test_opa_command(capsys):
    code, out, _ = run(
        capsys,
        ["opa", "--p", "2", "--degree", "0", "--grid", "1024", "--input", OUTER_HALF],
    )
    assert code == 0
    report = json.loads(out)
    assert report["coefficients"][0]["re"] == pytest.approx(0.8, abs=1e-10)
    assert report["error"] ** 2 == pytest.approx(0.2, abs=1e-10)
    assert report["converged"] is True


def test_extremal_fbp_command(capsys):
    code, out, _ = run(
        capsys, ["extremal-fbp", "--p", "2", "--zeros", "0.5,0.5", "--grid", "1024"]
    )
    assert code == 0
    report = json.loads(out)
    assert report["c"] == pytest.approx(0.9375)
    assert report["w"][0]["re"] == pytest.approx(0.8, abs=1e-10)
    assert report["max_consistency_residual"] < 1e-10


def test_distance_command(capsys):
    code, out, _ = run(capsys, ["distance", "--p", "2", "--input", HALF_ZERO])
    assert code == 0
    assert json.loads(out)["distance"] == pytest.approx(np.sqrt(0.75))


def test_dual_command(capsys):
    code, out, _ = run(
        capsys, ["dual", "--q", "2", "--zeros", "0.5", "--grid", "1024"]
    )
    assert code == 0
    report = json.loads(out)
    assert abs(report["value"] - np.sqrt(3.0) / 2.0) < 1e-3
    assert report["primal_exact"] == pytest.approx(np.sqrt(3.0) / 2.0)


def test_roots_command(capsys):
    code, out, _ = run(
        capsys,
        ["roots", "--p", "2", "--degree", "4", "--grid", "1024", "--input", HALF_ZERO],
    )
    assert code == 0
    report = json.loads(out)
    assert all(b["satisfied"] for b in report["bounds"])


def test_pythag_command(capsys):
    code, out, _ = run(
        capsys,
        [
            "pythag",
            "--p",
            "3",
            "--grid",
            "1024",
            "--input",
            '{"outer_poly":[{"re":1.0,"im":0.0}]}',
            "--input2",
            '{"outer_poly":[{"re":0.0,"im":0.0},{"re":1.0,"im":0.0}]}',
        ],
    )
    assert code == 0
    report = json.loads(out)
    assert report["orthogonal"] is True
    assert all(c["holds"] for c in report["inequalities"])


def test_scan_conjecture_command(capsys):
    code, out, _ = run(
        capsys,
        [
            "scan-conjecture",
            "--p",
            "3",
            "--grid",
            "1024",
            "--input",
            OUTER_HALF,
            "--zeros",
            "0.5",
        ],
    )
    assert code == 0
    report = json.loads(out)
    assert report["margin"] > 0
    assert report["counterexample"] is False


def test_escape_command_csv(capsys):
    code, out, _ = run(
        capsys,
        [
            "escape",
            "--p",
            "2",
            "--degree",
            "2",
            "--grid",
            "1024",
            "--input",
            HALF_ZERO,
            "--format",
            "csv",
        ],
    )
    assert code == 0
    header = out.splitlines()[0]
    assert header.split(",") == ["n", "p", "root_re", "root_im", "modulus", "in_disk"]


def test_truncation_command(capsys):
    code, out, _ = run(capsys, ["truncation", "--p", "2", "--degree", "5"])
    assert code == 0
    report = json.loads(out)
    assert report["family"] == "geometric"
    assert len(report["rows"]) == 5


def test_truncation_multiplicity_note(capsys):
    code, out, _ = run(
        capsys, ["truncation", "--p", "2", "--degree", "5", "--family", "multiplicity"]
    )
    assert code == 0
    report = json.loads(out)
    assert "note" in report


def test_invalid_json_exit_code(capsys):
    code, _, err = run(capsys, ["project", "--p", "2", "--input", "{bad json"])
    assert code == 2
    assert "invalid-input" in err


def test_missing_input_exit_code(capsys):
    code, _, err = run(capsys, ["project", "--p", "2"])
    assert code == 2


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, ["project", "--p", "2", "--input", "/no/such/file.json"])
    assert code == 2


def test_bad_p_exit_code(capsys):
    code, _, err = run(capsys, ["project", "--p", "0.5", "--input", HALF_ZERO])
    assert code == 2


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        ["distance", "--p", "2", "--input", HALF_ZERO, "--out", str(out_path)],
    )
    assert code == 0
    assert out == ""
    assert json.loads(out_path.read_text())["distance"] == pytest.approx(
        np.sqrt(0.75)
    )


def test_determinism(capsys):
    argv = ["opa", "--p", "2.5", "--degree", "3", "--grid", "1024", "--input", HALF_ZERO]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2


def test_report_round_trip(capsys):
    code, out, _ = run(capsys, ["project", "--p", "2", "--input", HALF_ZERO])
    report = json.loads(out)
    spec = report["input"]
    code2, out2, _ = run(
        capsys, ["project", "--p", "2", "--input", json.dumps(spec)]
    )
    assert code2 == 0
    assert json.loads(out2)["distance"] == report["distance"]
