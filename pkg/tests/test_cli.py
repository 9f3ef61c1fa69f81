"""End-to-end CLI tests driven through main(argv)."""

import json
import math

import pytest

from littlewood.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_norm_real(capsys):
    code, payload, _ = run_json(capsys, "norm", "--coeffs", "1,1,1,-1")
    assert code == EXIT_OK
    assert payload["command"] == "norm"
    assert payload["inputs"]["coeffs"] == [1, 1, 1, -1]
    assert payload["result"]["norm"]["value"] == 2
    assert payload["result"]["norm"]["branch"] == "vertex_plus"


def test_norm_complex_with_oracle(capsys):
    code, payload, _ = run_json(
        capsys, "norm", "--coeffs", "1,1,1,-1", "--field", "complex", "--oracle"
    )
    assert code == EXIT_OK
    norm = payload["result"]["norm"]
    assert norm["branch"] == "interior_critical"
    assert norm["value"] == pytest.approx(2.0 * math.sqrt(2.0), rel=1e-15)
    assert payload["result"]["oracle"]["gap"] <= 1e-6


def test_norm_matrix_order(capsys):
    # Row-major 0.3,0.5,-0.2,0.1 is the same form as standard 0.3,-0.2,0.5,0.1.
    code, payload, _ = run_json(
        capsys, "norm", "--coeffs", "0.3,0.5,-0.2,0.1", "--order", "matrix"
    )
    assert code == EXIT_OK
    assert payload["inputs"]["coeffs"] == [0.3, -0.2, 0.5, 0.1]
    assert payload["result"]["norm"]["value"] == pytest.approx(0.9, abs=1e-15)


def test_norm_bad_coeffs(capsys):
    code, out, err = run(capsys, "norm", "--coeffs", "1,2,3")
    assert code == EXIT_USAGE
    assert out == ""
    assert "error" in err


def test_norm_nonfinite_coeffs(capsys):
    code, _, err = run(capsys, "norm", "--coeffs", "1,nan,0,0")
    assert code == EXIT_USAGE
    assert "error" in err


def test_classify_extreme(capsys):
    code, payload, _ = run_json(capsys, "classify", "--coeffs", "0.5,0.5,0.5,-0.5")
    assert code == EXIT_OK
    assert payload["result"]["verdict"] == "extreme"
    assert payload["result"]["matched"]["kind"] == "half_form"


def test_classify_interior_point_has_witness(capsys):
    code, payload, _ = run_json(capsys, "classify", "--coeffs", "0.5,0,0,0")
    assert code == EXIT_OK
    assert payload["result"]["verdict"] == "not_extreme"
    witness = payload["result"]["witness"]
    assert witness["A"] == [0.75, 0, 0, 0]
    assert witness["B"] == [0.25, 0, 0, 0]
    assert witness["epsilon"] == 0.25


def test_classify_outside_ball(capsys):
    code, payload, _ = run_json(capsys, "classify", "--coeffs", "1,1,1,1")
    assert code == EXIT_OK
    assert payload["result"]["verdict"] == "outside_ball"


def test_scan_with_artifacts(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    csv_path = tmp_path / "points.csv"
    png_path = tmp_path / "ratios.png"
    code, payload, _ = run_json(
        capsys,
        "scan",
        "--step",
        "1.0",
        "--out",
        str(out_path),
        "--csv",
        str(csv_path),
        "--plot",
        str(png_path),
    )
    assert code == EXIT_OK
    assert payload["result"]["points_scanned"] == 80
    assert payload["result"]["max_ratio"] == pytest.approx(math.sqrt(2.0), abs=1e-12)
    assert payload["result"]["argmax_count"] == 8

    report = json.loads(out_path.read_text())
    assert report["points_scanned"] == 80
    assert len(report["argmax"]) == 8

    lines = csv_path.read_text().splitlines()
    assert lines[0] == "a11,a21,a12,a22,norm,ratio"
    assert len(lines) == 81

    assert png_path.read_bytes()[:4] == b"\x89PNG"


def test_scan_bad_step(capsys):
    code, _, err = run(capsys, "scan", "--step", "0.3")
    assert code == EXIT_USAGE
    assert "error" in err


def test_scan_bad_box(capsys):
    code, _, err = run(capsys, "scan", "--step", "0.5", "--box", "nope")
    assert code == EXIT_USAGE


def test_scan_unwritable_output(capsys, tmp_path):
    code, _, err = run(
        capsys, "scan", "--step", "1.0", "--out", str(tmp_path / "no" / "dir.json")
    )
    assert code == EXIT_IO
    assert "IO failure" in err


def test_scan_deterministic_stdout(capsys):
    code1, out1, _ = run(capsys, "scan", "--step", "0.5")
    code2, out2, _ = run(capsys, "scan", "--step", "0.5")
    assert code1 == code2 == EXIT_OK
    assert out1 == out2


def test_verify_lemmas(capsys):
    code, payload, _ = run_json(
        capsys, "verify-lemmas", "--samples", "2000", "--seed", "42"
    )
    assert code == EXIT_OK
    assert payload["result"]["passed"] is True
    assert payload["result"]["samples"] == 2000


def test_verify_lemmas_bad_samples(capsys):
    code, _, err = run(capsys, "verify-lemmas", "--samples", "0")
    assert code == EXIT_USAGE


def test_floats_round_trip_at_17_digits(capsys):
    code, out, _ = run(capsys, "norm", "--coeffs", "0.1,0.2,0.3,-0.4")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["inputs"]["coeffs"] == [0.1, 0.2, 0.3, -0.4]
