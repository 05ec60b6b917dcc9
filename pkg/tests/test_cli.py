import json

import pytest

from conftest import EXAMPLE3
from splitquat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", EXAMPLE3)
    assert code == 0 and "verdict: true" in out
    code, out, _ = run(capsys, "check", EXAMPLE3, "--notion", "d-left")
    assert code == 1 and "verdict: false" in out


def test_check_json_lists_residuals(capsys):
    code, data = run_json(capsys, "check", "x0^2 ; 0 ; 0 ; 0", "--notion", "right-differentiable")
    assert code == 1
    assert data["verdict"] is False and len(data["residuals"]) == 12


def test_parse_error_exits_two(capsys):
    code, _, err = run(capsys, "check", "x0^2 +")
    assert code == 2 and "position 6" in err
    code, data = run_json(capsys, "apply", "2/0")
    assert code == 2 and data["type"] == "ParseError"


def test_apply_on_affine_map(capsys):
    code, data = run_json(capsys, "generate", "affine", "--A", "1 + i")
    assert code == 0
    code, out, _ = run(capsys, "apply", data["function"])
    assert code == 0 and "constant: -2 + 2*i" in out


def test_scalar_input_and_grad(capsys):
    code, data = run_json(capsys, "generate", "grad", "x0*x2 + x1*x3")
    assert code == 0
    for notion in ("left-regular", "right-regular"):
        assert run(capsys, "check", data["function"], "--notion", notion)[0] == 0
    assert run(capsys, "generate", "grad", "x0^2")[0] == 2


def test_function_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "f.txt"
    path.write_text(EXAMPLE3 + "\n")
    assert run(capsys, "check", f"@{path}")[0] == 0
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(EXAMPLE3))
    assert run(capsys, "detect", "-")[0] == 1


def test_generators(capsys):
    code, data = run_json(capsys, "ck3d", "x1*x2")
    assert code == 0 and run(capsys, "check", data["function"])[0] == 0
    code, data = run_json(capsys, "ck2d", "x2^2 - x3^2")
    assert code == 0 and run(capsys, "check", data["function"])[0] == 0
    assert run(capsys, "ck2d", "x0*x2")[0] == 2
    code, data = run_json(capsys, "oneclass", "--g1", "u0*u1", "--g2", "v0^2")
    assert code == 0
    assert run(capsys, "detect", data["function"])[0] == 0
    assert run(capsys, "oneclass", "--g1", "v0")[0] == 2


def test_matrix_round_trip(capsys):
    code, data = run_json(capsys, "matrix", "1 + 2*i - j + 3*k")
    assert code == 0
    entries = " ".join(x for row in data["matrix"] for x in row)
    code, back = run_json(capsys, "matrix", "--inverse", entries)
    assert code == 0 and back["element"] == "1 + 2*i - j + 3*k"


def test_cauchy_from_config(capsys, tmp_path):
    cfg = tmp_path / "ball.cfg"
    cfg.write_text("center = 0 0 0 0\nradius = 1\nresolution = 24 24 24\nz0 = 0 0 0 0\n")
    code, data = run_json(capsys, "cauchy", "--config", str(cfg))
    assert code == 0
    assert abs(data["value"][0] - 1) < 5e-3
    code, data = run_json(capsys, "cauchy", "--z0", "0.1 0.2 0.05 -0.1", "--function", EXAMPLE3,
                          "--method", "contour")
    assert code == 0
    assert data["value"] == pytest.approx([-0.001, 0.0005, -0.002, 0.001], abs=1e-9)


def test_cauchy_errors(capsys):
    assert run(capsys, "cauchy", "--z0", "1 0 0 0")[0] == 2
    assert run(capsys, "cauchy", "--function", "x0 ; x1 ; x2 ; x3")[0] == 2


def test_report_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "--json", "-o", str(target), "check", EXAMPLE3)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["verdict"] is True


def test_errata_check_against_shipped_file(capsys):
    code, out, _ = run(capsys, "errata", "--check")
    assert code == 0 and "up to date" in out


def test_errata_written(capsys, tmp_path):
    target = tmp_path / "errata.md"
    code, _, _ = run(capsys, "errata", "--exact-only", "--output", str(target))
    assert code == 0
    assert target.read_text().startswith("# Errata")
