"""CLI behavior: formats, exit statuses, zero-file plumbing, determinism."""

from __future__ import annotations

import numpy as np
import pytest

from zetaprod.cli import ZERO_FILE_ENV, main
from zetaprod.zerodist import ZeroList


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv(ZERO_FILE_ENV, raising=False)


@pytest.fixture(scope="module")
def bundled_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("zeros") / "zeros_t100.txt"
    ZeroList.bundled().write(path)
    return path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------ xi-eval


def test_xi_eval_center(capsys):
    code, out, err = run(capsys, "xi-eval", "--z", "0")
    assert code == 0
    assert out == "xi=0.497121 ln_xi=-0.69892\n"


def test_xi_eval_complex_with_asymptotics(capsys):
    code, out, _ = run(capsys, "xi-eval", "--z", "12,3")
    assert code == 0
    assert "asym_dev=" in out and "asym_bound=" in out


def test_xi_eval_missing_flag_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["xi-eval"])
    assert exc.value.code == 2


# ------------------------------------------------------- verify-table


def test_verify_table_default_nine_lines(capsys):
    code, out, _ = run(capsys, "verify-table")
    lines = out.strip().split("\n")
    assert code == 0
    assert len(lines) == 9
    assert all("agree=true" in line for line in lines)


def test_verify_table_rows_and_all_pairs(capsys):
    code, out, _ = run(capsys, "verify-table", "--rows", "1,9", "--all-pairs")
    assert code == 0
    assert len(out.strip().split("\n")) == 10


def test_verify_table_bad_rows(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify-table", "--rows", "12"])
    assert exc.value.code == 2


# ---------------------------------------------------------- cosh-demo


def test_cosh_demo_pass(capsys):
    code, out, _ = run(capsys, "cosh-demo", "--z", "2", "--terms", "40")
    assert code == 0
    assert "abs_diff=" in out


def test_cosh_demo_tolerance_failure(capsys):
    code, out, err = run(capsys, "cosh-demo", "--z", "1", "--terms", "2")
    assert code == 1
    assert err.startswith("FAIL:")
    assert "abs_diff=" in out  # data still emitted alongside the failure


# --------------------------------------------------- zero-file plumbing


def test_find_zeros_writes_file(capsys, tmp_path):
    out_file = tmp_path / "z30.txt"
    code, out, _ = run(capsys, "find-zeros", "--t-max", "30", "--out", str(out_file))
    assert code == 0
    assert "wrote 3 zeros" in out
    zeros = ZeroList.read(out_file)
    assert len(zeros) == 3 and zeros.t_max == 30.0


def test_count_uses_zero_file_flag(capsys, bundled_file):
    code, out, _ = run(capsys, "count", "--t-max", "50",
                       "--zero-file", str(bundled_file))
    assert code == 0
    assert out == "actual=10 formula=9.42278179 diff=0.5772182102\n"


def test_count_uses_env_var(capsys, monkeypatch, bundled_file):
    monkeypatch.setenv(ZERO_FILE_ENV, str(bundled_file))
    code, out, _ = run(capsys, "count", "--t-max", "100")
    assert code == 0
    assert out.startswith("actual=29 ")


def test_flag_beats_env(capsys, monkeypatch, tmp_path, bundled_file):
    # env points at a list that is too short; the flag must win
    short = tmp_path / "short.txt"
    short.write_text("# t_max=20\n14.134725\n", encoding="utf-8")
    monkeypatch.setenv(ZERO_FILE_ENV, str(short))
    code, out, _ = run(capsys, "count", "--t-max", "50",
                       "--zero-file", str(bundled_file))
    assert code == 0
    assert out.startswith("actual=10 ")
    code, _, err = run(capsys, "count", "--t-max", "50")
    assert code == 1
    assert "error:" in err


def test_insufficient_zero_file(capsys, bundled_file):
    code, _, err = run(capsys, "residual", "--z", "100", "--t-max", "500",
                       "--zero-file", str(bundled_file))
    assert code == 1
    assert "error:" in err


# ---------------------------------------------------------- CSV output


def test_predict_csv(capsys, bundled_file):
    code, out, _ = run(capsys, "predict", "--n", "10",
                       "--zero-file", str(bundled_file))
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0] == "n,predicted_k,actual_k,deviation"
    assert len(lines) == 11
    first = lines[1].split(",")
    assert first[0] == "1"
    assert abs(float(first[2]) - 14.134725) < 1e-6


def test_residual_csv(capsys, bundled_file):
    code, out, _ = run(capsys, "residual", "--z", "50", "--t-max", "100",
                       "--zero-file", str(bundled_file))
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0].startswith("# constant_derived=-0.04638812274")
    assert lines[1] == "z,residual,tail_estimate"
    z, value, estimate = (float(p) for p in lines[2].split(","))
    assert z == 50.0
    assert abs(value - (-0.0464)) <= 0.05


def test_omega_csv(capsys, bundled_file):
    code, out, _ = run(capsys, "omega", "--t-max", "100", "--step", "0.1",
                       "--zero-file", str(bundled_file))
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0] == "k,omega,running_mean"
    assert len(lines) > 800


def test_report_csv(capsys, bundled_file):
    code, out, _ = run(capsys, "report", "--t-max", "100", "--step", "0.5",
                       "--zero-file", str(bundled_file))
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0] == "k,phi_smooth,phi_actual,phi_predicted"
    assert len(lines) == 201
    last = lines[-1].split(",")
    assert last[0] == "100"
    assert last[2] == "29"


def test_report_deterministic(capsys, bundled_file, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        code, _, _ = run(capsys, "report", "--t-max", "60", "--step", "0.5",
                         "--zero-file", str(bundled_file), "--out", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_csv_out_file(capsys, bundled_file, tmp_path):
    path = tmp_path / "predict.csv"
    code, out, _ = run(capsys, "predict", "--n", "5",
                       "--zero-file", str(bundled_file), "--out", str(path))
    assert code == 0
    assert out == ""
    text = path.read_text(encoding="utf-8")
    assert text.startswith("n,predicted_k,actual_k,deviation\n")


# ------------------------------------------------------ tolerances


def test_tol_override_forces_failure(capsys, bundled_file):
    code, out, err = run(capsys, "count", "--t-max", "50",
                         "--zero-file", str(bundled_file),
                         "--tol", "count=0.1")
    assert code == 1
    assert err.startswith("FAIL:")


def test_tol_unknown_name(capsys, bundled_file):
    code, _, err = run(capsys, "count", "--t-max", "50",
                       "--zero-file", str(bundled_file),
                       "--tol", "nope=1")
    assert code == 1
    assert "unknown tolerance" in err


def test_tol_malformed_usage_error(capsys, bundled_file):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--t-max", "50", "--zero-file", str(bundled_file),
              "--tol", "count"])
    assert exc.value.code == 2


def test_t_max_out_of_range(capsys):
    code, _, err = run(capsys, "count", "--t-max", "1200")
    assert code == 1
    assert "t_max" in err


def test_residual_z_below_domain(capsys, bundled_file):
    code, _, err = run(capsys, "residual", "--z", "10", "--t-max", "100",
                       "--zero-file", str(bundled_file))
    assert code == 1
    assert "error:" in err
