"""Command-line surface: report payloads, exit codes, determinism."""

import json
import math

import numpy as np
import pytest

from jacobi_freeze.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_payload(out: str) -> dict:
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    return payload


def strip_timestamp(payload: dict) -> dict:
    payload = dict(payload)
    payload.pop("timestamp")
    return payload


class TestZeros:
    def test_json_quadratic_roots(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "zeros", "--n", "2", "--a", "0", "--b", "1")
        assert code == 0
        payload = json_payload(out)
        assert payload["all_passed"]
        assert payload["results"]["zeros"] == pytest.approx(
            [-0.5773502692, 0.5773502692], abs=1e-9
        )

    def test_degree_one_value(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "zeros", "--n", "1", "--a", "1", "--b", "1")
        assert code == 0
        assert json_payload(out)["results"]["zeros"][0] == pytest.approx(-1.0 / 3.0, abs=1e-15)

    def test_invalid_b_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "zeros", "--n", "1", "--a", "1", "--b", "0")
        assert code == 2
        assert "b > 0" in err

    def test_human_format(self, capsys):
        code, out, _ = run_cli(capsys, "zeros", "--n", "2", "--a", "0", "--b", "1")
        assert code == 0
        assert "all checks passed" in out
        assert "[PASS]" in out


class TestPrecisionSpectrum:
    def test_precision_determinants(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "precision", "--n", "2", "--a", "0", "--b", "1")
        assert code == 0
        results = json_payload(out)["results"]
        assert math.exp(results["log_det_algebraic_numerical"]) == pytest.approx(13.5, rel=1e-12)
        assert math.exp(results["log_det_trigonometric_numerical"]) == pytest.approx(96.0, rel=1e-12)
        assert results["cross_relation_residual_scaled"] <= 1e-10

    def test_spectrum_values(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "spectrum", "--n", "2", "--a", "0", "--b", "1")
        assert code == 0
        results = json_payload(out)["results"]
        assert results["eigenvalues_numerical"] == pytest.approx([8.0, 12.0], abs=1e-10)
        assert results["min_eigenvector_cosine"] >= 1.0 - 1e-8

    def test_spectrum_n1(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "spectrum", "--n", "1", "--a", "1", "--b", "1")
        assert code == 0
        assert json_payload(out)["results"]["eigenvalues_numerical"] == pytest.approx([6.0])


class TestNormalization:
    def test_convergence_and_identity(self, capsys):
        code, out, _ = run_cli(
            capsys, "--format", "json", "normalization", "--n", "1", "--a", "1", "--b", "1"
        )
        assert code == 0
        payload = json_payload(out)
        gaps = payload["results"]["prefactor_gaps"]
        assert gaps == sorted(gaps, reverse=True)
        names = [c["name"] for c in payload["checks"]]
        assert "n1_beta_oracle_log_gap" in names


class TestSample:
    def test_writes_deterministic_csv(self, capsys, tmp_path):
        args = [
            "sample", "--n", "2", "--a", "1", "--b", "1", "--kappa", "50",
            "--samples", "500", "--seed", "7", "--burn-in", "100", "--thinning", "2",
            "--chains", "2",
        ]
        out1 = tmp_path / "s1.csv"
        out2 = tmp_path / "s2.csv"
        code1, _, _ = run_cli(capsys, *args, "--out", str(out1))
        code2, _, _ = run_cli(capsys, *args, "--out", str(out2))
        assert code1 == 0 and code2 == 0
        assert out1.read_bytes() == out2.read_bytes()
        rows = np.loadtxt(out1, delimiter=",", comments="#")
        assert rows.shape == (500, 2)
        assert np.all(np.diff(rows, axis=1) > 0.0)

    def test_seed_env_override(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("JACOBI_FREEZE_SEED", "424242")
        code, out, _ = run_cli(
            capsys, "--format", "json", "sample", "--n", "1", "--a", "1", "--b", "1",
            "--kappa", "10", "--samples", "200", "--burn-in", "50",
            "--out", str(tmp_path / "s.csv"),
        )
        assert code == 0
        assert json_payload(out)["seed"] == 424242


class TestClt:
    CLT_ARGS = [
        "--format", "json", "clt", "--n", "3", "--a", "1", "--b", "1", "--kappa", "500",
        "--samples", "20000", "--seed", "11", "--burn-in", "1000", "--thinning", "10",
        "--chains", "8",
    ]

    def test_passes_and_reports(self, capsys):
        code, out, _ = run_cli(capsys, *self.CLT_ARGS)
        assert code == 0
        payload = json_payload(out)
        assert payload["results"]["frobenius_rel_error_algebraic"] < 0.05
        assert payload["results"]["frobenius_rel_error_trigonometric"] < 0.05
        assert all(c["passed"] for c in payload["checks"])

    def test_byte_identical_payload(self, capsys):
        _, out1, _ = run_cli(capsys, *self.CLT_ARGS)
        _, out2, _ = run_cli(capsys, *self.CLT_ARGS)
        p1 = strip_timestamp(json_payload(out1))
        p2 = strip_timestamp(json_payload(out2))
        assert json.dumps(p1, sort_keys=True) == json.dumps(p2, sort_keys=True)


class TestLimits:
    def test_hermite_table(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "limits", "--mode", "hermite", "--n", "2")
        assert code == 0
        results = json_payload(out)["results"]
        assert math.exp(results["log_det_numerical"]) == pytest.approx(2.0, rel=1e-10)
        table = results["convergence_table"]
        assert table[0]["matrix_distance"] > table[-1]["matrix_distance"]

    def test_laguerre_determinant(self, capsys):
        code, out, _ = run_cli(
            capsys, "--format", "json", "limits", "--mode", "laguerre", "--n", "2", "--beta", "0"
        )
        assert code == 0
        results = json_payload(out)["results"]
        assert math.exp(results["log_det_numerical"]) == pytest.approx(1.0, rel=1e-10)


class TestVerifyAll:
    def test_skip_mc_passes(self, capsys):
        code, out, err = run_cli(capsys, "--format", "json", "verify-all", "--skip-mc")
        assert code == 0
        payload = json_payload(out)
        assert payload["all_passed"]
        assert "01-stationarity" in payload["results"]
        assert "10-clt" not in payload["results"]
        assert "PASS  01-stationarity" in err


class TestConsoleEntry:
    def test_module_invocation(self, tmp_path):
        import subprocess
        import sys

        result = subprocess.run(
            [sys.executable, "-m", "jacobi_freeze.cli", "--format", "json",
             "zeros", "--n", "1", "--a", "1", "--b", "1"],
            capture_output=True,
            text=True,
            check=False,
        )
        assert result.returncode == 0
        assert json.loads(result.stdout)["all_passed"]

    def test_usage_error_exit_code(self):
        import subprocess
        import sys

        result = subprocess.run(
            [sys.executable, "-m", "jacobi_freeze.cli", "zeros", "--n", "oops"],
            capture_output=True,
            text=True,
            check=False,
        )
        assert result.returncode == 2
