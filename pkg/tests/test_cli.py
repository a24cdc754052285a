"""Black-box exit-code and output contract of the command line."""

import csv
import json
import subprocess
import sys

import numpy as np
import pytest

DOUBLE_LIAR = "(1) sentence (2) is false\n(2) sentence (1) is true\n"
SINGLE_LIAR = "(1) sentence (1) is false\n"
HYPOTHESIZE_1_TRUE = '[{"action": "hypothesize", "sentence": 1, "value": true}]'


def run_cli(*argv, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "liarsim.cli", *argv],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def read_series(path, sentence):
    rows = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            if int(row["sentence"]) == sentence:
                rows.append(
                    (float(row["t"]), float(row["p_true"]), float(row["p_false"]), float(row["p_latent"]))
                )
    return rows


class TestVerify:
    def test_default_run_passes(self):
        result = run_cli("verify")
        assert result.returncode == 0, result.stderr
        assert "U_D" in result.stdout
        assert "match" in result.stdout
        assert "0.000e+00" in result.stdout
        assert "documented-erratum" in result.stdout

    def test_json_output(self):
        result = run_cli("verify", "--json")
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        names = [f["name"] for f in payload["fixtures"]]
        assert "H_sub lower-right block" in names

    def test_unreachable_tolerance_fails(self):
        result = run_cli("verify", "--tolerance", "1e-30")
        assert result.returncode == 1
        assert "unexpected" in result.stdout


class TestCompile:
    def test_summary_json(self, tmp_path):
        system = tmp_path / "double.liar"
        system.write_text(DOUBLE_LIAR)
        result = run_cli("compile", str(system))
        assert result.returncode == 0, result.stderr
        summary = json.loads(result.stdout)
        assert summary["n"] == 2
        assert summary["dim"] == 16
        assert summary["cycle_states"] == [10, 8, 13, 3]

    def test_parse_error_exit_1(self, tmp_path):
        system = tmp_path / "bad.liar"
        system.write_text("(1) sentence two is false\n")
        result = run_cli("compile", str(system))
        assert result.returncode == 1
        assert "line 1" in result.stderr

    def test_missing_file_exit_1(self):
        result = run_cli("compile", "/does/not/exist.liar")
        assert result.returncode == 1
        assert "cannot read" in result.stderr


class TestSimulate:
    def test_double_liar_series_period(self, tmp_path):
        system = tmp_path / "double.liar"
        system.write_text(DOUBLE_LIAR)
        schedule = tmp_path / "schedule.json"
        schedule.write_text(HYPOTHESIZE_1_TRUE)
        out = tmp_path / "series.csv"
        result = run_cli("simulate", str(system), str(schedule), "--out", str(out))
        assert result.returncode == 0, result.stderr
        summary = json.loads(result.stdout)
        assert summary["events"][0]["action"] == "hypothesize"
        assert summary["events"][0]["probability"] == pytest.approx(0.25)
        rows = read_series(out, 1)
        assert len(rows) == 128
        assert rows[0][1] == pytest.approx(1.0, abs=1e-9)
        assert rows[-1][1] == pytest.approx(1.0, abs=1e-9)

    def test_single_liar_cosine(self, tmp_path):
        system = tmp_path / "single.liar"
        system.write_text(SINGLE_LIAR)
        schedule = tmp_path / "schedule.json"
        schedule.write_text(HYPOTHESIZE_1_TRUE)
        out = tmp_path / "series.csv"
        result = run_cli("simulate", str(system), str(schedule), "--out", str(out))
        assert result.returncode == 0, result.stderr
        for t, p_true, p_false, p_latent in read_series(out, 1):
            assert abs(p_true - np.cos(t) ** 2) <= 1e-10
            assert abs(p_false - np.sin(t) ** 2) <= 1e-10
            assert abs(p_latent) <= 1e-10

    def test_empty_schedule_constant(self, tmp_path):
        system = tmp_path / "double.liar"
        system.write_text(DOUBLE_LIAR)
        schedule = tmp_path / "schedule.json"
        schedule.write_text("[]")
        out = tmp_path / "series.csv"
        result = run_cli(
            "simulate", str(system), str(schedule), "--out", str(out), "--steps", "16"
        )
        assert result.returncode == 0, result.stderr
        for sentence in (1, 2):
            for _, p_true, p_false, p_latent in read_series(out, sentence):
                assert (p_true, p_false, p_latent) == pytest.approx((0.25, 0.25, 0.5), abs=1e-12)

    def test_csv_byte_identical_across_runs(self, tmp_path):
        system = tmp_path / "double.liar"
        system.write_text(DOUBLE_LIAR)
        schedule = tmp_path / "schedule.json"
        schedule.write_text('[{"action": "sample", "sentence": 1}, {"action": "evolve", "dt": 0.7}]')
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        r1 = run_cli("simulate", str(system), str(schedule), "--out", str(out1), "--seed", "9")
        r2 = run_cli("simulate", str(system), str(schedule), "--out", str(out2), "--seed", "9")
        assert r1.returncode == r2.returncode == 0
        assert r1.stdout == r2.stdout
        assert out1.read_bytes() == out2.read_bytes()

    def test_impossible_schedule_exit_1(self, tmp_path):
        system = tmp_path / "double.liar"
        system.write_text(DOUBLE_LIAR)
        schedule = tmp_path / "schedule.json"
        schedule.write_text(
            '[{"action": "hypothesize", "sentence": 1, "value": true},'
            ' {"action": "hypothesize", "sentence": 1, "value": false}]'
        )
        result = run_cli("simulate", str(system), str(schedule))
        assert result.returncode == 1
        assert "schedule failed" in result.stderr

    def test_bad_schedule_json_exit_1(self, tmp_path):
        system = tmp_path / "double.liar"
        system.write_text(DOUBLE_LIAR)
        schedule = tmp_path / "schedule.json"
        schedule.write_text("{not json")
        result = run_cli("simulate", str(system), str(schedule))
        assert result.returncode == 1


class TestExport:
    def test_artifacts(self, tmp_path):
        system = tmp_path / "double.liar"
        system.write_text(DOUBLE_LIAR)
        result = run_cli("export", str(system))
        assert result.returncode == 0, result.stderr
        artifacts = json.loads(result.stdout)
        assert artifacts["cycle_states"] == [10, 8, 13, 3]
        assert artifacts["subspace_basis"] == [3, 8, 10, 13]
        u = artifacts["u_step_subspace"]
        assert u[0][3] == [1.0, 0.0] and u[0][0] == [0.0, 0.0]
        psi0 = artifacts["psi0"]
        assert psi0[2] == [0.5, 0.0] and psi0[0] == [0.0, 0.0]
