"""Integration tests driving the CLI through click's test runner."""

import json
import math

import pytest
from click.testing import CliRunner

from concurrence.cli import main
from concurrence.config.validator import validate_report
from concurrence.utils.constants import ExitCode

ROTATED_PRODUCT = """
name: rotated-product
d: 3
alpha:
  - [[0.4082482904638631, 0.0], [-0.4082482904638631, 0.0], [0.0, 0.0]]
  - [[0.4082482904638631, 0.0], [-0.4082482904638631, 0.0], [0.0, 0.0]]
  - [[0.4082482904638631, 0.0], [-0.4082482904638631, 0.0], [0.0, 0.0]]
"""

NOT_NORMALIZED = """
d: 2
alpha:
  - [[0.5, 0.0], [0.0, 0.0]]
  - [[0.0, 0.0], [0.0, 0.0]]
"""

TWO_STATES = """
name: bell
d: 2
alpha:
  - [[0.0, 0.0], [0.7071067811865476, 0.0]]
  - [[-0.7071067811865476, 0.0], [0.0, 0.0]]
---
name: flat-4
d: 4
alpha:
  - [[0.5, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]
  - [[0.0, 0.0], [0.5, 0.0], [0.0, 0.0], [0.0, 0.0]]
  - [[0.0, 0.0], [0.0, 0.0], [0.5, 0.0], [0.0, 0.0]]
  - [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.5, 0.0]]
"""


@pytest.fixture
def runner():
    return CliRunner()


class TestMeasure:
    def test_fixture_report(self, runner):
        result = runner.invoke(main, ["measure", "--fixture", "maximally-entangled", "--no-color"])
        assert result.exit_code == 0, result.output
        assert "Entanglement Report: maximally-entangled" in result.output
        assert "2x2 minors: 1" in result.output
        assert "Closed-form EOF" not in result.output

    def test_json_record_validates(self, runner):
        result = runner.invoke(main, ["measure", "--fixture", "singlet", "--json"])
        assert result.exit_code == 0, result.output
        record = json.loads(result.stdout)
        is_valid, errors = validate_report(record)
        assert is_valid, errors
        assert record["c_minors"] == pytest.approx(math.sqrt(3.0) / 2.0, abs=1e-10)
        assert record["p_e"] == pytest.approx(0.5, abs=1e-12)

    def test_product_fixture_vanishes(self, runner):
        result = runner.invoke(main, ["measure", "--fixture", "product", "--json"])
        assert result.exit_code == 0, result.output
        record = json.loads(result.stdout)
        assert record["c_minors"] == 0.0
        assert record["c_schmidt"] == 0.0
        assert record["det_alpha_sq"] == 0.0
        assert record["entropy_bits"] == 0.0

    def test_rotated_product_state_is_accepted(self, runner, tmp_path):
        path = tmp_path / "product.yaml"
        path.write_text(ROTATED_PRODUCT)
        result = runner.invoke(main, ["measure", str(path), "--json"])
        assert result.exit_code == 0, result.output
        record = json.loads(result.stdout)
        assert record["c_minors"] < 1e-12
        assert record["c_schmidt"] < 1e-7
        assert record["entropy_bits"] < 1e-12

    def test_multi_document_file(self, runner, tmp_path):
        path = tmp_path / "states.yaml"
        path.write_text(TWO_STATES)
        result = runner.invoke(main, ["measure", str(path), "--json"])
        assert result.exit_code == 0, result.output
        records = json.loads(result.stdout)
        assert [r["d"] for r in records] == [2, 4]
        assert records[0]["c_2x2"] == pytest.approx(1.0)
        assert records[1]["entropy_bits"] == pytest.approx(2.0, abs=1e-12)

    def test_unnormalized_state_exits_invalid_input(self, runner, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text(NOT_NORMALIZED)
        result = runner.invoke(main, ["measure", str(path)])
        assert result.exit_code == ExitCode.INVALID_INPUT
        assert "normalization" in result.output

    def test_schema_violation_exits_invalid_input(self, runner, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("d: 3\nalpha: nope\n")
        result = runner.invoke(main, ["measure", str(path)])
        assert result.exit_code == ExitCode.INVALID_INPUT
        assert "Invalid state file" in result.output

    def test_unknown_fixture(self, runner):
        result = runner.invoke(main, ["measure", "--fixture", "no-such-state"])
        assert result.exit_code == ExitCode.INVALID_INPUT

    def test_log_file_receives_info_records(self, runner, tmp_path):
        log_path = tmp_path / "run.log"
        result = runner.invoke(
            main,
            ["--log-level", "INFO", "--log-file", str(log_path), "measure", "--fixture", "singlet"],
        )
        assert result.exit_code == 0, result.output
        assert "Measured singlet" in log_path.read_text()


class TestSweep:
    def test_stdout(self, runner):
        result = runner.invoke(main, ["sweep", "--n", "4"])
        assert result.exit_code == 0, result.output
        lines = result.stdout.split("\n")
        assert lines[0] == "epsilon,p_e,c"
        assert lines[1] == "0,0,0"
        assert lines[3] == "0.666666667,1,1"
        assert len([line for line in lines if line]) == 5

    def test_out_file(self, runner, tmp_path):
        out = tmp_path / "sweep.csv"
        result = runner.invoke(main, ["sweep", "--out", str(out)])
        assert result.exit_code == 0, result.output
        data = out.read_bytes()
        assert b"\r\n" not in data
        rows = data.decode().splitlines()
        assert len(rows) == 102
        for row in rows[1:]:
            _, pe, c = (float(x) for x in row.split(","))
            assert c >= pe

    def test_unwritable_output_exits_io_error(self, runner, tmp_path):
        out = tmp_path / "missing" / "sweep.csv"
        result = runner.invoke(main, ["sweep", "--out", str(out)])
        assert result.exit_code == ExitCode.IO_ERROR


class TestCheck:
    def test_small_run_passes(self, runner):
        result = runner.invoke(main, ["check", "--trials", "10", "--seed", "3", "--no-color"])
        assert result.exit_code == 0, result.output
        assert "Result: PASSED" in result.output
        assert "All properties hold" in result.output

    def test_config_file_with_flag_override(self, runner, tmp_path):
        path = tmp_path / "check.yaml"
        path.write_text("check:\n  trials: 5\n  seed: 1\n  d: 2\n")
        result = runner.invoke(
            main, ["check", "--config", str(path), "--workers", "2", "--d", "4", "--no-color"]
        )
        assert result.exit_code == 0, result.output
        assert "Seed: 1" in result.output
        assert "Workers: 2" in result.output
        assert "vieta" not in result.output

    def test_seed_out_of_range(self, runner):
        result = runner.invoke(main, ["check", "--seed", "-1"])
        assert result.exit_code == 2
