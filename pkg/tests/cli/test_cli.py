#!/usr/bin/env python3
"""Unit tests for the CLI module"""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def _invoke(runner, config, *args):
    return runner.invoke(main, ["--config", str(config), *args])


@pytest.fixture
def no_config(temp_dir):
    return temp_dir / "absent.json"


class TestDecisionCommands:
    """Test `lefschetz wlp` and `lefschetz slp`"""

    def test_help(self, runner):
        """Test the main CLI group"""
        result = runner.invoke(main, ["--help"])

        assert result.exit_code == 0
        assert "Decide weak and strong Lefschetz properties" in result.output

    def test_wlp_holds(self, runner, no_config):
        """Test exit code 0 and the JSON record for a holding case"""
        result = _invoke(runner, no_config, "wlp", "--degrees", "3,3,3", "--char", "5")

        assert result.exit_code == 0
        record = json.loads(result.stdout.strip().splitlines()[-1])
        assert record["normalized"] == [3, 3, 3]
        assert record["status"] == "holds"
        assert record["method"] == "theorem:half-socle-bound"

    def test_wlp_fails(self, runner, no_config):
        """Test exit code 1 and the witness for a failing case"""
        result = _invoke(runner, no_config, "wlp", "-d", "2,5,5", "-p", "5")

        assert result.exit_code == 1
        record = json.loads(result.stdout.strip().splitlines()[-1])
        assert record["degrees"] == [2, 5, 5]
        assert record["normalized"] == [5, 5, 2]
        assert record["witness"]["prime"] == 5

    def test_explicit_method(self, runner, no_config):
        """Test forcing the determinant route"""
        result = _invoke(runner, no_config, "wlp", "-d", "5,5,5,2", "-p", "7", "--method", "det")

        assert result.exit_code == 1
        record = json.loads(result.stdout.strip().splitlines()[-1])
        assert record["method"] == "determinant"
        assert record["witness"] == {"kind": "prime", "prime": 7, "exponent": 1}

    def test_slp_with_trace(self, runner, no_config):
        """Test that --trace writes the method trace to stderr"""
        result = _invoke(runner, no_config, "slp", "-d", "3,3", "-p", "5", "--trace")

        assert result.exit_code == 0
        trace = json.loads(result.stderr.strip().splitlines()[-1])
        assert trace["property"] == "slp"
        assert any(step["decisive"] and step["rule"] == "above-socle" for step in trace["steps"])

    def test_undecided_without_oracle(self, runner, temp_dir):
        """Test exit code 2 when the oracle fallback is disabled"""
        config = temp_dir / "lefschetz.json"
        config.write_text(json.dumps({"oracle_fallback": False}))

        result = _invoke(runner, config, "wlp", "-d", "5,5,5", "-p", "7")

        assert result.exit_code == 2
        assert "undecided" in result.output

    @pytest.mark.parametrize("args,fragment", [
        (["-d", "3,1", "-p", "2"], "d_i >= 2"),
        (["-d", "3,3", "-p", "4"], "4"),
        (["-d", "5", "-p", "3"], "at least two degrees"),
        (["-d", "3,x", "-p", "3"], "comma-separated"),
    ])
    def test_bad_input(self, runner, no_config, args, fragment):
        """Test that malformed input exits with code 2 and a message"""
        result = _invoke(runner, no_config, "wlp", *args)

        assert result.exit_code == 2
        assert fragment in result.output

    def test_precondition_names_hypothesis(self, runner, no_config):
        """Test that a route used outside its hypotheses names the hypothesis"""
        result = _invoke(runner, no_config, "wlp", "-d", "3,3,3", "-p", "3", "--method", "det")

        assert result.exit_code == 2
        assert "hypothesis: socle degree odd" in result.output


class TestDetCommand:
    """Test `lefschetz det`"""

    def test_factorization(self, runner, no_config):
        """Test the determinant report with the brute-force check"""
        result = _invoke(runner, no_config, "det", "-d", "4,4,4,1", "--allow-unit", "--bruteforce")

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["magnitude"] == {"2": 2, "5": 1}
        assert abs(report["bruteforce"]) == 20

    def test_unit_needs_flag(self, runner, no_config):
        """Test that degrees equal to 1 need --allow-unit"""
        result = _invoke(runner, no_config, "det", "-d", "4,4,4,1")

        assert result.exit_code == 2
        assert "--allow-unit" in result.output


class TestCensusCommand:
    """Test `lefschetz census`"""

    def test_census_to_stdout(self, runner, no_config):
        """Test a small census on stdout with its header"""
        result = _invoke(runner, no_config, "census", "--n", "1", "--dmax", "3", "--pmax", "3",
                         "--property", "wlp", "--jobs", "1")

        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0].startswith("# lefschetz-mci ")
        assert "property=wlp" in lines[0]
        records = [json.loads(line) for line in lines[1:]]
        assert len(records) == 6
        assert all(r["status"] == "holds" for r in records)

    def test_census_preset_to_csv(self, runner, sample_config_file, temp_dir):
        """Test a configured preset written as CSV"""
        out = temp_dir / "tiny.csv"
        result = _invoke(runner, sample_config_file, "census", "--preset", "tiny", "--format", "csv",
                         "--with-zero", "--out", str(out))

        assert result.exit_code == 0
        assert "Wrote 9 record(s)" in result.output
        lines = out.read_text().splitlines()
        assert "with_zero=true" in lines[0]
        assert lines[1].startswith("degrees,normalized,char,property")
        assert len(lines) == 11

    def test_census_needs_a_range(self, runner, no_config):
        """Test that a census without range or preset is a usage error"""
        result = _invoke(runner, no_config, "census", "--n", "1")

        assert result.exit_code == 2

    def test_unknown_preset(self, runner, no_config):
        """Test that an unknown preset is reported"""
        result = _invoke(runner, no_config, "census", "--preset", "nonexistent")

        assert result.exit_code == 2
        assert "unknown preset" in result.output


class TestVerifyCommand:
    """Test `lefschetz verify`"""

    def test_det_vs_oracle(self, runner):
        """Test a small determinant sweep with no disagreements"""
        result = runner.invoke(main, ["verify", "--mode", "det-vs-oracle", "--n", "2", "--dmax", "3"])

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["mode"] == "det-vs-oracle"
        assert report["disagreements"] == []


class TestConcordanceCommand:
    """Test `lefschetz concordance`"""

    def test_check_passes(self, runner, temp_dir):
        """Test the rendered table and the completeness check"""
        out = temp_dir / "concordance.md"
        result = runner.invoke(main, ["concordance", "--out", str(out), "--check"])

        assert result.exit_code == 0
        assert out.read_text().startswith("# Concordance")


class TestConfigCommands:
    """Test `lefschetz init` and `lefschetz presets`"""

    def test_init_new_file(self, runner, temp_dir):
        """Test init command with new configuration file"""
        config_path = temp_dir / "lefschetz.json"
        result = runner.invoke(main, ["init", "--output", str(config_path)])

        assert result.exit_code == 0
        assert "created successfully" in result.output
        assert json.loads(config_path.read_text())["output_format"] == "jsonl"

    def test_init_existing_file_abort(self, runner, temp_dir):
        """Test init command with existing file and abort"""
        config_path = temp_dir / "lefschetz.json"
        config_path.write_text('{"jobs": 2}')

        result = runner.invoke(main, ["init", "--output", str(config_path)], input="n\n")

        assert result.exit_code == 0
        assert "cancelled" in result.output
        assert json.loads(config_path.read_text()) == {"jobs": 2}

    def test_presets_listing(self, runner, sample_config_file):
        """Test that built-in and configured presets are listed"""
        result = _invoke(runner, sample_config_file, "presets")

        assert result.exit_code == 0
        assert "smoke" in result.output
        assert "tiny: tiny sweep" in result.output

    def test_bad_config_file(self, runner, temp_dir):
        """Test that an invalid configuration file is reported"""
        config = temp_dir / "lefschetz.json"
        config.write_text(json.dumps({"log_level": "LOUD"}))

        result = _invoke(runner, config, "presets")

        assert result.exit_code == 2
        assert "invalid configuration" in result.output


def test_package_layout():
    """Test that the CLI module sits where the script entry point expects it"""
    assert (Path(__file__).parent.parent.parent / "src" / "cli" / "__init__.py").exists()
