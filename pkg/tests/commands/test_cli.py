import json
from unittest.mock import Mock

import pytest
from typer.testing import CliRunner

from rigid_jets.cli import app
from rigid_jets.scenarios import load_spec

runner = CliRunner()

GL = {"scenario": "gl-stabilizer", "n": 2}


@pytest.fixture
def spec_file(tmp_path):
    def write(payload):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return write


def test_run_passing_scenario(jets_settings, spec_file):
    result = runner.invoke(app, ["run", "--spec", str(spec_file(GL))])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["scenario"] == "gl-stabilizer"
    assert payload["pass"] is True


def test_run_failing_expectation(jets_settings, spec_file):
    framing = {
        "scenario": "framing-kernel", "n": 1, "l": 2,
        "vector_fields": [[{"vars": ["x"], "order": 0, "terms": [{"exp": [0], "coef": "1"}]}]],
        "expect": {"kernel_dimension": 3},
    }
    result = runner.invoke(app, ["run", "--spec", str(spec_file(framing)), "--format", "text"])
    assert result.exit_code == 1
    assert result.stdout.startswith("FAIL framing-kernel")
    assert "kernel dimension 0, expected 3" in result.stdout


def test_run_list_writes_an_aggregate(jets_settings, spec_file, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(app, ["run", "--spec", str(spec_file([GL, GL])), "--out", str(out)])
    assert result.exit_code == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["total"] == 2


def test_run_invalid_spec(jets_settings, spec_file):
    result = runner.invoke(app, ["run", "--spec", str(spec_file({"scenario": "gl-stabilizer", "n": 9}))])
    assert result.exit_code == 2
    assert "Error: n: must be at most 5, got 9" in result.output


def test_run_missing_file(jets_settings, tmp_path):
    result = runner.invoke(app, ["run", "--spec", str(tmp_path / "missing.json")])
    assert result.exit_code == 2
    assert "Error: cannot read" in result.output


def test_run_unknown_format(jets_settings, spec_file):
    result = runner.invoke(app, ["run", "--spec", str(spec_file(GL)), "--format", "yaml"])
    assert result.exit_code == 2


def test_run_unwritable_output(jets_settings, spec_file, tmp_path):
    out = tmp_path / "missing-dir" / "report.json"
    result = runner.invoke(app, ["run", "--spec", str(spec_file(GL)), "--out", str(out)])
    assert result.exit_code == 2
    assert "Error: cannot write" in result.output


def test_suite_with_a_configured_resolver(jets_settings):
    jets_settings.SUITE_RESOLVER = Mock(return_value=[load_spec(GL)])
    result = runner.invoke(app, ["suite", "--format", "text"])
    assert result.exit_code == 0, result.output
    assert result.stdout.endswith("PASS: 1/1 scenarios passed\n")


def test_suite_rejects_zero_jobs(jets_settings):
    result = runner.invoke(app, ["suite", "--jobs", "0"])
    assert result.exit_code == 2


def test_invalid_settings_exit_with_usage_error(jets_settings):
    jets_settings.ORACLE_GRID = 1
    result = runner.invoke(app, ["list"])
    assert result.exit_code == 2
    assert "Error: ORACLE_GRID must be at least 2, but got 1" in result.output


def test_unknown_verbosity_exits_with_usage_error(jets_settings, monkeypatch):
    monkeypatch.setenv("RIGID_JETS_VERBOSITY", "loud")
    result = runner.invoke(app, ["list"])
    assert result.exit_code == 2
    assert "RIGID_JETS_VERBOSITY must be a logging level name or number" in result.output


def test_list_kinds_text():
    result = runner.invoke(app, ["list"])
    assert result.exit_code == 0
    assert "torus-degeneration: no invariant rigid A-structure on the blown-up torus" in result.stdout
    assert "  n (int, required) [2..5]: chart dimension" in result.stdout
    assert "  target (choice, required) {torus, volume, conjugate}: closed form compared" in result.stdout


def test_list_kinds_json():
    result = runner.invoke(app, ["list", "--json"])
    assert result.exit_code == 0
    assert set(json.loads(result.stdout)) >= {"torus-degeneration", "oracle-crosscheck"}


def test_no_arguments_shows_help():
    result = runner.invoke(app, [])
    assert "run" in result.output
    assert "suite" in result.output
