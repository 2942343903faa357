import json

import pytest
from click.testing import CliRunner

from powerideals import create_cli
from powerideals.harness.report import ScenarioReport


@pytest.fixture
def cli():
    return create_cli()


@pytest.fixture
def runner():
    return CliRunner()


def test_hilbert(cli, runner):
    result = runner.invoke(cli, ["hilbert", "--builtin", "prop1", "-k", "-2"])
    assert result.exit_code == 0, result.output
    assert "[1, 1, 0, 0, 0]" in result.output


def test_json_on_root_and_subcommand(cli, runner):
    root = runner.invoke(cli, ["--json", "hilbert", "--builtin", "prop1", "-k", "-2", "--lines-only"])
    local = runner.invoke(cli, ["hilbert", "--builtin", "prop1", "-k", "-2", "--lines-only", "--json"])
    assert root.output == local.output
    document = json.loads(root.output)
    assert document["dims"] == [1, 1, 0, 0, 0]
    assert document["variant"] == "lines"


def test_basis(cli, runner):
    result = runner.invoke(cli, ["basis", "--builtin", "prop1", "-k", "-2", "-d", "1"])
    assert result.output.strip() == "y4"
    result = runner.invoke(cli, ["basis", "--builtin", "prop1", "-k", "-2", "-d", "2"])
    assert result.output.strip() == "(empty)"


def test_tutte_with_evaluation(cli, runner):
    result = runner.invoke(cli, ["tutte", "--builtin", "u23", "--eval", "2", "1"])
    assert result.exit_code == 0, result.output
    assert "T(x, y) = x^2 + x + y" in result.output
    assert "T(2, 1) = 7" in result.output
    result = runner.invoke(cli, ["--json", "tutte", "--builtin", "u23", "--eval", "1/2", "-1"])
    assert json.loads(result.output)["eval"]["value"] == "-1/4"


def test_bad_rational_is_a_usage_error(cli, runner):
    result = runner.invoke(cli, ["tutte", "--builtin", "u23", "--eval", "0.5", "1"])
    assert result.exit_code == 2


def test_rho_lines_and_strata(cli, runner):
    assert "rho=2" in runner.invoke(cli, ["rho", "--builtin", "prop1"]).output
    lines = json.loads(runner.invoke(cli, ["--json", "lines", "--builtin", "prop1"]).output)["lines"]
    assert len(lines) == 11
    assert {"direction": [1, 0, 0, 0], "multiplicity": 4} in lines
    found = json.loads(runner.invoke(cli, ["strata", "--builtin", "u23", "--json"]).output)["strata"]
    assert [s["dim"] for s in found] == [2, 1, 1, 1]


def test_defect(cli, runner):
    result = runner.invoke(cli, ["defect", "--builtin", "u23", "-k", "0", "--hyperplane", "0"])
    assert result.output.strip() == "defect: [0, 0, 0, 0] (exact)"


def test_file_input(cli, runner, tmp_path):
    path = tmp_path / "a.arr"
    path.write_text("dim 2\nform 1 0\nform 0 1\nform 1 1\n")
    result = runner.invoke(cli, ["hilbert", "--file", str(path), "-k", "0"])
    assert "[1, 2, 3, 1]" in result.output


def test_format_errors_exit_2(cli, runner, tmp_path):
    path = tmp_path / "bad.arr"
    path.write_text("dim 2\nform 0 0\n")
    result = runner.invoke(cli, ["rho", "--file", str(path)])
    assert result.exit_code == 2
    assert "error: line 2: zero form" in result.output


def test_undecodable_file_exits_2(cli, runner, tmp_path):
    path = tmp_path / "latin1.arr"
    path.write_bytes(b"dim 2\nform 1 0 # \xe9\n")
    result = runner.invoke(cli, ["rho", "--file", str(path)])
    assert result.exit_code == 2
    assert "not a UTF-8 text file" in result.output
    assert result.exception is None or isinstance(result.exception, SystemExit)


def test_non_ascii_dimension_exits_2(cli, runner, tmp_path):
    path = tmp_path / "superscript.arr"
    path.write_text("dim ²\nform 1 0\n", encoding="utf-8")
    result = runner.invoke(cli, ["rho", "--file", str(path)])
    assert result.exit_code == 2
    assert "error: line 1: expected 'dim <positive integer>'" in result.output


def test_inadmissible_k_as_json(cli, runner):
    result = runner.invoke(cli, ["--json", "hilbert", "--builtin", "prop1", "-k", "-9"])
    assert result.exit_code == 2
    assert "k >= -(rho+1)" in json.loads(result.output)["error"]


def test_source_is_required(cli, runner):
    result = runner.invoke(cli, ["rho"])
    assert result.exit_code == 2
    assert "exactly one of --file and --builtin" in result.output


def test_verify_prop1(cli, runner):
    result = runner.invoke(cli, ["verify", "prop1"])
    assert result.exit_code == 0, result.output
    assert result.output.startswith("== prop1: PASS")


def test_verify_json_is_stable(cli, runner):
    first = runner.invoke(cli, ["verify", "prop2", "-m", "3", "--seed", "1", "--json"])
    second = runner.invoke(cli, ["verify", "prop2", "-m", "3", "--seed", "1", "--json"])
    assert first.exit_code == 0
    assert first.output == second.output
    assert json.loads(first.output)["verdict"] == "pass"


def test_verify_rejects_small_pencils(cli, runner):
    result = runner.invoke(cli, ["verify", "prop3", "-m", "1"])
    assert result.exit_code == 2


def test_failed_verdict_exits_1(cli, runner, monkeypatch):
    def failing(name, m, seed):
        report = ScenarioReport(name, {"m": m, "seed": seed})
        report.expect("impossible", 1, 0)
        return report

    monkeypatch.setattr("powerideals.verify.commands.run_scenario", failing)
    result = runner.invoke(cli, ["verify", "prop1"])
    assert result.exit_code == 1
    assert "[FAIL] impossible" in result.output
