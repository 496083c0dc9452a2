"""Command-line interface: outputs and exit codes."""

import json

import pytest
from click.testing import CliRunner

from src import config
from src.main import EXIT_BAD_INPUT, EXIT_CAP, cli

INSERTED_TABLEAU = [[1, 1, 2, 2, 4], [3, 3, 3, 4], [4, 4, 5, 5], [5, 5]]


@pytest.fixture
def runner(monkeypatch):
    # --max-diagrams writes to the config module
    monkeypatch.setattr(config, "MAX_DIAGRAMS", config.MAX_DIAGRAMS)
    return CliRunner()


def run_json(runner, *args):
    result = runner.invoke(cli, ["--format", "json", *args])
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_keypoly(runner):
    result = runner.invoke(cli, ["keypoly", "3"])
    assert result.exit_code == 0
    assert result.output.strip() == "x1^3"


def test_keypoly_json(runner):
    assert run_json(runner, "keypoly", "0,1") == [
        {"coeff": 1, "exp": [1, 0]},
        {"coeff": 1, "exp": [0, 1]},
    ]


def test_bad_composition_exits_2(runner):
    result = runner.invoke(cli, ["keypoly", "1,-2"])
    assert result.exit_code == EXIT_BAD_INPUT
    assert "negative" in result.output


def test_cap_exits_3(runner):
    result = runner.invoke(cli, ["--max-diagrams", "2", "kd", "0,3,2"])
    assert result.exit_code == EXIT_CAP


def test_nonpositive_cap_is_rejected(runner):
    result = runner.invoke(cli, ["--max-diagrams", "0", "keypoly", "3"])
    assert result.exit_code == EXIT_BAD_INPUT


def test_kd(runner):
    data = run_json(runner, "kd", "0,3,2")
    assert data["count"] == 9
    result = runner.invoke(cli, ["kd", "0,3,2", "--show"])
    assert result.output.startswith("KD(0,3,2): 9 diagrams")
    assert result.output.count(" 3 |") == 9


def test_kd_target(runner):
    data = run_json(runner, "kd", "0,3,2", "--target", "1")
    assert data["generators"] == [[1, 3, 2], [3, 3, 0], [4, 0, 2]]
    assert data["count"] == 9


def test_pieri_formula_and_oracle_agree(runner):
    data = run_json(runner, "pieri", "4,1,5,0,4", "--k", "3")
    assert len(data) == 5
    assert {"coeff": -1, "index": [5, 4, 5, 0, 1]} in data


def test_pieri_degree_two(runner):
    data = run_json(runner, "pieri", "2,0,3,2", "--k", "3", "--m", "2")
    assert len(data) == 9
    assert sum(t["coeff"] for t in data) == 5


def test_pieri_maximal(runner):
    data = run_json(runner, "pieri", "4,1,5,0,4", "--k", "3", "--mode", "formula", "--maximal")
    assert all(t["coeff"] == 1 for t in data)
    assert len(data) == 4


def test_pieri_nonneg(runner):
    data = run_json(runner, "pieri", "1,4,0,3", "--k", "1", "--m", "2", "--mode", "nonneg")
    assert sorted(t["index"] for t in data) == [[3, 4, 0, 3], [4, 4, 0, 2], [5, 2, 0, 3], [5, 4, 0, 1], [6, 1, 0, 3]]


def test_pieri_unsupported_case_exits_2(runner):
    result = runner.invoke(cli, ["pieri", "1,4,0,3", "--k", "2", "--mode", "nonneg"])
    assert result.exit_code == EXIT_BAD_INPUT


def test_pieri_formula_needs_degree_one(runner):
    result = runner.invoke(cli, ["pieri", "1,4,0,3", "--k", "2", "--m", "2", "--mode", "formula"])
    assert result.exit_code == EXIT_BAD_INPUT


def test_expand(runner):
    result = runner.invoke(cli, ["expand", "0,1", "--times-schur", "1", "--k", "1"])
    assert result.exit_code == 0
    assert result.output.strip() == "k[2,0] + k[1,1]"
    data = run_json(runner, "expand", "--terms", '[{"coeff": 1, "exp": [1, 1]}]')
    assert data == [{"coeff": 1, "index": [1, 1]}]


def test_expand_needs_input(runner):
    assert runner.invoke(cli, ["expand"]).exit_code == EXIT_BAD_INPUT


def test_rsk(runner):
    tableau = json.dumps([[1, 1, 2, 3, 4], [3, 3, 4, 4], [4, 5, 5, 5], [5]])
    data = run_json(runner, "rsk", "--tableau", tableau, "--value", "2", "--n", "5")
    assert data["tableau"] == INSERTED_TABLEAU
    assert data["new_cell"] == [4, 2]
    assert data["rectification_agrees"] is True


def test_rsk_rejects_out_of_range_value(runner):
    result = runner.invoke(cli, ["rsk", "--tableau", "[[1]]", "--value", "3", "--n", "2"])
    assert result.exit_code == EXIT_BAD_INPUT


def test_verify_list(runner):
    result = runner.invoke(cli, ["verify", "--list"])
    assert result.exit_code == 0
    assert "stratum-roundtrip" in result.output
    assert "quick" in result.output


def test_verify_suite(runner):
    result = runner.invoke(cli, ["verify", "--suite", "lswap-consistency", "--n-max", "2", "--size-max", "2"])
    assert result.exit_code == 0, result.output
    assert result.output.startswith("[PASS] lswap-consistency")


def test_verify_rejects_unknown_suite(runner):
    assert runner.invoke(cli, ["verify", "--suite", "nope"]).exit_code == EXIT_BAD_INPUT
    assert runner.invoke(cli, ["verify"]).exit_code == EXIT_BAD_INPUT


def test_verify_record_and_history(runner):
    result = runner.invoke(
        cli, ["verify", "--suite", "monkey-identity", "--n-max", "2", "--size-max", "2", "--record"]
    )
    assert result.exit_code == 0, result.output
    runs = run_json(runner, "history")
    assert len(runs) == 1
    assert runs[0]["suite"] == "monkey-identity"
    assert runs[0]["passed"] is True


def test_history_when_empty(runner):
    result = runner.invoke(cli, ["history"])
    assert result.exit_code == 0
    assert "No runs recorded." in result.output
