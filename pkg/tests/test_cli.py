import json

import pytest
from click.testing import CliRunner

from mmph.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_validate_corpus_entry(runner):
    result = runner.invoke(main, ["validate", "corpus:peres-57-40"])
    assert result.exit_code == 0
    assert "ok" in result.output


def test_validate_order_two_loop_exits_3(runner):
    result = runner.invoke(main, ["validate", "12,21."])
    assert result.exit_code == 3
    assert "duplicate-edge" in result.output or "overlap" in result.output


def test_validate_missing_file_exits_1(runner):
    result = runner.invoke(main, ["validate", "/no/such/file"])
    assert result.exit_code == 1


def test_validate_parse_error_exits_2(runner):
    result = runner.invoke(main, ["validate", "-"], input="12,2")
    assert result.exit_code == 2


def test_validate_stdin(runner):
    result = runner.invoke(main, ["validate", "-"], input="12,23,34,45,51.\n")
    assert result.exit_code == 0


def test_analyze_literal(runner):
    result = runner.invoke(main, ["analyze", "123."])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["schema"] == "mmph-report/1"
    assert report["binary"]["is_binary"] is True
    assert report["indices"]["hi_c"] == 1


def test_analyze_yu_oh_full(runner):
    result = runner.invoke(
        main,
        ["analyze", "corpus:yu-oh-13-16", "--coords", "corpus", "--operators", "--critical", "--loops"],
    )
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["indices"]["hi_c"] == 4
    assert report["indices"]["hi_q"] == "17/3"
    assert report["operators"]["scalar_value"] == "25/3"
    assert report["operators"]["max_classical"] == "8"
    assert report["operators"]["verdict"] == "greater"
    assert report["loops"]["shortest"] == 5


def test_analyze_pentagon_critical(runner):
    result = runner.invoke(main, ["analyze", "corpus:pentagon-5-5", "--critical"])
    report = json.loads(result.output)
    assert report["binary"]["is_binary"] is False
    assert report["critical"]["is_critical"] is True
    assert report["parity_proof"] is True


def test_analyze_operators_need_coords(runner):
    result = runner.invoke(main, ["analyze", "123.", "--operators"])
    assert result.exit_code == 4


def test_corpus_list(runner):
    result = runner.invoke(main, ["corpus", "list"])
    assert result.exit_code == 0
    lines = [line for line in result.output.splitlines() if line.strip()]
    assert len(lines) >= 40
    assert any("peres-57-40" in line for line in lines)


def test_corpus_show(runner):
    result = runner.invoke(main, ["corpus", "show", "pentagon-5-5"])
    assert result.exit_code == 0
    assert "12,23,34,45,51." in result.output


def test_corpus_show_unknown(runner):
    result = runner.invoke(main, ["corpus", "show", "nope"])
    assert result.exit_code == 1


def test_fill_and_strip(runner):
    result = runner.invoke(main, ["fill", "12,23,34,45,51."])
    assert result.exit_code == 0
    assert result.output.strip() == "126,237,348,459,51A."
    result = runner.invoke(main, ["strip", "corpus:yu-oh-25-16"])
    assert result.output.strip() == "13,35,57,79,9AB,BD,DF,FH,H1,1JK,KLA,5LF,JD,J7,3B,H9."


def test_strip_vertices_flags(runner):
    result = runner.invoke(main, ["strip", "corpus:ck-13-10", "--vertices", "D"])
    assert result.exit_code == 0
    assert result.output.strip() == "12,234,45,56,678,89,9A1,ABC,3B7,C5."
    # deleting a shared vertex needs --force
    result = runner.invoke(main, ["strip", "corpus:ck-13-10", "--vertices", "B"])
    assert result.exit_code == 4
    result = runner.invoke(
        main, ["strip", "corpus:ck-13-10", "--vertices", "B", "--force"]
    )
    assert result.exit_code == 0
    # with or without --force, a doublet may never drop below two vertices
    result = runner.invoke(
        main, ["strip", "12,23,34,45,51.", "--vertices", "3", "--force"]
    )
    assert result.exit_code == 4


def test_coords_verify(runner):
    result = runner.invoke(main, ["coords", "verify", "corpus:pentagon-10-5"])
    assert result.exit_code == 0
    assert "ok" in result.output


def test_coords_verify_partial(runner):
    result = runner.invoke(
        main, ["coords", "verify", "corpus:peres-57-40", "--partial"]
    )
    assert result.exit_code == 0


def test_coords_find_pentagon(runner):
    result = runner.invoke(
        main,
        ["coords", "find", "corpus:pentagon-5-5", "--components", "0,1,-1,2,-2"],
    )
    assert result.exit_code == 0
    assert "=" in result.output and "{" in result.output


def test_coords_find_triangle_exhausted(runner):
    result = runner.invoke(
        main,
        ["coords", "find", "12,23,31.", "--components", "0,1,-1,2,-2,r2,-r2"],
    )
    assert result.exit_code == 4
    assert "exhausted" in result.output


def test_coords_find_budget(runner):
    result = runner.invoke(
        main,
        [
            "coords", "find", "corpus:bub-14-13",
            "--components", "0,1,-1,2,-2", "--budget", "3",
        ],
    )
    assert result.exit_code == 5


def test_loops_command(runner):
    result = runner.invoke(main, ["loops", "corpus:pentagon-5-5", "--mark"])
    assert result.exit_code == 0
    assert "shortest: 5" in result.output
    assert "largest: 5" in result.output
    assert "12,23,34,45,51,,,." in result.output


def test_criticals_deterministic(runner, tmp_path):
    args = [
        "criticals", "corpus:bub-33-36",
        "--samples", "6", "--seed", "11", "--sets", "-",
    ]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == 0
    assert first.output == second.output
    assert first.output.startswith("k,l,count\n")


def test_criticals_writes_files(runner, tmp_path):
    csv_path = tmp_path / "dist.csv"
    sets_path = tmp_path / "sets.txt"
    result = runner.invoke(
        main,
        [
            "criticals", "corpus:bub-33-36",
            "--samples", "4", "--seed", "2",
            "--out", str(csv_path), "--sets", str(sets_path),
        ],
    )
    assert result.exit_code == 0
    assert csv_path.read_text().startswith("k,l,count\n")
    for line in sets_path.read_text().splitlines():
        assert line.endswith(".")


def test_criticals_binary_master_exits_4(runner):
    result = runner.invoke(
        main, ["criticals", "123.", "--samples", "1", "--seed", "0"]
    )
    assert result.exit_code == 4
