import csv
import json

import pytest

from planepuzzle.analysis import CheckResult
from planepuzzle.cli import main


def test_verify_pass_exit_zero(capsys):
    assert main(["verify", "--q", "5", "--checks", "lemma2,lemma3iv"]) == 0
    out = capsys.readouterr().out
    assert "lemma2" in out and "PASS" in out


def test_verify_invalid_q_exit_two(capsys):
    assert main(["verify", "--q", "4"]) == 2
    assert "error" in capsys.readouterr().err


def test_verify_unknown_check_exit_two():
    assert main(["verify", "--q", "5", "--checks", "nope"]) == 2


def test_verify_failure_exit_one(monkeypatch, capsys):
    from planepuzzle import cli

    def fake_verify(q, which, alpha=0):
        return [CheckResult("lemma2", False, detail="forced failure",
                            counterexample={"beta": 1})]

    monkeypatch.setattr(cli, "verify", fake_verify)
    assert main(["verify", "--q", "5"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "counterexample" in out


def test_analyze_q3_with_json(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    assert main(["analyze", "--q", "3", "--json", str(out_path)]) == 0
    printed = capsys.readouterr().out
    assert "95040" in printed and "other" in printed
    data = json.loads(out_path.read_text())
    assert data["order"] == "95040"
    assert data["q"] == 3 and data["primitive"] is True


def test_cycle_table_output(capsys):
    assert main(["cycle-table", "--q", "5,7"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "q\tcycle_type"
    assert lines[1] == "5\t1^1.4^1"
    assert lines[2] == "7\t7^1"


def test_cycle_table_invalid_q():
    assert main(["cycle-table", "--q", "3"]) == 2
    assert main(["cycle-table", "--q", "5,x"]) == 2


def test_report_writes_figures_and_csv(tmp_path, capsys):
    out_dir = tmp_path / "rep"
    assert main(["report", "--q", "3,5", "--out-dir", str(out_dir)]) == 0
    files = {p.name for p in out_dir.iterdir()}
    assert {"analysis.csv", "cycle_table.csv", "board_q3.png",
            "board_q5.png", "cycle_types.png"} <= files
    with (out_dir / "analysis.csv").open() as fh:
        rows = list(csv.DictReader(fh))
    assert rows[0]["q"] == "3" and rows[0]["order"] == "95040"
    assert rows[1]["tag"] == "symmetric"
    with (out_dir / "cycle_table.csv").open() as fh:
        table = list(csv.DictReader(fh))
    assert table == [{"q": "5", "cycle_type": "1^1.4^1"}]
