from __future__ import annotations

import json
import re

import pytest
from typer.testing import CliRunner

from pclattice.cli import app
from pclattice.patterns import harness
from pclattice.reporters.models import AnalysisReport, report_from_json

runner = CliRunner()


def _dot_counts(text: str):
    return (len(re.findall(r"^\s+n\d+ \[label=", text, flags=re.MULTILINE)),
            len(re.findall(r"^\s+n\d+ -> n\d+;", text, flags=re.MULTILINE)))


def test_no_command_prints_hint():
    result = runner.invoke(app, [])
    assert result.exit_code == 0
    assert "--help" in result.stdout


def test_gen_and_check_m3(tmp_path):
    path = tmp_path / "m3.json"
    result = runner.invoke(app, ["gen", "M3", "-o", str(path)])
    assert result.exit_code == 0, result.stdout
    assert json.loads(path.read_text())["size"] == 5

    result = runner.invoke(app, ["check", str(path), "--json", "--witness"])
    assert result.exit_code == 0
    report = report_from_json(result.stdout)
    assert report.holds("modular")
    assert not report.holds("distributive")
    assert not report.holds("pseudocomplemented")
    assert not report.holds("no_zero_sublattice")
    assert report.condition("no_zero_sublattice").detail == "M3"
    assert report.agreement


def test_check_human_output(lattice_file):
    path = lattice_file({"size": 2, "covers": [[0, 1]]}, "chain2.json")
    result = runner.invoke(app, ["check", str(path)])
    assert result.exit_code == 0
    assert "chain2.json" in result.stdout
    assert "agree" in result.stdout


def test_check_cycle_exits_2(lattice_file):
    path = lattice_file({"size": 3, "covers": [[0, 1], [1, 2], [2, 0]]})
    result = runner.invoke(app, ["check", str(path)])
    assert result.exit_code == 2
    assert "NotAPoset" in result.stdout


def test_check_malformed_json_exits_2(lattice_file):
    path = lattice_file("{not json")
    result = runner.invoke(app, ["check", str(path)])
    assert result.exit_code == 2


def test_check_not_a_lattice_exits_2(lattice_file):
    path = lattice_file({"size": 4, "covers": [[0, 2], [1, 2], [2, 3]]})
    result = runner.invoke(app, ["check", str(path)])
    assert result.exit_code == 2
    assert "NoBoundedStructure" in result.stdout


def test_group_klein_four(tmp_path):
    dot = tmp_path / "v4.dot"
    result = runner.invoke(app, ["group", "2,2", "--json", "--dot", str(dot)])
    assert result.exit_code == 0
    report = report_from_json(result.stdout)
    keys = ("distributive", "cyclic", "pseudocomplemented", "no_zero_sublattice", "no_subgroup_triple")
    assert [report.holds(key) for key in keys] == [False] * 5
    assert report.agreement
    assert _dot_counts(dot.read_text()) == (5, 6)


def test_group_prime_order():
    result = runner.invoke(app, ["group", "7", "--json"])
    assert result.exit_code == 0
    report = report_from_json(result.stdout)
    assert all(result.holds for result in report.conditions)


def test_group_order_bound():
    result = runner.invoke(app, ["group", "8,8,8,8"])
    assert result.exit_code == 2
    assert "OrderTooLarge" in result.stdout


def test_group_bad_factor():
    result = runner.invoke(app, ["group", "2,one"])
    assert result.exit_code == 2


def test_gen_requires_one_source():
    assert runner.invoke(app, ["gen"]).exit_code == 2
    assert runner.invoke(app, ["gen", "M3", "--divisors", "12"]).exit_code == 2


def test_gen_divisors_and_random():
    result = runner.invoke(app, ["gen", "--divisors", "12"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["labels"] == ["1", "2", "3", "4", "6", "12"]

    first = runner.invoke(app, ["gen", "--random", "--size", "20", "--seed", "3"]).stdout
    second = runner.invoke(app, ["gen", "--random", "--size", "20", "--seed", "3"]).stdout
    assert first == second
    assert json.loads(first)["size"] == 20


def test_gen_unknown_fixture():
    result = runner.invoke(app, ["gen", "M7"])
    assert result.exit_code == 2


def test_export_dot(tmp_path):
    src = tmp_path / "m23.json"
    runner.invoke(app, ["gen", "M23", "-o", str(src)])
    result = runner.invoke(app, ["export", str(src), "--format", "dot"])
    assert result.exit_code == 0
    assert _dot_counts(result.stdout) == (7, 9)

    out = tmp_path / "chain.dot"
    chain = tmp_path / "chain.json"
    runner.invoke(app, ["gen", "chain(4)", "-o", str(chain)])
    assert runner.invoke(app, ["export", str(chain), "-o", str(out)]).exit_code == 0
    assert _dot_counts(out.read_text()) == (4, 3)


def test_export_unknown_format(tmp_path):
    src = tmp_path / "m3.json"
    runner.invoke(app, ["gen", "M3", "-o", str(src)])
    assert runner.invoke(app, ["export", str(src), "--format", "png"]).exit_code == 2


def test_corpus_exhaustive():
    result = runner.invoke(app, ["corpus", "--max-size", "5", "--json"])
    assert result.exit_code == 0
    summary = json.loads(result.stdout)
    assert summary["total"] == 10
    assert summary["violations"] == 0


def test_corpus_divisors_only():
    result = runner.invoke(app, ["corpus", "--divisors", "100", "--json"])
    assert result.exit_code == 0
    summary = json.loads(result.stdout)
    assert summary["total"] == 100
    assert summary["pseudocomplemented"] == 100


def test_corpus_random_is_deterministic():
    args = ["corpus", "--random", "30", "--size", "12", "--seed", "7", "--json"]
    first = json.loads(runner.invoke(app, args).stdout)
    second = json.loads(runner.invoke(app, args).stdout)
    first.pop("elapsed_ms")
    second.pop("elapsed_ms")
    assert first == second


def test_corpus_out_of_range():
    result = runner.invoke(app, ["corpus", "--max-size", "9"])
    assert result.exit_code == 2


def test_corpus_violation_exits_1(tmp_path, monkeypatch):
    real = harness.theorem1_report

    def disagreeing(lattice, subject="lattice") -> AnalysisReport:
        report = real(lattice, subject=subject)
        return report.model_copy(update={"agreement": False, "in_hypothesis": True})

    monkeypatch.setattr(harness, "theorem1_report", disagreeing)
    dump = tmp_path / "failures.json"
    result = runner.invoke(app, ["corpus", "--max-size", "3", "--dump", str(dump)])
    assert result.exit_code == 1
    entries = json.loads(dump.read_text())
    assert [entry["name"] for entry in entries] == ["size1#0", "size2#0", "size3#0"]
    assert entries[0]["lattice"]["size"] == 1


def test_store_and_history(tmp_path):
    db = tmp_path / "history.db"
    src = tmp_path / "m3.json"
    runner.invoke(app, ["gen", "M3", "-o", str(src)])
    assert runner.invoke(app, ["check", str(src), "--store", "--db", str(db)]).exit_code == 0
    assert runner.invoke(app, ["group", "2,4", "--store", "--db", str(db)]).exit_code == 0

    result = runner.invoke(app, ["history", "--db", str(db), "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["stats"]["total_reports"] == 2
    assert {r["kind"] for r in payload["reports"]} == {"lattice", "group"}

    report_id = next(r["report_id"] for r in payload["reports"] if r["kind"] == "lattice")
    shown = runner.invoke(app, ["history", "--db", str(db), "--show", report_id, "--json"])
    assert report_from_json(shown.stdout).subject == "m3.json"


@pytest.mark.parametrize("command", ["check", "export"])
def test_invalid_utf8_file_exits_2(tmp_path, command):
    path = tmp_path / "latin1.json"
    path.write_bytes(b'{"size": 2, "covers": [[0, 1]], "labels": ["\xff", "x"]}')
    result = runner.invoke(app, [command, str(path)])
    assert result.exit_code == 2
    assert "UTF-8" in result.stdout


def test_corpus_modular_only():
    result = runner.invoke(app, ["corpus", "--modular", "25", "--size", "16", "--seed", "2", "--json"])
    assert result.exit_code == 0
    summary = json.loads(result.stdout)
    assert summary["total"] == summary["modular"] == 25
    assert summary["by_source"] == {"modular": 25}
    assert summary["violations"] == 0
