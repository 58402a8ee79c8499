import json
import subprocess
import sys

import pytest

from gkm_cherednik import cli


def run_json(argv, tmp_path, name="out.json"):
    out = tmp_path / name
    code = cli.run(argv + ["--out", str(out)])
    return code, json.loads(out.read_text())


def strip(report):
    if isinstance(report, dict):
        return {k: strip(v) for k, v in report.items() if k != "elapsed_ms"}
    if isinstance(report, list):
        return [strip(v) for v in report]
    return report


def test_relations_example(tmp_path):
    code, rep = run_json(["relations", "--type", "A", "--rank", "1", "-d", "1", "--samples", "50"], tmp_path)
    assert code == 0 and rep["ok"]
    assert set(rep) >= {"command", "config", "conventions", "checks", "elapsed_ms"}
    for c in rep["checks"]:
        assert set(c) >= {"name", "status", "details"}


def test_alcoves_example(tmp_path):
    code, rep = run_json(["alcoves", "--type", "G", "--rank", "2", "-d", "1"], tmp_path)
    assert code == 0
    assert (rep["count"], rep["expected"]) == (49, 49)


def test_character_example(tmp_path):
    code, rep = run_json(["character", "--type", "A", "--rank", "1", "-d", "1"], tmp_path)
    assert code == 0
    assert (rep["dim"], rep["invariants"]) == (3, 2)


@pytest.mark.parametrize("argv", [
    ["sl2-basis", "--type", "A", "--rank", "1", "-d", "1..2", "--samples", "10"],
    ["upsilon", "--type", "A", "--rank", "2", "-d", "0..1", "--samples", "3"],
    ["classes", "--type", "A", "--rank", "1", "-d", "0..2"],
    ["dunkl", "--type", "A", "--rank", "1"],
])
def test_commands_pass(argv, tmp_path):
    code, rep = run_json(argv, tmp_path)
    assert code == 0 and rep["ok"] and rep["checks"]


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["alcoves", "--type", "E", "--rank", "2"],
    ["alcoves", "--type", "A", "--rank", "1", "-d", "3..1"],
    ["alcoves", "--type", "G", "--rank", "3"],
    ["sl2-basis", "--type", "A", "--rank", "2"],
    ["alcoves", "--type", "A", "--rank", "1", "-d", "x"],
])
def test_usage_errors(argv, capsys):
    assert cli.run(argv) == 2
    assert capsys.readouterr().err


def test_failure_exit_code(tmp_path, monkeypatch, capsys):
    def broken(cfg, out):
        out.append({"name": "forced", "status": "fail", "details": {}, "witness": {"why": "test"}})
    monkeypatch.setitem(cli.RUNNERS, "character", broken)
    code, rep = run_json(["character", "--type", "A", "--rank", "1", "-d", "0..1"], tmp_path)
    assert code == 1 and not rep["ok"]
    assert "FAIL forced" in capsys.readouterr().err


def test_determinism(tmp_path):
    argv = ["upsilon", "--type", "A", "--rank", "1", "-d", "0..2", "--samples", "5", "--seed", "11"]
    _, a = run_json(argv, tmp_path, "a.json")
    _, b = run_json(argv, tmp_path, "b.json")
    assert strip(a) == strip(b)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gkm_cherednik", "character", "--type", "A",
                           "--rank", "2", "-d", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dim"] == 16
