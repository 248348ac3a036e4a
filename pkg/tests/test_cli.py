import json
import subprocess
import sys

import pytest

from arbordyn.cli import main, render, run, schema_validate

COMMANDS = [
    ["orbit", "x^2+t", "--depth", "3"],
    ["orbit", "(x-t)^2+t+1", "--mod", "3", "--depth", "4"],
    ["insep", "x^2-t^3", "--mod", "3"],
    ["zsig", "x^2+t", "--mod", "3", "--depth", "6"],
    ["bound", "x^2+t", "--mod", "5"],
    ["bound", "x^2+t"],
    ["global-bound", "x^2+t"],
    ["stoll", "x^2+t", "--mod", "5", "--depth", "4"],
    ["stoll", "(x+t)^2+1", "--depth", "1", "--mode", "arithmetic"],
    ["jones", "--depth", "3", "--prime-cap", "50"],
    ["ms-check", "--mod", "7", "--count", "50", "--seed", "3"],
    ["ms-check", "--mod", "5", "--", "(t+1)^2", "-t^2-2*t"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a))
def test_reports_validate_and_are_deterministic(argv, capsys):
    code, report = run(argv)
    assert code == 0
    ok = schema_validate(report)
    assert ok, ok.reason
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first
    assert first == render(report)


def test_orbit_output():
    _, rep = run(["orbit", "x^2+t", "--depth", "3"])
    assert rep["orbit"] == ["-t", "t^2+t", "t^4+2*t^3+t^2+t"]


def test_bound_output():
    _, rep = run(["bound", "x^2+t", "--mod", "5"])
    assert (rep["A"], rep["B"]) == (8, 144)


def test_zsig_output():
    _, rep = run(["zsig", "x^2+t", "--mod", "3", "--depth", "6"])
    assert rep["members"] == []


def test_parse_failure_exits_1_with_usage(capsys):
    assert main(["orbit", "x^2+*t"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("usage: arbordyn") and "position" in err
    assert main(["frobnicate"]) == 1
    assert main(["orbit", "x^2+t", "--mod", "4"]) == 1


def test_precondition_exits_2(capsys):
    code, rep = run(["insep", "x^2+t"])
    assert code == 2
    assert rep["error"]["type"] == "PreconditionError"
    assert schema_validate(rep)
    assert run(["stoll", "(x-t)^2", "--mod", "5"])[0] == 2


def test_incomplete_jones_exits_3(capsys):
    code, rep = run(["jones", "--depth", "6", "--factor-effort", "1", "--ecm-stages", "0", "--prime-cap", "3"])
    assert code == 3
    assert rep["complete"] is False
    assert schema_validate(rep)


def test_out_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["bound", "x^2+t", "--mod", "7", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["B"] == 144


def test_schema_rejects_tampered_reports():
    _, rep = run(["stoll", "x^2+t", "--mod", "5", "--depth", "4"])
    broken = dict(rep)
    del broken["rank"]
    assert not schema_validate(broken)
    old = dict(rep, schema_version="0")
    res = schema_validate(old)
    assert not res and "version mismatch" in res.reason


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "arbordyn.cli", "orbit", "x^2+t", "--depth", "2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["orbit"] == ["-t", "t^2+t"]
