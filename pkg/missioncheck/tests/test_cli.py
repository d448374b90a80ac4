import json

from missioncheck import cli


def test_usage(capsys):
    assert cli.main([]) == 2
    assert cli.main(["-h"]) == 0
    assert capsys.readouterr().out.startswith("usage: missioncheck")


def test_unknown_command(capsys):
    assert cli.main(["simulate"]) == 2
    assert "unknown command 'simulate'" in capsys.readouterr().err


def test_mission_verify(tmp_path, capsys):
    assert cli.main(["mission", "verify", "--grid", "2", "--all", "--out-dir", str(tmp_path)]) == 0
    assert "SPEC S5 AG (!(choice_no_free_cell)) : FALSE" in capsys.readouterr().out
    assert (tmp_path / "S5.trace.json").exists()


def test_check_violation_exit_status(tmp_path, capsys):
    model = tmp_path / "loop.kmv"
    model.write_text("state s0 p\nstate s1\ninit s0\nedge s0 s1\nedge s1 s0\n", encoding="utf-8")
    assert cli.main(["check", str(model), "--spec", "AG p", "--out-dir", str(tmp_path), "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["results"][0]["verdict"] == "FALSE"
    assert (tmp_path / "F1.trace.json").exists()


def test_check_input_errors(tmp_path, capsys):
    assert cli.main(["check", str(tmp_path / "missing.kmv"), "--spec", "AG p"]) == 2
    assert "missing.kmv" in capsys.readouterr().err
    model = tmp_path / "one.kmv"
    model.write_text("state s0 p\ninit s0\nedge s0 s0\n", encoding="utf-8")
    assert cli.main(["check", str(model), "--spec", "AG (p"]) == 2


def test_argument_error(capsys):
    assert cli.main(["mission", "verify", "--grid", "two"]) == 2
    assert "--grid" in capsys.readouterr().err


def test_dubins(capsys):
    assert cli.main(["dubins", "--start", "0,0,0", "--end", "100,0,0", "--step", "50"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert rows[-1] == "100.000000,100.000000,0.000000,0.000000"
