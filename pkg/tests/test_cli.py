import json
import subprocess
import sys

import pytest

from steinberg.cli import main, run


def ok(argv):
    code, out = run(argv)
    assert code == 0, out
    return out


def test_documented_examples():
    assert ok(["sp", "A1", "--J", ""]) == '{"coeffs":[0,1,1]}'
    assert ok(["st", "A1", "--J1", "", "--J2", ""]) == '{"coeffs":[0,2,2]}'
    assert ok(["sp", "A2", "--J", "1", "--format", "text"]) == "q^6+q^5+q^4"
    assert json.loads(ok(["st", "GL3", "--J1", "1", "--J2", "2"]))["coeffs"][-1] > 0
    assert ok(["trip", "GL2", "--mu", "-1,0", "--J0", "", "--Jinf", ""]) == '{"coeffs":[0,0,4]}'
    assert ok(["verify", "--suite", "mellit", "--n", "1", "--tmax", "3"]).splitlines()[-1] == "PASS"
    out = ok(["oracle", "--n", "2", "--q", "2", "--what", "st", "--types", "full,full"])
    assert "12" in out and out.splitlines()[-1] == "PASS"


def test_tables_and_formats():
    table = json.loads(ok(["st", "A2"]))
    assert set(table) == {f"{a},{b}" for a in range(4) for b in range(4)}
    assert json.loads(ok(["sp", "B2"]))["3"] == {"coeffs": [0, 0, 0, 0, 0, 0, 0, 0, 1]}
    text = ok(["trip", "GL2", "--mu", "-1,0", "--format", "text"])
    assert "4*q^2" in text and "dim Aut = 4" in text
    assert ok(["trip", "B2", "--mu", "a:-1,0", "--J0", "all", "--Jinf", "2"])


def test_omega():
    out = json.loads(ok(["omega", "--n", "2", "--tmax", "3", "--check-exp"]))
    assert out["verdict"] == "PASS" and out["omega"] == out["exp"]
    text = ok(["omega", "--n", "1", "--tmax", "2", "--format", "text"])
    assert "t^2" in text


def test_oracle_variants():
    out = json.loads(ok(["oracle", "--n", "2", "--q", "3", "--what", "trip", "--mu", "-2,0", "--types", "full,trivial", "--format", "json"]))
    assert out["oracle"] == out["formula"] and out["verdict"] == "PASS"
    assert ok(["oracle", "--n", "2", "--q", "3", "--what", "group", "--det1"]).splitlines()[0].split()[-1] == "24"
    assert ok(["oracle", "--n", "3", "--q", "2", "--what", "sp", "--types", "2"]).endswith("PASS")
    assert ok(["oracle", "--n", "2", "--q", "2", "--what", "nilcone"]).endswith("PASS")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["sp", "Q2"],
        ["sp", "E8", "--J", ""],
        ["sp", "A2", "--J", "3"],
        ["sp", "A2", "--J", "x"],
        ["st", "A2", "--J1", "1"],
        ["trip", "GL2", "--mu", "0,-1"],
        ["trip", "GL2", "--mu", "-1,0,0"],
        ["trip", "B2", "--mu", "-1,0"],
        ["sp", "A2", "--unknown"],
        ["oracle", "--n", "2", "--q", "5", "--what", "sp"],
        ["oracle", "--n", "3", "--q", "3", "--what", "trip", "--mu", "-3,-1,0"],
        ["verify", "--suite", "nope"],
    ],
)
def test_usage_errors_exit_1(argv):
    code, out = run(argv)
    assert code == 1 and out.startswith("error:")


def test_verification_failure_exit_2(monkeypatch):
    from steinberg import cli
    from steinberg.verify import CheckResult

    monkeypatch.setattr(cli, "run_suite", lambda name, **kw: [CheckResult(name, False, 1, ["boom"])])
    code, out = run(["verify", "--suite", "hnq"])
    assert code == 2 and "FAIL" in out


def test_output_is_stable_and_out_file(tmp_path):
    argv = ["st", "B2", "--format", "json"]
    assert ok(argv) == ok(argv)
    target = tmp_path / "st.json"
    code, out = run(argv + ["--out", str(target)])
    assert code == 0 and out == ""
    assert target.read_text().strip() == ok(argv)


def test_main_returns_code(capsys):
    assert main(["sp", "A1", "--J", "1"]) == 0
    assert capsys.readouterr().out.strip() == '{"coeffs":[0,0,1]}'


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "steinberg.cli", "sp", "A1", "--J", ""],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == '{"coeffs":[0,1,1]}'
