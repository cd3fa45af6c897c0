import json
import subprocess
import sys

import pytest

from ramanujan_traces.cli import fmt_rational, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_trace_text(capsys):
    code, out = run(capsys, "trace", "--series", "u", "--t", "3")
    assert code == 0
    assert out.strip() == "U_6 = 16/9*E6 - 14/3*E2*E4 + 35/9*E2^3"


def test_trace_v0(capsys):
    code, out = run(capsys, "trace", "--series", "v", "--t", "0")
    assert code == 0 and out.strip() == "V_0 = 1"


def test_trace_json_schema(capsys):
    code, data = run_json(capsys, "trace", "--series", "v", "--t", "4")
    assert code == 0
    assert data["series"] == "V" and data["t"] == 4 and data["weight"] == 8
    terms = {tuple(t["partition"]): t["coefficient"] for t in data["terms"]}
    assert terms == {(4,): "-272", (3, 1): "448", (2, 2): "140", (2, 1, 1): "-420", (1, 1, 1, 1): "105"}
    assert [t["partition"] for t in data["terms"]][0] == [4]


def test_reduce(capsys):
    code, data = run_json(capsys, "reduce", "--series", "u", "--t", "2")
    assert code == 0
    assert {(m["l"], m["m"], m["n"]): m["K"] for m in data["monomials"]} == {(2, 0, 0): "5/3", (0, 1, 0): "-2/3"}
    code, data = run_json(capsys, "reduce", "--series", "v", "--t", "3")
    assert len(data["monomials"]) == 3
    code, data = run_json(capsys, "reduce", "--series", "u", "--t", "1")
    assert data["monomials"] == [{"l": 1, "m": 0, "n": 0, "K": "1"}]


def test_reduce_text(capsys):
    code, out = run(capsys, "reduce", "--series", "u", "--t", "2")
    assert "K(2,0,0) = 5/3" in out and "K(0,1,0) = -2/3" in out


def test_qexpand(capsys):
    code, data = run_json(capsys, "qexpand", "--series", "u", "--t", "1", "--order", "3")
    assert code == 0 and data["coeffs"] == ["1", "-24", "-72", "-96"] and data["equal"] is True
    code, data = run_json(capsys, "qexpand", "--series", "v", "--t", "0", "--order", "10")
    assert data["coeffs"] == ["1"] + ["0"] * 10 and data["equal"]
    code, data = run_json(capsys, "qexpand", "--series", "v", "--t", "2", "--order", "20")
    assert data["equal"] and len(data["coeffs"]) == 21


def test_qexpand_default_order_from_env(capsys, monkeypatch):
    monkeypatch.setenv("RAMANUJAN_DEFAULT_ORDER", "7")
    code, data = run_json(capsys, "qexpand", "--series", "u", "--t", "2")
    assert data["order"] == 7 and len(data["coeffs"]) == 8
    monkeypatch.delenv("RAMANUJAN_DEFAULT_ORDER")
    code, data = run_json(capsys, "qexpand", "--series", "u", "--t", "2")
    assert data["order"] == 50


def test_verify_suites(capsys):
    code, out = run(capsys, "verify", "--check", "odes", "--order", "100")
    assert code == 0 and "PASS: 3/3" in out
    code, data = run_json(capsys, "verify", "--check", "main", "--t-max", "8", "--order", "50")
    assert code == 0 and data["passed"] and len(data["results"]) == 16


@pytest.mark.parametrize("check", ["genfun", "products", "lemma", "classical"])
def test_verify_each_check(capsys, check):
    code, data = run_json(capsys, "verify", "--check", check, "--order", "12", "--xorder", "7")
    assert code == 0 and data["passed"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    import ramanujan_traces.cli as cli
    from ramanujan_traces.reports import CheckReport

    monkeypatch.setattr(cli, "verify_ramanujan_odes", lambda N: [CheckReport("broken", False)])
    code, out = run(capsys, "verify", "--check", "odes")
    assert code == 1 and "FAIL" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "u6.json"
    code, out = run(capsys, "trace", "--series", "u", "--t", "3", "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["t"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["trace", "--series", "w", "--t", "1"],
        ["trace", "--series", "u"],
        ["trace", "--series", "u", "--t", "-1"],
        ["reduce", "--series", "u", "--t", "0"],
        ["verify", "--check", "nonsense"],
        ["qexpand", "--series", "u", "--t", "1", "--order", "0"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_bad_env_exit_2(monkeypatch, capsys):
    monkeypatch.setenv("RAMANUJAN_DEFAULT_ORDER", "lots")
    with pytest.raises(SystemExit) as exc:
        main(["qexpand", "--series", "u", "--t", "1"])
    assert exc.value.code == 2


def test_rational_rendering():
    from fractions import Fraction

    assert fmt_rational(Fraction(-42, 9)) == "-14/3"
    assert fmt_rational(Fraction(10, 5)) == "2"


def _subprocess(*argv):
    return subprocess.run([sys.executable, "-m", "ramanujan_traces", *argv], capture_output=True)


def test_json_byte_deterministic_across_processes():
    argv = ("trace", "--series", "u", "--t", "7", "--format", "json")
    a, b = _subprocess(*argv), _subprocess(*argv)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout
    argv = ("verify", "--check", "odes", "--format", "json")
    assert _subprocess(*argv).stdout == _subprocess(*argv).stdout


def test_module_exit_codes():
    assert _subprocess("verify", "--check", "classical", "--order", "40").returncode == 0
    assert _subprocess("trace", "--series", "x", "--t", "1").returncode == 2
