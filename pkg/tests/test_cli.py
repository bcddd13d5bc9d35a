import json
import subprocess
import sys

import pytest

from monideal.cli import main
from monideal.core import MonomialIdeal
from monideal.decomp import size_report
from monideal.sdepth import sdepth

from test_verify import violating_payload


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_size(capsys):
    code, out, _ = run(capsys, "size", "-i", "vars:2 / gens: x1*x2")
    assert code == 0
    assert out.strip() == "a=2 b=2 size=1 bigsize=1"


def test_sdepth_prints_value_and_certificate(capsys):
    code, out, _ = run(capsys, "sdepth", "--mode", "ideal", "-i", "vars:2 / gens: x1, x2")
    assert code == 0
    assert out.startswith("sdepth=1 ")
    assert "certificate" in out


def test_verify_worked_example(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "modification", "--paper-example")
    assert code == 0
    assert "status=pass" in out


def test_json_is_byte_deterministic(capsys):
    argv = ["verify", "--suite", "bounds", "--count", "15", "--format", "json", "--seed", "5"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    doc = json.loads(a)
    assert doc["spec"]["seed"] == 5 and doc["status"] == "pass"


def test_cli_numbers_match_library(capsys, tmp_path):
    text = "vars:3\ngens: x1^2*x2, x2*x3^2, x1*x3"
    f = tmp_path / "I.txt"
    f.write_text(text)
    I = MonomialIdeal(3, [(2, 1, 0), (0, 1, 2), (1, 0, 1)])
    _, out, _ = run(capsys, "size", "-f", str(f), "--format", "json")
    rep = size_report(I)
    assert json.loads(out) == {"a": rep.a, "b": rep.b, "size": rep.size, "bigsize": rep.bigsize}
    _, out, _ = run(capsys, "sdepth", "-f", str(f), "--mode", "quotient", "--format", "json")
    assert json.loads(out)["sdepth"] == sdepth(I, "quotient").value


def test_depth_and_decompose(capsys):
    code, out, _ = run(capsys, "depth", "-i", "vars:3 / gens: x2, x1*x3", "--char", "0")
    assert code == 0 and "depth(S/I)=1 depth(I)=2" in out and "char=0" in out
    code, out, _ = run(capsys, "decompose", "-i", "vars:2 / gens: x1^2, x1*x2", "--format", "json")
    comps = json.loads(out)["components"]
    assert [c["radical"] for c in comps] == [[0], [0, 1]]
    code, out, _ = run(capsys, "ass", "-i", "vars:3 / gens: x2, x1*x3")
    assert out.split() == ["(x1,x2)", "(x2,x3)"]


def test_lex(capsys):
    code, out, _ = run(capsys, "lex", "6", "x1*x4^3", "x2^4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["depth_ideal"], doc["size"], doc["minimal_depth"]) == (3, 2, True)
    assert doc["case"] == "v_eq_x2_pow_d"


def test_modify(capsys):
    code, out, _ = run(capsys, "modify", "-i", "vars:3 / gens: x1*x2, x2*x3", "--alpha", "2,3,1")
    assert code == 0 and out.splitlines()[0] == "(x1^2*x2^3, x2^3*x3)"
    code, _, err = run(capsys, "modify", "-i", "vars:2 / gens: x1^2", "--alpha", "1,1")
    assert code == 2 and "squarefree" in err


def test_certify(capsys, tmp_path):
    ideal = "vars:2 / gens: x1, x2"
    _, out, _ = run(capsys, "sdepth", "-i", ideal, "--format", "json")
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    assert run(capsys, "certify", str(cert), "-i", ideal)[0] == 0
    code, out, _ = run(capsys, "certify", str(cert), "-i", ideal, "--k", "2")
    assert code == 1 and "value below 2" in out
    data = json.loads(cert.read_text())["certificate"]
    data["intervals"] = data["intervals"][1:]
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "certify", str(cert), "-i", ideal)
    assert code == 1 and "not covered" in out
    cert.write_text("{not json")
    assert run(capsys, "certify", str(cert), "-i", ideal)[0] == 2
    cert.write_text(json.dumps({"intervals": []}))
    assert run(capsys, "certify", str(cert), "-i", ideal)[0] == 2


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["size", "--bogus"],
    ["size"],
    ["size", "-i", "vars:2 / gens: x3"],
    ["size", "-i", "vars:2 / gens: x1", "-f", "x.txt"],
    ["size", "-f", "/nonexistent/ideal.txt"],
    ["depth", "-i", "vars:2 / gens: x1", "--char", "4"],
    ["decompose", "-i", "vars:2 / gens: 1"],
    ["verify"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_strict_indeterminate(capsys):
    argv = ["sdepth", "-i", "vars:5 / gens: x1, x2, x3, x4, x5", "--budget", "1"]
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "indeterminate" in out
    assert run(capsys, *argv, "--strict")[0] == 3
    argv = ["verify", "--suite", "bounds", "--count", "15", "--budget", "1"]
    assert run(capsys, *argv)[0] == 0
    assert run(capsys, *argv, "--strict")[0] == 3


def test_replay_violation_exit_1(capsys, tmp_path):
    p = tmp_path / "payload.json"
    p.write_text(json.dumps(violating_payload()))
    code, out, _ = run(capsys, "verify", "--replay", str(p))
    assert code == 1 and "violation" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "monideal", "size", "-i", "vars:2 / gens: x1*x2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "a=2 b=2 size=1 bigsize=1"


def test_g_override(capsys):
    ideal = "vars:3 / gens: x1*x2, x2*x3"
    _, small, _ = run(capsys, "sdepth", "--mode", "quotient", "-i", ideal, "--format", "json")
    _, big, _ = run(capsys, "sdepth", "--mode", "quotient", "-i", ideal, "--g", "2,2,2", "--format", "json")
    small, big = json.loads(small), json.loads(big)
    assert big["certificate"]["g"] == [2, 2, 2]
    assert small["sdepth"] == big["sdepth"] == 1
    assert run(capsys, "sdepth", "-i", ideal, "--g", "0,1,1")[0] == 2
