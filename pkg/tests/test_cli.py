import io
import json
import subprocess
import sys

import pytest

from asmposet import cli


def run(capsys, monkeypatch, *argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def sh(capsys, monkeypatch):
    return lambda *a, stdin=None: run(capsys, monkeypatch, *a, stdin=stdin)


def test_alt_list(sh):
    code, out, _ = sh("alt", "list", "4")
    assert code == 0
    assert out.splitlines() == ["000+", "00+0", "0+-+", "0+00", "+-0+", "+-+0", "+0-+", "+000"]
    assert sh("alt", "list", "1")[1] == "+\n"
    assert len(sh("alt", "list", "6")[1].splitlines()) == 32
    assert sh("alt", "list", "2", "--format", "numeric")[1] == "0 1\n1 0\n"
    assert sh("--format", "json", "alt", "list", "2")[1] == "[0, 1]\n[1, 0]\n"


@pytest.mark.parametrize("argv", [
    ("alt", "list", "0"), ("alt", "list", "25"), ("alt", "list", "x"),
    ("alt", "list", "3", "--format", "dot"), ("chains", "count", "21"),
    ("chains", "enumerate", "7"), ("hasse", "export", "15"), ("sym", "check", "11"),
    ("sym", "orbits", "3", "--gen", "bogus"), ("verify", "13"), ("nonsense",),
])
def test_usage_errors_exit_2(sh, argv):
    assert sh(*argv)[0] == 2


def test_chains(sh):
    assert sh("chains", "count", "4")[1] == "42\n"
    assert sh("chains", "count", "1")[1] == "1\n"
    code, out, _ = sh("chains", "enumerate", "2")
    assert code == 0
    assert [json.loads(l) for l in out.splitlines()] == [
        {"n": 2, "vertices": ["00", "01", "11"]},
        {"n": 2, "vertices": ["00", "10", "11"]}]
    assert sh("chains", "enumerate", "3", "--format", "text")[1].splitlines()[0] == "000 001 011 111"
    code, out, _ = sh("chains", "enumerate", "7", "--force")
    assert code == 0 and len(out.splitlines()) == 218348


def test_asm_validate(sh, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("0 1 0\n1 -1 1\n0 1 0\n")
    assert sh("asm", "validate", str(f))[0] == 0
    code, _, err = sh("asm", "validate", "-", stdin="1 1\n0 0\n")
    assert code == 1 and "RowNotAlternating(1)" in err
    code, _, err = sh("asm", "validate", "-", stdin="1 0\n0 x\n")
    assert code == 1 and "position" in err
    assert sh("asm", "validate", str(tmp_path / "missing"))[0] == 1


def test_asm_enumerate_methods_agree(sh):
    sets = {}
    for method in ("chains", "exhaustive", "backtrack"):
        code, out, _ = sh("asm", "enumerate", "3", "--method", method)
        assert code == 0
        sets[method] = {tuple(map(tuple, json.loads(l)["rows"])) for l in out.splitlines()}
    assert sets["chains"] == sets["exhaustive"] == sets["backtrack"]
    assert len(sets["chains"]) == 7
    assert sh("asm", "enumerate", "4", "--method", "exhaustive")[0] == 2
    text = sh("asm", "enumerate", "2", "--format", "text")[1]
    assert text == "0 1\n1 0\n\n1 0\n0 1\n\n"


def test_asm_to_chain_and_back(sh):
    code, out, _ = sh("asm", "to-chain", "-", stdin="1 0 0\n0 1 0\n0 0 1\n")
    assert code == 0
    assert json.loads(out) == {"n": 3, "vertices": ["000", "100", "110", "111"]}
    assert sh("asm", "to-chain", "-", "--format", "text", stdin="1")[1] == "0 1\n"
    code, out2, _ = sh("chain-to-asm", "-", stdin=out)
    assert out2 == "1 0 0\n0 1 0\n0 0 1\n"


def test_chain_to_asm(sh):
    assert sh("chain-to-asm", "-", stdin="000 010 101 111")[1] == "0 1 0\n1 -1 1\n0 1 0\n"
    assert sh("chain-to-asm", "-", stdin="0 1")[1] == "1\n"
    code, _, err = sh("chain-to-asm", "-", stdin="000 110 111")
    assert code == 1 and "WrongLength" in err
    code, _, err = sh("chain-to-asm", "-", stdin="000 010 110 101")
    assert code == 1 and "BadEndpoints" in err
    code, _, err = sh("chain-to-asm", "-", stdin='{"n":3,"vertices":["000","011","110","111"]}')
    assert code == 1 and "NotACover(1)" in err
    assert json.loads(sh("chain-to-asm", "-", "--format", "json", stdin="0 1")[1]) == \
        {"n": 1, "rows": [[1]]}


def test_hasse_export(sh):
    assert sh("hasse", "export", "1")[1] == "0 1\n"
    assert len(sh("hasse", "export", "2")[1].splitlines()) == 4
    out = sh("hasse", "export", "3")[1].splitlines()
    assert len(out) == 13 and "010 101" in out
    dot = sh("hasse", "export", "3", "--format", "dot")[1]
    assert dot.count(" -- ") == 13 and dot.count("rank=same") == 4
    data = json.loads(sh("hasse", "export", "3", "--format", "json")[1])
    assert len(data["edges"]) == 13


def test_sym_theta_cycles(sh):
    out = sh("sym", "theta-cycles", "5")[1].splitlines()
    assert [l.count("->") for l in out] == [10, 10, 10, 2]
    assert sh("sym", "theta-cycles", "2")[1] == "(0,0) -> (1,0) -> (1,1) -> (0,1) -> (0,0)\n"
    out = sh("sym", "theta-cycles", "3", "--start", "101", "--format", "bits")[1]
    assert out == "101 -> 010 -> 101\n"
    assert sh("sym", "theta-cycles", "3", "--start", "10")[0] == 2


def test_sym_orbits(sh):
    out = sh("sym", "orbits", "5")[1].splitlines()
    assert sorted(len(l.split()) for l in out) == [2, 10, 10, 10]
    data = json.loads(sh("sym", "orbits", "1", "--gen", "theta,tau", "--format", "json")[1])
    assert data == {"orbits": [["0", "1"]]}


def test_sym_check(sh):
    code, out, _ = sh("sym", "check", "1")
    assert code == 0 and "realized group order: 2" in out
    code, out, _ = sh("sym", "check", "4")
    assert code == 0 and "realized group order: 16" in out


def test_verify(sh):
    code, out, _ = sh("verify", "4")
    assert code == 0
    assert "count(4)=42 == oracle" in out
    assert out.rstrip().endswith("all checks passed")
    assert sh("verify", "1")[0] == 0
    code, out, _ = sh("verify", "1", "--quiet")
    assert code == 0 and out == "all checks passed\n"


@pytest.mark.parametrize("fault", ["alt-total-only", "alt-single-only"])
def test_verify_detects_injected_fault(sh, fault):
    code, out, _ = sh("verify", "4", "--inject-fault", fault)
    assert code == 1
    assert "counterexample" in out and "FAIL" in out


def test_determinism_end_to_end():
    argv = [sys.executable, "-m", "asmposet", "chains", "enumerate", "5"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and len(a.splitlines()) == 429
    par = subprocess.run(argv + ["--workers", "3"], capture_output=True, check=True).stdout
    assert par == a


def test_exit_codes_end_to_end():
    base = [sys.executable, "-m", "asmposet"]
    ok = subprocess.run(base + ["chains", "count", "3"], capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout == "7\n"
    bad = subprocess.run(base + ["asm", "validate", "-"], input="1 1\n0 0\n",
                         capture_output=True, text=True)
    assert bad.returncode == 1 and bad.stdout == ""
    usage = subprocess.run(base + ["chains", "count"], capture_output=True, text=True)
    assert usage.returncode == 2
