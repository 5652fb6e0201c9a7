import io
import json
import subprocess
import sys

import pytest

from cylindric.cli import Config, InputError, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_render_text_marks_bottom_cells():
    code, out, _ = run("render", "--omega", "4,-5", "--lambda", "9,7,7,5", "--depth", "0")
    assert code == 0
    assert "^" in out and "_" in out
    assert out.count("\n") >= 6


def test_render_svg_is_deterministic():
    args = ("render", "--omega", "2,-3", "--lambda", "5,4", "--format", "svg", "--depth", "2")
    a, b = run(*args)[1], run(*args)[1]
    assert a == b and a.startswith("<svg") and a.rstrip().endswith("</svg>")


def test_render_json_and_dot():
    code, out, _ = run("render", "--omega", "2,-2", "--lambda", "4,2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and len(obj["cells"]) == 2 * 2 * 2
    assert obj["diagram"]["omega"] == [2, -2]
    for order in ("diagram", "modified", "heap"):
        code, out, _ = run("render", "--omega", "2,-2", "--lambda", "4,2", "--format", "dot", "--order", order)
        assert code == 0 and out.startswith("digraph")


def test_enumerate_ideals():
    code, out, _ = run("enumerate", "ideals", "--omega", "2,-2", "--lambda", "4,2", "--max-ideal", "0")
    assert code == 0 and out.strip() == "∅"
    code, out, _ = run("enumerate", "ideals", "--omega", "2,-2", "--lambda", "4,2", "--max-ideal", "6")
    assert len(out.splitlines()) == 1 + 1 + 2 + 1 + 2 + 1 + 2


def test_enumerate_hooks():
    code, out, _ = run("enumerate", "hooks", "--omega", "4,-5", "--lambda", "5,3,3,1")
    assert code == 0
    assert "π(2,-4)  con=3  N=1  hk=δ + α0 + α1 + α6 + α7 + α8" in out


def test_enumerate_words():
    code, out, _ = run("enumerate", "words", "--omega", "2,-3", "--lambda", "5,4", "--max-ideal", "6")
    assert code == 0
    assert "s4 s2 s1 s3 s0 s2" in out
    code, _, err = run("enumerate", "words", "--omega", "2,-3", "--lambda", "5,4", "--max-ideal", "6", "--cap", "3")
    assert code == 2 and "cap" in err


@pytest.mark.parametrize("argv", [
    ("render", "--omega", "2,-2", "--lambda", "1,2"),
    ("render", "--omega", "2,2", "--lambda", "4,2"),
    ("render", "--omega", "2,-2"),
    ("render", "--omega", "x,-2", "--lambda", "4,2"),
    ("verify", "--suite", "nope"),
    ("render",),
    ("bogus",),
])
def test_invalid_input_exits_2(argv):
    assert run(*argv)[0] == 2


def test_config_validation():
    with pytest.raises(InputError):
        Config(depth=-1)
    with pytest.raises(InputError):
        Config(format="pdf")
    assert Config(omega=(2, -2), lam=(4, 2)).diagram.kappa == 4


def test_verify_json_report():
    code, out, _ = run("verify", "--suite", "ex-hook,pi-set", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["pass"]
    assert [r["check"] for r in obj["suites"]] == ["ex-hook", "pi-set"]
    for r in obj["suites"]:
        assert set(r) >= {"check", "params", "pass", "counterexample", "claims"}
        assert all(c["pass"] for c in r["claims"])


def test_verify_on_a_chosen_diagram():
    code, out, _ = run("verify", "--suite", "hk-bijection,trichotomy", "--omega", "3,-1", "--lambda", "2,1,1",
                       "--depth", "1", "--jobs", "2")
    assert code == 0 and out.count("PASS") == 2


def test_verify_empty_suite_list():
    code, out, _ = run("verify", "--suite", "", "--format", "json")
    assert code == 0 and json.loads(out) == {"pass": True, "suites": []}


def test_failure_exits_1(monkeypatch):
    from cylindric import verify

    def broken(p, c):
        c.add("always fails", False, {"diagram": {"omega": [2, -2], "lambda": [4, 2]}, "depth": 1}, {"cell": [1, 2]})

    monkeypatch.setitem(verify.SUITES, "ex-hook", broken)
    code, _, err = run("verify", "--suite", "ex-hook")
    assert code == 1
    assert "counterexample in ex-hook" in err and "|" in err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cylindric", "render", "--omega", "1,-1", "--lambda", "0"],
                       capture_output=True, text=True, timeout=60)
    assert r.returncode == 0 and "contents mod 2" in r.stdout
