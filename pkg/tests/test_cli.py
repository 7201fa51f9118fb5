import io
import json
import subprocess
import sys

import pytest

from pinnacles.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def payload(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


@pytest.mark.parametrize("argv, expected", [
    (("count", "--n", "3", "--set", "3"), {"count": "2"}),
    (("count", "--n", "5", "--set", ""), {"count": "16"}),
    (("wsum", "--n", "3", "--set", "3"), {"lhs": "16", "rhs": "16", "equal": True}),
])
def test_documented_examples(argv, expected):
    assert payload(*argv) == expected


def test_counts_are_strings():
    out = payload("count", "--n", "60", "--set", "")
    assert out == {"count": str(2 ** 59)}
    assert payload("count", "--n", "7", "--set", "4,6", "--method", "oracle")["count"] == "144"


def test_modular_count():
    out = payload("count", "--n", "1000000000", "--set", "5,500", "--mod", "1000000007")
    assert out["mod"] == "1000000007" and 0 <= int(out["count"]) < 10**9 + 7


def test_orderings_and_list():
    out = payload("orderings", "--n", "5", "--set", "3,5", "--i", "1", "--list")
    assert out["count"] == "4"
    assert out["orderings"] == ["1,3,5", "3,1,5", "5,1,3", "5,3,1"]
    assert payload("orderings", "--n", "8", "--set", "3,7")["count"] == "2"


def test_admissible():
    out = payload("admissible", "--n", "7", "--set", "4,6")
    assert out["admissible"] is True and out["ballot"] == "0001010"
    assert payload("admissible", "--n", "4", "--set", "3,4")["admissible"] is False


def test_forest_commands():
    assert payload("forest", "encode", "--n", "7", "--set", "4,6") == {"forest": "1 ((2,3)4,5)6 7"}
    assert payload("forest", "decode", "--forest", "1 ((2,3)4,5)6 7") == {"n": 7, "set": "{4,6}"}
    assert payload("forest", "encode", "--n", "4", "--set", "3,4")["forest"] is None


def test_bijection_commands():
    walk = "U1R F1L D2L F1R U1R F2L D2L F1L F1R"
    cyc = "[10r,6r,1r,2l,5r,3l,4l,8l,9r,7l]"
    assert payload("bijection", "f", "--walk", walk)["cycle"] == cyc
    assert payload("bijection", "g", "--cycle", cyc, "--set", "3,5,7,9")["walk"] == walk


def test_verify_small():
    out = payload("verify", "--max-n", "4")
    assert out["ok"] is True
    assert all(c["ok"] for c in out["checks"])


def test_verify_reports_mismatch(monkeypatch):
    from pinnacles import blocks
    monkeypatch.setattr(blocks, "fast_count", lambda n, pins, *a, **k: 0)
    code, out, _ = call("verify", "--max-n", "3")
    report = json.loads(out)
    assert code == 1 and report["ok"] is False
    assert report["failure"]["identity"] == "fast_count = brute count"
    assert report["failure"]["instance"] == "n=1 P={}"


def test_bench_small():
    out = payload("bench", "--k", "2,3", "--n", "100,1000")
    assert len(out["rows"]) == 4 and out["spread"] >= 1


@pytest.mark.parametrize("argv", [
    ("count", "--n", "3"),
    ("count", "--n", "3", "--set", "x"),
    ("count", "--n", "3", "--set", "5"),
    ("count", "--n", "3", "--set", "3", "--mod", "4"),
    ("count", "--n", "3", "--set", "3", "--mod", "2"),
    ("count", "--n", "30", "--set", "3,6,9,12", "--mod", "5"),
    ("count", "--n", "12", "--set", "3", "--method", "oracle"),
    ("orderings", "--n", "9", "--set", "3,5,7,9", "--list"),
    ("bijection", "f", "--walk", "U1L"),
    ("bijection", "g", "--cycle", "[3r,1r,2r]", "--set", ""),
    ("forest", "decode", "--forest", "(1,2"),
    ("verify", "--max-n", "12"),
    ("frobnicate",),
    (),
])
def test_usage_errors(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_plain_format():
    code, out, _ = call("--format", "plain", "count", "--n", "3", "--set", "3")
    assert code == 0 and out.strip() == "count: 2"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "pinnacles", "count", "--n", "4", "--set", "4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"count": "12"}
