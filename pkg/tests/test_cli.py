import io
import json

import pytest

from unimap.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv,want", [
    (("count", "lehman-walsh", "--genus", "2", "--edges", "4"), "21"),
    (("count", "catalan", "--n", "0"), "1"),
    (("count", "harer-zagier", "--genus", "3", "--edges", "6"), "1485"),
    (("count", "cperm", "--genus", "1", "--n", "3"), "4"),
    (("count", "colored", "--colors", "2", "--edges", "2"), "12"),
    (("count", "jackson", "--black-colors", "1", "--white-colors", "1", "--edges", "2"), "2"),
    (("count", "goupil-schaeffer", "--I", "2,1", "--J", "2,1"), "3"),
    (("count", "morales-vassilieva", "--I", "3", "--J", "3"), "6"),
    (("count", "covered", "--g1", "0", "--g2", "0", "--edges", "2"), "10"),
    (("count", "double-factorial", "--n", "30"), "29215606371473169285018060091249259296875"),
])
def test_count(argv, want):
    code, out, _ = call(*argv)
    assert code == 0 and out == want + "\n"


def test_count_json():
    code, out, _ = call("count", "bi", "--lam", "1,1,1", "--mu", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"formula": "bi", "args": {"lam": [1, 1, 1], "mu": [3]}, "value": "1"}
    assert list(json.loads(out)) == ["formula", "args", "value"]


@pytest.mark.parametrize("argv", [
    (), ("frobnicate",), ("count",), ("count", "catalan"), ("count", "catalan", "--n", "x"),
    ("count", "catalan", "--n", "-3"), ("count", "bi", "--lam", "1,2", "--mu", "3"),
    ("count", "goupil-schaeffer", "--I", "2,1", "--J", "3"),
    ("sample", "--genus", "2", "--edges", "2"),
    ("stanley", "--n", "2", "--vars", "1", "--eval", "1,2;3"),
    ("constellation", "ps3", "--lambda1", "2", "--lambda2", "1,1", "--lambda3", "2"),
    ("dist", "--genus", "3", "--edges", "2"),
])
def test_errors_exit_one(argv):
    code, out, err = call(*argv)
    assert code == 1 and err and "Traceback" not in err


def test_sample_reproducible():
    a = call("sample", "--genus", "1", "--edges", "4", "--count", "5", "--seed", "11")
    b = call("sample", "--genus", "1", "--edges", "4", "--count", "5", "--seed", "11")
    assert a == b and a[0] == 0
    lines = a[1].splitlines()
    assert len(lines) == 5
    assert all(json.loads(x)["n"] == 4 for x in lines)


def test_stanley():
    code, out, _ = call("stanley", "--n", "1", "--vars", "2")
    assert out == "1 * p1 q1 + 1 * p1 q2 + 1 * p2 q2\n"
    code, out, _ = call("stanley", "--n", "3", "--vars", "1", "--eval", "1;5")
    assert code == 0 and out == "1\n"
    code, out, _ = call("stanley", "--n", "2", "--vars", "1", "--eval", "2;2")
    assert out == "0\n"


def test_constellation():
    assert call("constellation", "ps3", "--lambda1", "1", "--lambda2", "1", "--lambda3", "1")[1] == "1\n"
    assert call("constellation", "qc", "--lambda1", "1", "--lambda2", "1", "--lambda3", "1")[1] == "2\n"
    code, out, _ = call("constellation", "induction", "--lambda1", "2", "--lambda2", "2",
                        "--lambda3", "2", "--corrected")
    assert code == 0 and out.endswith("holds\n")
    code, out, _ = call("constellation", "induction", "--lambda1", "2", "--lambda2", "2", "--lambda3", "2")
    assert code == 2 and out == "lhs 2\nrhs 1\nfails\n"


def test_dist_csv():
    code, out, _ = call("dist", "--genus", "1", "--edges", "9")
    assert code == 0
    assert out.splitlines() == ["edges,g1,probability,binomial,total_variation",
                                "9,0,1/2,1/2,0", "9,1,1/2,1/2,0"]


def test_verify_all():
    code, out, _ = call("verify", "all", "--max-edges", "3")
    assert code == 0
    assert "checks passed" in out and "FAIL" not in out


def test_verify_single_stated_check_is_informational():
    code, out, _ = call("verify", "qc-brute", "--max-edges", "2")
    assert code == 0 and "DIFFERS" in out


def test_cap_env(monkeypatch):
    monkeypatch.setenv("UNIMAP_MAX_STATES", "10")
    code, _, err = call("verify", "epsilon", "--max-edges", "5")
    assert code == 1 and "cap" in err.lower()
