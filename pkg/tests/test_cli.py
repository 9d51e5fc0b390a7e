import io
import subprocess
import sys

import pytest
from hypothesis import given, settings

from semisimp import sset as S
from semisimp.cli import run_command
from semisimp.iso import is_isomorphic
from semisimp.ssx import ParseError, export_dot, parse_ssx, write_ssx

from oracles import complexes

DELTA2 = """ssx 1
dim 0: a b c
dim 1: ab(b,a) bc(c,b) ac(c,a)   # d0 first
dim 2: t(bc,ac,ab)
"""

DELTA1 = "ssx 1\ndim 0: a b\ndim 1: e(b,a)\n"


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    (tmp_path / "d2.ssx").write_text(DELTA2)
    (tmp_path / "d1.ssx").write_text(DELTA1)
    return tmp_path


def test_parse_examples():
    L = parse_ssx("ssx 1\ndim 0: v\ndim 1: e(v,v)\nmarked: e\n")
    assert S.f_vector(L) == (1, 1) and L.marked == frozenset({0})
    X = parse_ssx(DELTA2)
    assert S.f_vector(X) == (3, 3, 1)
    assert is_isomorphic(X, S.simplex(2))
    with pytest.raises(ParseError):
        parse_ssx("ssx 1\ndim 0: a\ndim 1: e(a,b)\n")


@pytest.mark.parametrize("text", [
    "", "ssx 2\n", "ssx 1\ndim 1: e(a,a)\n", "ssx 1\ndim 0: a a\n", "ssx 1\ndim 0: a(b)\n",
    "ssx 1\ndim 0: a\ndim 1: e(a)\n", "ssx 1\ndim 0: a\nmarked: a\n", "ssx 1\ndim 0: a-b\n",
    "ssx 1\ndim 0: a\ndim 1: e(a,a)\nmarked: e\ndim 2: t(e,e,e)\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ssx(text)


def test_parse_forwards_validation():
    bad = "ssx 1\ndim 0: a b c\ndim 1: x(b,a) y(c,b) z(c,a)\ndim 2: t(x,y,z)\n"
    with pytest.raises(S.IdentityViolation):
        parse_ssx(bad)


@given(complexes(max_vertices=4, marked=True))
@settings(max_examples=30, deadline=None)
def test_write_parse_round_trip(X):
    text = write_ssx(X)
    Y = parse_ssx(text)
    assert Y == X
    assert write_ssx(Y) == text


def test_dot():
    assert "0 -> 1;" in export_dot(S.simplex(1))
    assert "0 -> 0;" in export_dot(S.loop())
    assert "style=bold" in export_dot(S.simplex(1).maximal())
    assert "style=bold" not in export_dot(S.simplex(1))


def test_sd_then_fvector(files):
    code, out, _ = run(["sd", "--in", str(files / "d2.ssx")])
    assert code == 0
    code, out, _ = run(["fvector"], stdin=out)
    assert (code, out) == (0, "7 12 6\n")


def test_verify_h():
    assert run(["verify-h", "--dim", "3"])[:2] == (0, "OK: 0 failures\n")


def test_cert_left_marked_round_trip(files):
    code, cert, _ = run(["cert-left", "--in", str(files / "d1.ssx"), "--marked"])
    assert code == 0
    code, out, _ = run(["cert-verify"], stdin=cert)
    assert code == 0 and out.startswith("OK")


def test_cert_verify_rejects_tampering(files):
    import json
    _, cert, _ = run(["cert-left", "--in", str(files / "d1.ssx")])
    doc = json.loads(cert)
    doc["certificate"]["attachments"].pop()
    assert run(["cert-verify"], stdin=json.dumps(doc))[0] == 1
    assert run(["cert-verify"], stdin="not json")[0] == 2


def test_binary_commands(files):
    d1 = str(files / "d1.ssx")
    for cmd, fv in [("tensor", "4 5 2"), ("cartesian", "4 1"), ("join", "4 6 4 1")]:
        code, out, _ = run([cmd, "--in", d1, "--in", d1])
        assert code == 0
        assert run(["fvector"], stdin=out)[1] == fv + "\n"
    code, out, _ = run(["mjoin", "--in", d1, "--in", d1])
    assert len(parse_ssx(out).marked) == 4
    assert run(["tensor", "--in", d1])[0] == 2


def test_other_commands(files):
    d2, d1 = str(files / "d2.ssx"), str(files / "d1.ssx")
    assert run(["validate", "--in", d2])[:2] == (0, "OK\n")
    assert run(["tau0", "--in", d2])[1] == "0 1 2\n"
    code, out, _ = run(["tau1", "--in", d2])
    assert code == 0 and "e0 e1 = e2" in out
    code, out, _ = run(["ul", "--in", d1, "--dim", "2"])
    assert S.f_vector(parse_ssx(out)) == (2, 3, 4)
    assert run(["eta-check", "--in", d2, "--dim", "2"])[0] == 0
    code, out, _ = run(["complete", "--kinds", "inner", "--in", str(files / "d1.ssx")])
    assert code == 0 and S.f_vector(parse_ssx(out)) == (2, 1)
    code, out, _ = run(["scan-horns", "--in", d2, "--dim", "2"])
    assert code == 0 and "unfilled" in out
    assert run(["lift", "--in", d1, "--in", d2])[0] == 0
    assert run(["lift", "--in", d2, "--in", d1])[0] == 1
    code, out, _ = run(["cospan", "--in", d1])
    assert S.f_vector(parse_ssx(out)) == (5, 7, 3)
    code, out, _ = run(["dot", "--in", d1])
    assert "0 -> 1" in out


def test_saturate(tmp_path):
    p = tmp_path / "t.ssx"
    p.write_text(DELTA2 + "marked: ab bc\n")
    code, out, _ = run(["saturate", "--mode", "two_of_three", "--in", str(p)])
    assert code == 0 and len(parse_ssx(out).marked) == 3


def test_exit_codes(files, tmp_path):
    assert run(["fvector", "--in", str(tmp_path / "missing.ssx")])[0] == 2
    assert run(["fvector"], stdin="ssx 1\ndim 0: a\ndim 1: e(a,b)\n")[0] == 2
    assert run(["nonsense"])[0] == 2
    bad = tmp_path / "bad.ssx"
    bad.write_text("ssx 1\ndim 0: a b c\ndim 1: x(b,a) y(c,b) z(c,a)\ndim 2: t(x,y,z)\n")
    assert run(["validate", "--in", str(bad)])[0] == 1
    d3 = tmp_path / "d3.ssx"
    d3.write_text(write_ssx(S.simplex(4)))
    assert run(["cert-left", "--in", str(d3)])[0] == 2


def test_out_flag(files, tmp_path):
    target = tmp_path / "out.txt"
    assert run(["fvector", "--in", str(files / "d2.ssx"), "--out", str(target)])[1] == ""
    assert target.read_text() == "3 3 1\n"


def test_deterministic_output(files):
    d2 = str(files / "d2.ssx")
    for cmd in (["sd", "--in", d2], ["cospan", "--in", d2], ["scan-horns", "--in", d2]):
        assert run(cmd)[1] == run(cmd)[1]


def test_module_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "semisimp", "fvector", "--in", str(files / "d2.ssx")],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "3 3 1\n"
