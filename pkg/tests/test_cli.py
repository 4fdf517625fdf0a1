import io
import subprocess
import sys

import pytest

from residchain.cli import emit_table, main
from residchain.convert import Subgroup, iota_group_to_chain, split
from residchain.dsl import parse_bunch_dsl
from residchain.flechain import FiniteChainTable, TableChain
from residchain.ogroup import OrderedGroup

S3_TEXT = "3 1 1\n0 0 0\n0 1 2\n0 2 2\n"
MIXED = """\
xi = O
kappa = [t, u, v]
class u = I
class v = J
group t = Z^1
group u = Z^2
group v = Z^1
subgroup u = prefix 1
hom t->u = matrix [[1],[0]]
hom u->v = truncate 1
"""
SUGIHARA = "xi = O\nkappa = [t, u]\nclass u = I\ngroup t = Z^0\ngroup u = Z^0\nsubgroup u = full\nhom t->u = trivial\n"
DSL_KEYWORDS = {"xi", "kappa", "class", "group", "subgroup", "hom"}
# G1 fails: the map doubles, so t->v is not the composite of t->u and u->v
BAD = MIXED + "hom t->v = matrix [[2]]\n"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("mixed", MIXED), ("sug", SUGIHARA), ("bad", BAD), ("s3", S3_TEXT),
                       ("broken", "3 1 1\n0 0 0\n0 1 2\n0 2 1\n"), ("syntax", "xi = O\nkappa = [t\n")]:
        p = tmp_path / name
        p.write_text(text)
        paths[name] = p
    return paths


def table_rows(text):
    return [ln for ln in text.splitlines() if not ln.startswith("#")]


def test_emit_table_s3():
    text = emit_table(TableChain(FiniteChainTable.from_text(S3_TEXT)))
    assert table_rows(text) == S3_TEXT.splitlines()
    assert "# 0 0 2 2 2" in text


def test_emit_table_z_slice():
    text = emit_table(iota_group_to_chain(OrderedGroup(1)), 2)
    assert table_rows(text) == [
        "5 2 2",
        "[-4] [-3] 0 1 2",
        "[-3] 0 1 2 3",
        "0 1 2 3 4",
        "1 2 3 4 [3]",
        "2 3 4 [3] [4]",
    ]


def test_emit_table_boolean_split():
    text = emit_table(split(iota_group_to_chain(OrderedGroup(0)), Subgroup.trivial()))
    assert table_rows(text) == ["2 1 0", "0 0", "0 1"]
    assert "# 0 .() " in text


def test_check_and_roundtrip_pass(files):
    code, out = run("check", files["mixed"], "--samples", 80)
    assert code == 0 and "PASS laws[derived-from-bunch] 0" in out
    code, out = run("roundtrip", files["sug"], "--samples", 60)
    assert code == 0 and "FAIL" not in out


def test_check_reports_g1(files):
    code, out = run("check", files["bad"], "--samples", 80)
    assert code == 1 and "G1" in out


def test_derive_emits_s3(files):
    code, out = run("derive", files["sug"], "--emit-table")
    assert code == 0 and "# parity odd" in out
    assert table_rows(out) == S3_TEXT.splitlines()


def test_decompose_emits_dsl_that_rederives(files):
    code, out = run("decompose", files["s3"], "--emit-dsl", "--samples", 50)
    assert code == 0
    dsl = "\n".join(ln for ln in out.splitlines() if ln.split(" ")[0] in DSL_KEYWORDS)
    doc = parse_bunch_dsl(dsl)
    assert doc.kappa == ["t", "p2"]
    tmp = files["s3"].parent / "back.bunch"
    tmp.write_text(dsl)
    code, out = run("derive", tmp, "--emit-table")
    assert code == 0 and table_rows(out) == S3_TEXT.splitlines()


def test_decompose_broken_table(files):
    code, out = run("decompose", files["broken"])
    assert code == 1 and "cannot decompose" in out


def test_enumerate(files):
    code, out = run("enumerate", "--n", 5, "--tables", "--cross-check")
    assert code == 0
    assert out.startswith("5 odd 1\n5 2 2\n")
    code, out = run("enumerate", "--n", 6, "--parity", "even-nonidempotent-f")
    assert (code, out) == (0, "6 even-nonidempotent-f 0\n")


@pytest.mark.parametrize("argv", [["enumerate", "--n", "9"], ["check", "missing-file"], ["bogus"],
                                  ["check", "x", "--samples", "0"]])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_parse_error_exit_2(files, capsys):
    assert run("check", files["syntax"])[0] == 2
    assert "line 2, col 1" in capsys.readouterr().err


def test_module_entry_point(files):
    p = subprocess.run([sys.executable, "-m", "residchain", "enumerate", "--n", "3"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "3 odd 1\n"
