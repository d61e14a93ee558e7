import json

import pytest

from hopftwist import fileformat
from hopftwist.cli import main
from hopftwist.constructions import kC2, regular_comodule, sweedler_h4
from hopftwist.field import GF, Q
from hopftwist.pipelines import homogenization_rprime_closed_form
from hopftwist.twisting import AXIOM_UNIT_A, AXIOM_UNIT_B

import oracles


def run(*argv):
    return main([str(a) for a in argv])


def report(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = run(*argv, "--report-out", out)
    return code, json.loads(out.read_text())


@pytest.mark.parametrize("fld", ["Q", "GF:5"])
def test_check_h4(fld, capsys):
    assert run("check", "hopf", "builtin:H4", "--field", fld) == 0
    assert "verdict: PASS" in capsys.readouterr().out


def test_check_bad_antipode_file(corpus, tmp_path):
    code, rep = report(tmp_path, "check", "hopf", corpus("h4_bad_antipode.yaml"))
    assert code == 1 and rep["verdict"] == "fail"
    fails = [f for s in rep["stages"] for f in s["failures"]]
    assert fails and all("antipode" in f["axiom"] for f in fails)
    # the first failing basis element is x (index 2)
    assert fails[0]["witness"] == [2]


def test_check_zero_twisting_names_the_unit_axiom(corpus, tmp_path):
    code, rep = report(tmp_path, "check", "twisting", corpus("zero_twisting.yaml"))
    assert code == 1
    failed = [f["axiom"] for s in rep["stages"] for f in s["failures"]]
    # R = 0 breaks both unit axioms and neither multiplicativity one
    assert sorted(failed) == sorted([AXIOM_UNIT_A, AXIOM_UNIT_B])


def test_malformed_scalar_is_an_input_error(corpus, capsys):
    assert run("check", "linmap", corpus("bad_scalar.yaml")) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["check", "hopf", "builtin:kC3"],
    ["check", "hopf", "builtin:H4", "--field", "GF:4"],
    ["check", "hopf", "builtin:H4", "--max-dim", "3"],
    ["check", "monoid", "builtin:H4"],
    ["check", "hopf", "no/such/file.yaml"],
    ["frobnicate"],
    ["pipeline", "comodule-twist", "--c", "1/0"],
    ["pipeline", "sqt-double", "--r", "nonsense"],
])
def test_input_errors_exit_2(argv, capsys):
    assert run(*argv) == 2


def test_size_guard_scales_for_the_double():
    assert run("build", "double", "builtin:H4", "--max-dim", "15", "--out", "/dev/null") == 2
    assert run("build", "double", "builtin:kC2", "--max-dim", "8", "--out", "/dev/null") == 0


@pytest.mark.parametrize("argv", [
    ["pipeline", "comodule-twist", "--builtin", "kC2", "--c=-1"],
    ["pipeline", "comodule-twist", "--c", "2", "--field", "GF:5"],
    ["pipeline", "homogenization", "--builtin", "H4"],
    ["pipeline", "homogenization", "--builtin", "H4", "--coaction", "trivial"],
    ["pipeline", "sqt-double", "--builtin", "kC2", "--r", "triangular"],
    ["pipeline", "sqt-double", "--builtin", "kC2", "--r", "triangular", "--field", "GF:5"],
])
def test_named_pipelines_pass(argv):
    assert run(*argv) == 0


def test_pipeline_failure_names_the_stage(tmp_path, capsys):
    code, rep = report(tmp_path, "pipeline", "sqt-double", "--r", "1xg")
    assert code == 1
    failed = [s for s in rep["stages"] if s["verdict"] == "fail"]
    assert failed[0]["name"] == "SQT conditions"
    assert failed[0]["failures"][0]["lhs"] == {"1": "1"}
    assert "FAIL" in capsys.readouterr().out


def test_c_zero_fails(tmp_path):
    code, rep = report(tmp_path, "pipeline", "comodule-twist", "--c", "0")
    assert code == 1
    assert [s["name"] for s in rep["stages"] if s["verdict"] == "fail"] == ["nu convolution invertible"]


def test_pipeline_from_files(corpus):
    assert run("pipeline", "comodule-twist", corpus("c_deformation.yaml")) == 0
    assert run("pipeline", "sqt-double", corpus("triangular_r.yaml")) == 0
    assert run("pipeline", "sqt-double", corpus("kc2_gf5.yaml")) == 0
    assert run("pipeline", "homogenization", corpus("smash_kc2.yaml")) == 0


def test_report_is_deterministic(tmp_path):
    a = report(tmp_path, "check", "sqt", "builtin:kC2?r=triangular")[1]
    b = report(tmp_path, "check", "sqt", "builtin:kC2?r=triangular")[1]
    a.pop("wall_time_s"), b.pop("wall_time_s")
    assert a == b
    assert a["format"] == "hopftwist-report/1" and a["exit_code"] == 0
    assert a["inputs"][0]["digest"].startswith("sha256:")


def test_build_double_kc2(tmp_path):
    out = tmp_path / "d.yaml"
    assert run("build", "double", "builtin:kC2", "--out", out) == 0
    kind, D = fileformat.load(str(out))
    assert kind == "algebra" and D.dim == 4
    assert oracles.same(Q, oracles.table(D), oracles.double_table(Q, kC2(Q)))


def test_build_twisted_product_of_flip(corpus, tmp_path):
    out = tmp_path / "t.yaml"
    assert run("build", "twisted-product", corpus("flip_kc2_h4.yaml"), "--out", out) == 0
    _, P = fileformat.load(str(out))
    expect = oracles.tensor_table(Q, oracles.table(kC2(Q).algebra), oracles.table(sweedler_h4(Q).algebra))
    assert oracles.same(Q, oracles.table(P), expect)


def test_build_derive_rprime_h4(tmp_path):
    out = tmp_path / "r.yaml"
    assert run("build", "derive-rprime", "builtin:homogenization-H4", "--out", out) == 0
    kind, R = fileformat.load(str(out))
    assert kind == "linmap"
    assert R == homogenization_rprime_closed_form(regular_comodule(sweedler_h4(Q)))


def test_build_to_stdout(capsys):
    assert run("build", "smash", "builtin:regular-kC2") == 0
    cap = capsys.readouterr()
    kind, A = fileformat.loads(cap.out)
    assert kind == "algebra" and A.dim == 4
    assert "verdict" in cap.err and "verdict" not in cap.out


def test_build_refuses_failing_input(corpus):
    assert run("build", "twisted-product", corpus("zero_twisting.yaml"), "--out", "/dev/null") == 1


BUILT = [
    ("double", "builtin:kC2", "algebra"),
    ("star-algebra", "builtin:sqt-kC2?r=triangular", "algebra"),
    ("derive-rprime", "builtin:sqt-double-kC2?r=triangular", "linmap"),
    ("smash", "builtin:regular-H4", "algebra"),
]


@pytest.mark.parametrize("fld", ["Q", "GF:5"])
@pytest.mark.parametrize("what,ref,kind", BUILT, ids=[b[0] for b in BUILT])
def test_build_round_trip(tmp_path, fld, what, ref, kind):
    out = tmp_path / "obj.yaml"
    assert run("build", what, ref, "--field", fld, "--out", out) == 0
    text = out.read_text()
    got, obj = fileformat.load(str(out))
    assert got == kind and fileformat.dumps(obj) == text
    if kind == "algebra":
        c1, r1 = report(tmp_path, "check", "algebra", out)
        again = tmp_path / "again.yaml"
        fileformat.dump(obj, str(again))
        c2, r2 = report(tmp_path, "check", "algebra", again)
        assert c1 == c2 == 0
        assert [s["verdict"] for s in r1["stages"]] == [s["verdict"] for s in r2["stages"]]
        assert again.read_text() == text


def test_file_field_wins(corpus, tmp_path):
    code, rep = report(tmp_path, "check", "sqt", corpus("kc2_gf5.yaml"))
    assert code == 0 and rep["field"] == "GF:5"


def test_list_builtins(capsys):
    assert run("list-builtins") == 0
    out = capsys.readouterr().out
    for name in ("builtin:<H>", "c-deformation-kC2", "sqt-double-<H>", "H4-dual"):
        assert name in out


def test_help_exits_zero(capsys):
    assert run("--help") == 0
