import io
import json

import pytest

from sl2q.cli import main
from sl2q.sampling import FAMILIES_BY_ALGEBRA


def run(*argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


# nf ---------------------------------------------------------------------


def test_nf_examples():
    assert run("nf", "Xp*Xm", "--n", "5") == (0, "C2p + q*C*X0 - q^2*X0^2\n")
    assert run("nf", "C*X0 - X0*C", "--n", "5") == (0, "0\n")


def test_nf_json():
    code, text = run("nf", "Xp*Xm", "--n", "5", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["normal_form"] == "C2p + q*C*X0 - q^2*X0^2"
    assert len(doc["terms"]) == 3


@pytest.mark.parametrize("expr", ["", "Xp*", "Y", "Xp^-1", "1/0", "q^-1 * 0^-1"])
def test_nf_parse_errors(expr):
    assert run("nf", expr, "--n", "5")[0] == 2


@pytest.mark.parametrize("n", ["2", "1", "0", "-4"])
def test_invalid_order(n):
    assert run("nf", "X0", "--n", n)[0] == 3
    assert run("centre-check", "--n", n)[0] == 3
    assert run("classify", "--n", n)[0] == 3
    assert run("rep-build", "periodic", "--n", n)[0] == 3


def test_missing_n_and_bad_flags():
    assert run("classify")[0] == 3
    assert run("classify", "--n", "x")[0] == 2
    assert run("bogus")[0] == 2


# centre-check -----------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 8])
def test_centre_check_all_pass(n):
    code, text = run("centre-check", "--n", str(n))
    assert code == 0
    assert "FAIL" not in text
    assert text.count("PASS") >= 7


def test_centre_check_json():
    code, text = run("centre-check", "--n", "5", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["l"] == 5
    assert all(c["passed"] for c in doc["checks"])


# rep-build / rep-verify ---------------------------------------------------


def test_rep_build_periodic(tmp_path):
    params = write(tmp_path, "p.json", {"c": 1, "c2p": 2, "x0": 0, "x_minus": ["1/1", "1/1", "0/1", "0/1"]})
    code, text = run("rep-build", "periodic", "--n", "5", "--params", params)
    doc = json.loads(text)
    assert code == 0 and doc["dim"] == 5 and len(doc["X0"]) == 5
    assert all(len(row) == 5 for row in doc["Xp"])


def test_rep_build_constraint_violations(tmp_path):
    big = write(tmp_path, "hw.json", {"n_dim": 6, "nu": 1, "c": 1})
    assert run("rep-build", "highest_weight", "--n", "5", "--params", big)[0] == 4
    half = write(tmp_path, "a.json", {"n_dim": 2, "nu": 1})
    assert run("rep-build", "highest_weight", "--n", "8", "--algebra", "A", "--params", half)[0] == 4
    assert run("rep-build", "highest_weight", "--n", "4", "--algebra", "A")[0] == 4


def test_rep_build_format_errors(tmp_path):
    bad = write(tmp_path, "bad.json", "{not json")
    assert run("rep-build", "periodic", "--n", "5", "--params", bad)[0] == 2
    missing = write(tmp_path, "m.json", {"c": 1})
    assert run("rep-build", "periodic", "--n", "5", "--params", missing)[0] == 2
    assert run("rep-build", "cyclic", "--n", "5", "--algebra", "F")[0] == 2
    assert run("rep-build", "periodic", "--n", "5", "--params", str(tmp_path / "nope.json"))[0] == 2


def test_rep_verify_malformed(tmp_path):
    assert run("rep-verify", write(tmp_path, "x.json", "[1, 2"))[0] == 2
    assert run("rep-verify", write(tmp_path, "y.json", {"n": 5}))[0] == 2
    assert run("rep-verify", write(tmp_path, "z.json", {"n": 2, "dim": 1, "c": 0, "X0": [[0]], "Xp": [[0]], "Xm": [[0]]}))[0] == 3


def test_rep_verify_detects_corruption(tmp_path):
    code, text = run("rep-build", "periodic", "--n", "5", "--seed", "3")
    doc = json.loads(text)
    doc["Xp"][1][0] = ["7/1", "0/1", "0/1", "0/1"]
    code, text = run("rep-verify", write(tmp_path, "r.json", doc))
    assert code == 1
    assert "FAIL" in text and "] = " in text
    code, text = run("rep-verify", write(tmp_path, "r.json", doc), "--format", "json")
    report = json.loads(text)
    assert code == 1 and not report["ok"]
    failed = [r for r in report["relations"] if not r["passed"]]
    assert failed and all(r["nonzero_entries"] for r in failed)


def test_rep_verify_generic_one_dim(tmp_path):
    code, text = run("rep-build", "one_dim_generic", "--n", "7")
    assert code == 0
    code, text = run("rep-verify", write(tmp_path, "g.json", text))
    assert code == 0 and "FAIL" not in text


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("algebra", ["B", "F", "A"])
def test_pipe_composition(n, algebra, monkeypatch):
    for family in FAMILIES_BY_ALGEBRA[algebra]:
        if (algebra, family, n) == ("A", "highest_weight", 4):
            continue  # no admissible module: the only small dimension is l/2
        for seed in range(20):
            code, built = run("rep-build", family, "--n", str(n), "--algebra", algebra, "--seed", str(seed))
            assert code == 0, (family, seed)
            code, text = run("rep-verify", "-", "--format", "json", stdin=built, monkeypatch=monkeypatch)
            report = json.loads(text)
            assert code == 0, (family, seed)
            assert report["scalar_relation"] is True
            if family == "cyclic":
                assert report["commutant_dimension"] == report["dim"]
            else:
                assert report["commutant_dimension"] == 1


def test_params_from_stdin(monkeypatch):
    code, text = run("rep-build", "highest_weight", "--n", "5", "--params", "-",
                     stdin='{"n_dim": 3, "nu": 2}', monkeypatch=monkeypatch)
    assert code == 0 and json.loads(text)["dim"] == 3


def test_deterministic_output():
    for argv in (
        ("rep-build", "periodic", "--n", "6"),
        ("classify", "--n", "5", "--format", "json"),
        ("centre-check", "--n", "5", "--format", "json"),
        ("nf", "Xm^2*Xp^3 + q*C", "--n", "7", "--format", "json"),
    ):
        assert run(*argv) == run(*argv)
    assert run("rep-build", "periodic", "--n", "6", "--seed", "1") != run("rep-build", "periodic", "--n", "6", "--seed", "2")


# classify -----------------------------------------------------------------


def test_classify_b_counts():
    code, text = run("classify", "--n", "5", "--format", "json")
    cases = json.loads(text)
    assert code == 0
    by = {}
    for rec in cases:
        by.setdefault(rec["case"], []).append(rec)
    assert sorted(by) == [1, 2, 3, 4]
    assert (by[1][0]["n_params"], by[1][0]["n_relations"]) == (5, 1)
    assert by[2][0]["n_params"] == 3 and by[4][0]["n_params"] == 3
    for rec in cases:
        assert {"case", "dims", "free_params", "constraints", "exclusions"} <= set(rec)


def test_classify_f_l2_nonexistence():
    code, text = run("classify", "--n", "4", "--algebra", "F")
    assert code == 0
    assert "excluded: dimension l = 2: no such module" in text


def test_classify_a_half_l():
    code, text = run("classify", "--n", "4", "--algebra", "A", "--format", "json")
    cases = json.loads(text)
    hw = [r for r in cases if r["case"] == 3]
    assert all(1 not in r["dims"] for r in hw)
    assert any("l/2 = 1" in x for r in hw for x in r["exclusions"])
