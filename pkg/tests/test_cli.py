import json
import subprocess
import sys

import pytest

from schubcalc.cli import main, paper_checks


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pieri_text(capsys):
    code, out, _ = run(capsys, "pieri", "--n", "7", "--i", "6,3,2", "--p", "5", "--format", "text")
    assert code == 0
    terms = {t.strip() for t in out.strip().split("+")}
    assert terms == {"2*sigma(7,6,3)", "4*sigma(7,5,3,1)", "2*sigma(7,6,2,1)", "2*sigma(7,4,3,2)", "sigma(6,5,3,2)"}


def test_pieri_json(capsys):
    code, out, _ = run(capsys, "pieri", "--n", "7", "--i", "6,3,2", "--p", "5")
    data = json.loads(out)
    assert code == 0 and data["n"] == 7
    assert {tuple(t["partition"]): int(t["coeff"]) for t in data["terms"]} == {
        (7, 6, 3): 2, (7, 5, 3, 1): 4, (7, 6, 2, 1): 2, (7, 4, 3, 2): 2, (6, 5, 3, 2): 1,
    }


def test_paren(capsys):
    code, out, _ = run(capsys, "paren", "--j", "6,2")
    assert code == 0 and json.loads(out)["value"] == 210
    code, out, _ = run(capsys, "paren", "--j", "6,2", "--route", "all")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["route"] for r in rows] == ["pfaffian", "recursion", "series"]
    assert {r["value"] for r in rows} == {210}


def test_schur_json_schema(capsys):
    code, out, _ = run(capsys, "schur", "--jt", "--i", "1", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "vars": ["a1", "a2"],
        "terms": [{"exp": [1, 0], "coeff": "1"}, {"exp": [0, 1], "coeff": "1"}],
    }


@pytest.mark.parametrize("flag", ["--jt", "--bialternant", "--operator", "--tableau"])
def test_schur_routes_agree(capsys, flag):
    _, out, _ = run(capsys, "schur", flag, "--i", "3,1", "--n", "3")
    _, ref, _ = run(capsys, "schur", "--i", "3,1", "--n", "3")
    assert out == ref


@pytest.mark.parametrize(
    "argv,key,expected",
    [
        (["bn-euler", "--g", "4", "--d", "3", "--r", "1"], "value", 2),
        (["prym", "--r", "2"], "value", "1/3"),
        (["lg-mul", "--n", "2", "--x", "1", "--y", "1"], "terms", [{"partition": [2], "coeff": "2"}]),
        (["pieri", "--n", "7", "--i", "6,3,2", "--p", "5", "--j", "7,5,3,1"], "value", 4),
        (["bracket", "--j", "7,4,1,0"], "value", 87),
    ],
)
def test_value_commands(capsys, argv, key, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)[key] == expected


def test_divdiff_and_gysin(capsys):
    _, out, _ = run(capsys, "divdiff", "--poly", "a1^2", "--n", "2", "--word", "1")
    assert json.loads(out)["terms"] == [{"exp": [1, 0], "coeff": "1"}, {"exp": [0, 1], "coeff": "1"}]
    _, a, _ = run(capsys, "gysin", "--kind", "projective", "--poly", "a1^2", "--n", "3")
    _, b, _ = run(capsys, "gysin", "--kind", "projective", "--poly", "a1^2", "--n", "3", "--route", "coset")
    assert a == b and json.loads(a)["terms"] == [{"exp": [0, 0, 0], "coeff": "1"}]


def test_usage_error_exit_code(capsys):
    code, _, err = run(capsys, "pieri", "--n", "7")
    assert code == 2 and "required" in err
    code, _, _ = run(capsys, "no-such-command")
    assert code == 2
    code, _, _ = run(capsys, "paren", "--j", "6,x")
    assert code == 2


@pytest.mark.parametrize(
    "argv,name",
    [
        (["pieri", "--n", "2", "--i", "3", "--p", "1"], "DomainError"),
        (["paren", "--j", "2,2"], "DomainError"),
        (["gtp", "--m", "2", "--n", "2", "--r", "3"], "DomainError"),
        (["gysin", "--kind", "projective", "--poly", "a2", "--n", "3"], "DomainError"),
        (["divdiff", "--poly", "z1", "--n", "2", "--word", "1"], "DomainError"),
    ],
)
def test_domain_error_object(capsys, argv, name):
    code, out, _ = run(capsys, *argv)
    err = json.loads(out)
    assert code == 3
    assert err["error"] == name and err["command"] == argv[0] and err["precondition"]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "paren", "--j", "6,2", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["value"] == 210


def test_paper_tables_pass(capsys):
    code, out, _ = run(capsys, "paper-tables")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == len(paper_checks()) and all(r["status"] == "PASS" for r in rows)


def test_paper_tables_extended_reports_misprint(capsys):
    code, out, _ = run(capsys, "paper-tables", "--extended")
    rows = [json.loads(line) for line in out.splitlines()]
    failed = [r for r in rows if r.get("status") == "FAIL"]
    assert code == 1
    assert [r["check"] for r in failed] == ["F_4 [6,4,1,0]"]


def test_output_is_byte_stable():
    argv = [sys.executable, "-m", "schubcalc", "segre", "--kind", "tensor", "--degree", "3", "--n", "2", "--m", "2"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
