import json

import pytest

from qverify.__main__ import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from qverify.verifier.catalog import catalog, load_catalog


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_oracle_json(capsys):

    code, out, _ = run(capsys, "oracle", "--nmax", "10", "--json")
    assert code == EXIT_OK
    assert json.loads(out) == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232]


def test_oracle_table(capsys):

    code, out, _ = run(capsys, "oracle", "--nmax", "3")
    assert code == EXIT_OK
    assert out.splitlines() == ["0\t1", "1\t2", "2\t4", "3\t8"]


def test_expand_json(capsys):

    code, out, _ = run(capsys, "expand", "f2/f1^2", "--order", "5", "--json")
    assert code == EXIT_OK
    assert json.loads(out) == {"order": 5, "modulus": 0, "coefficients": [1, 2, 4, 8, 14, 24]}


def test_expand_modular(capsys):

    code, out, _ = run(capsys, "expand", "f1", "--order", "5", "--mod", "7", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["coefficients"] == [1, 6, 6, 0, 0, 1]


def test_expand_parse_error(capsys):

    code, _, err = run(capsys, "expand", "f1^", "--order", "5")
    assert code == EXIT_USAGE
    assert "f1^\n  ^" in err


def test_expand_evaluation_error(capsys):

    code, _, _ = run(capsys, "expand", "shiftdiv(f1, 1)", "--order", "5")
    assert code == EXIT_USAGE


def test_expand_negative_modulus(capsys):

    code, out, err = run(capsys, "expand", "f1", "--order", "5", "--mod", "-1")
    assert code == EXIT_USAGE
    assert out == ""
    assert "-1" in err


def test_scan_conjecture(capsys):

    code, out, _ = run(capsys, "scan", "--step", "40", "--offset", "35", "--mod", "40", "--nmax", "100", "--json")
    assert code == EXIT_OK
    assert json.loads(out) == []


def test_scan_with_violations(capsys):

    code, out, _ = run(capsys, "scan", "--step", "2", "--offset", "0", "--mod", "3", "--nmax", "20", "--json")
    assert code == EXIT_FAILED
    violations = json.loads(out)
    assert violations[0] == {"n": 0, "residue": 1}


def test_scan_rejects_bad_claim(capsys):

    code, _, _ = run(capsys, "scan", "--step", "4", "--offset", "4", "--mod", "8", "--nmax", "5")
    assert code == EXIT_USAGE


def test_verify_json_is_reproducible(capsys):

    argv = ("verify", "M-2", "--order", "8", "--json", "--no-timings")
    code, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert first == second
    assert json.loads(first) == [{"id": "M-2", "status": "pass", "order": 8}]


def test_verify_text_output(capsys):

    code, out, _ = run(capsys, "verify", "L2.1-a", "--order", "8")
    assert code == EXIT_OK
    assert "L2.1-a" in out


def test_verify_printed_form_fails(capsys):

    code, out, _ = run(capsys, "verify", "R-8", "--order", "8", "--verbatim", "--json", "--no-timings")
    assert code == EXIT_FAILED
    report = json.loads(out)[0]
    assert report["status"] == "fail"
    assert report["first_mismatch"] == {"exponent": 0, "lhs": 0, "rhs": 2}


@pytest.mark.parametrize(
    "argv",
    [
        ("verify",),
        ("verify", "M-2", "--all"),
        ("verify", "9-99"),
        ("verify", "M-2", "--order", "4"),
    ],
)
def test_verify_usage_errors(capsys, argv):

    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_catalog_export_and_reuse(capsys, tmp_path):

    path = tmp_path / "catalog.yaml"
    code, _, _ = run(capsys, "catalog", "--export", str(path))
    assert code == EXIT_OK
    assert load_catalog(path) == catalog()

    code, out, _ = run(capsys, "verify", "3-14", "--catalog", str(path), "--order", "8", "--json")
    assert code == EXIT_OK
    assert json.loads(out)[0]["id"] == "3-14"


def test_catalog_listing(capsys):

    code, out, _ = run(capsys, "catalog")
    assert code == EXIT_OK
    assert len(out.splitlines()) == len(catalog())


def test_pk(capsys):

    code, out, _ = run(capsys, "pk", "--order", "30", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["F_divisible_by_5"] is True
    assert {r["id"] for r in data["reports"]} == {"R-8", "2-11", "2-12", "2-13", "R-6", "R-7"}
    assert all(r["status"] == "pass" for r in data["reports"])


def test_language_option(capsys):

    code, out, _ = run(capsys, "--language", "zh_CN", "verify", "3-14", "--order", "8")
    assert code == EXIT_OK
    assert "通过" in out
