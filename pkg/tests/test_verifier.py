import pytest
from pydantic import ValidationError

from qverify.qlang import parse
from qverify.verifier.catalog import (
    IdentityRecord,
    catalog,
    export_catalog,
    get_record,
    load_catalog,
)
from qverify.verifier.engine import summarize, verify, verify_all
from qverify.verifier.report import Mismatch, VerificationReport

RECORD_IDS = [record.id for record in catalog()]


def test_catalog_shape():

    records = catalog()
    assert len(records) >= 30
    assert len(RECORD_IDS) == len(set(RECORD_IDS))
    for record in records:
        assert record.anchor
        assert record.min_order >= 8
        if record.fidelity == "corrected":
            assert record.note
    for required in ("L2.1-a", "L2.1-b", "L2.1-c", "L2.1-d", "HS-2diss", "M-0", "M-1", "M-2", "R-1", "R-7", "R-8"):
        assert required in RECORD_IDS


def test_lemma_record_encodes_the_f1_squared_dissection():

    record = get_record("L2.1-a")
    assert record.anchor == "2-1"
    assert record.lhs == parse("f1^2")
    assert record.rhs == parse("f2*f8^5/(f4^2*f16^2) - 2*q*f2*f16^2/f8")


def test_corrected_records():

    assert get_record("3-6c").fidelity == "corrected"
    assert get_record("R-8").fidelity == "corrected"
    assert get_record("3-12a").fidelity == "corrected"
    assert get_record("3-6c").verbatim_rhs is not None


def test_unknown_record():

    with pytest.raises(KeyError):
        get_record("9-99")


@pytest.mark.parametrize("record_id", RECORD_IDS)
def test_every_record_passes_at_low_order(record_id):

    report = verify(get_record(record_id), 8)
    assert report.status == "pass", report.error or report.first_mismatch
    assert report.order_checked == 8


@pytest.mark.parametrize("record_id", RECORD_IDS)
def test_perturbed_record_fails_at_q3(record_id):

    report = verify(get_record(record_id).perturbed(3), 8)
    assert report.status == "fail"
    assert report.first_mismatch.exponent == 3


@pytest.mark.parametrize("record_id", ["M-0", "M-1", "M-2"])
def test_overpartition_dissections_hold_exactly_to_500(record_id):

    report = verify(get_record(record_id), 500)
    assert report.passed


def test_overpartition_dissection_constants():

    from qverify.qlang import evaluate

    assert evaluate(get_record("M-0").rhs, 8)[0] == 2
    assert evaluate(get_record("M-1").rhs, 8)[0] == 8
    m2 = evaluate(get_record("M-2").rhs, 8)
    assert m2.coefficients()[:2] == [64, 1472]


@pytest.mark.parametrize("record_id", ["3-6c", "3-12a"])
def test_printed_forms_fail(record_id):

    report = verify(get_record(record_id).as_verbatim(), 40)
    assert report.status == "fail"


def test_printed_R8_fails_at_constant_term():

    report = verify(get_record("R-8").as_verbatim(), 8)
    assert report.status == "fail"
    assert report.first_mismatch == Mismatch(exponent=0, lhs=0, rhs=2)


def test_as_verbatim_keeps_verbatim_records():

    record = get_record("M-2")
    assert record.as_verbatim() is record


def test_order_below_minimum_is_rejected():

    with pytest.raises(ValueError):
        verify(get_record("M-2"), 7)


def test_evaluation_failures_become_error_reports():

    record = IdentityRecord(id="bad", anchor="test", lhs="shiftdiv(f1, 1)", rhs="f1")
    report = verify(record, 10)
    assert report.status == "error"
    assert "q^0" in report.error
    assert report.first_mismatch is None


def test_audit_mode_agrees():

    for record_id in ("3-9", "R-1", "1-12"):
        record = get_record(record_id)
        assert verify(record, 20, audit=True) == verify(record, 20)


def test_order_monotone():

    record = get_record("3-13")
    assert verify(record, 30).passed
    assert verify(record, 12).passed


@pytest.mark.parametrize(
    "fields",
    [
        dict(anchor="", lhs="f1", rhs="f1"),
        dict(anchor="x", lhs="f1", rhs="f1", min_order=4),
        dict(anchor="x", lhs="f1", rhs="f1", relation="eq", modulus=5),
        dict(anchor="x", lhs="f1", rhs="f1", relation="cong", modulus=1),
        dict(anchor="x", lhs="f1", rhs="f1", fidelity="corrected"),
        dict(anchor="x", lhs="f1 +", rhs="f1"),
        dict(anchor="x", lhs=3, rhs="f1"),
    ],
)
def test_invalid_records(fields):

    with pytest.raises((ValidationError, ValueError)):
        IdentityRecord(id="x", **fields)


def test_report_invariants():

    with pytest.raises(ValidationError):
        VerificationReport(id="x", status="fail", order_checked=8)
    with pytest.raises(ValidationError):
        VerificationReport(
            id="x", status="pass", order_checked=8, first_mismatch=Mismatch(exponent=1, lhs=1, rhs=2)
        )


def test_report_equality_ignores_timing():

    a = VerificationReport(id="x", status="pass", order_checked=8, elapsed_ms=1.0)
    b = VerificationReport(id="x", status="pass", order_checked=8, elapsed_ms=2.5)
    assert a == b
    assert a.to_json_dict(include_timings=False) == {"id": "x", "status": "pass", "order": 8}
    assert "ms" in a.to_json_dict()


def test_verify_all_is_deterministic():

    records = [get_record(i) for i in ("M-2", "L2.1-a", "3-14", "R-3", "1-5", "3-1")]
    sequential = verify_all(8, records=records)
    parallel = verify_all(8, parallel=True, records=records)
    assert [r.id for r in sequential] == [r.id for r in records]
    assert sequential == parallel
    assert summarize(sequential) == {"pass": 6, "fail": 0, "error": 0}


@pytest.mark.slow
def test_full_catalog_at_200():

    reports = verify_all(200, parallel=True)
    failing = [r for r in reports if not r.passed]
    assert failing == []
    assert len(reports) == len(RECORD_IDS)


def test_export_and_load_round_trip(tmp_path):

    path = tmp_path / "catalog.yaml"
    text = export_catalog(catalog(), path)
    assert path.read_text(encoding="utf-8") == text
    assert load_catalog(path) == catalog()
    assert load_catalog(text) == catalog()
    assert load_catalog(str(path)) == catalog()


def test_loaded_records_verify(tmp_path):

    records = [get_record("M-1"), get_record("3-6c")]
    loaded = load_catalog(export_catalog(records))
    assert loaded[1].verbatim_rhs == records[1].verbatim_rhs
    assert all(r.passed for r in verify_all(8, records=loaded))


def test_load_catalog_rejects_non_list():

    with pytest.raises(ValueError):
        load_catalog("id: x\nanchor: y\n")


def test_verify_by_record_id():

    report = verify("M-2", 200)
    assert report.passed
    assert report == verify(get_record("M-2"), 200)
    with pytest.raises(KeyError):
        verify("9-99", 8)


def test_R8_record_holds_to_300():

    record = get_record("R-8")
    assert "f6^9" in record.model_dump()["rhs"]
    assert verify(record, 300).passed
