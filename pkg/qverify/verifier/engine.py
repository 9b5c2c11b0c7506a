# qverify/verifier/engine.py
import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, Iterable, Iterator, List, Optional, Union

from qverify.config import DEFAULT_ORDER, WORKERS
from qverify.errors import QVerifyError
from qverify.qlang import Evaluator
from qverify.series import reduce_mod
from qverify.verifier.catalog import IdentityRecord, catalog, get_record
from qverify.verifier.report import VerificationReport, compare_series, error_report


def verify(
    record: Union[str, IdentityRecord], order: Optional[int] = None, audit: bool = False
) -> VerificationReport:
    """Check one identity, given by record or catalog id, coefficient-wise to ``q^order``.

    Congruences are evaluated in residues modulo the record's modulus; with
    ``audit`` both sides are computed over the integers and reduced at the end.
    """
    if isinstance(record, str):
        record = get_record(record)
    order = DEFAULT_ORDER if order is None else order
    if order < record.min_order:
        raise ValueError(f"{record.id} needs order >= {record.min_order}, got {order}")

    started = time.perf_counter()
    logging.info(f"Verifying {record.id} at order {order}")
    try:
        modulus = record.modulus if record.relation == "cong" and not audit else 0
        evaluator = Evaluator(modulus)
        lhs = evaluator.evaluate(record.lhs, order)
        rhs = evaluator.evaluate(record.rhs, order)
        if record.relation == "cong" and audit:
            lhs, rhs = reduce_mod(lhs, record.modulus), reduce_mod(rhs, record.modulus)
        report = compare_series(record.id, lhs, rhs, started)
    except QVerifyError as exc:
        report = error_report(record.id, order, str(exc), started)
    except Exception as exc:
        logging.exception(f"Unexpected error while verifying {record.id}")
        report = error_report(record.id, order, f"{type(exc).__name__}: {exc}", started)
    logging.info(f"{record.id}: {report.status} in {report.elapsed_ms:.1f} ms")
    return report


def iter_verify(
    records: Iterable[IdentityRecord],
    order: Optional[int] = None,
    parallel: bool = False,
    audit: bool = False,
) -> Iterator[VerificationReport]:
    """Yield reports as they finish; in parallel mode that is completion order."""
    records = list(records)
    if not parallel:
        for record in records:
            yield verify(record, order, audit)
        return
    with ThreadPoolExecutor(max_workers=WORKERS) as executor:
        future_to_record = {executor.submit(verify, record, order, audit): record for record in records}
        for future in as_completed(future_to_record):
            yield future.result()


def verify_all(
    order: Optional[int] = None,
    parallel: bool = False,
    audit: bool = False,
    records: Optional[Iterable[IdentityRecord]] = None,
) -> List[VerificationReport]:
    """Reports for every record, in catalog order whatever the scheduling."""
    records = catalog() if records is None else list(records)
    position = {record.id: i for i, record in enumerate(records)}
    reports = list(iter_verify(records, order, parallel, audit))
    return sorted(reports, key=lambda report: position[report.id])


def summarize(reports: Iterable[VerificationReport]) -> Dict[str, int]:
    counts = {"pass": 0, "fail": 0, "error": 0}
    for report in reports:
        counts[report.status] += 1
    return counts
