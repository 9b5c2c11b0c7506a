# qverify/verifier/report.py
import time
from typing import Dict, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from qverify.series import TruncatedSeries, first_mismatch


class Mismatch(BaseModel):
    exponent: int
    lhs: int
    rhs: int


class VerificationReport(BaseModel):
    id: str
    status: Literal["pass", "fail", "error"]
    order_checked: int = Field(ge=0)
    first_mismatch: Optional[Mismatch] = None
    elapsed_ms: float = 0.0
    error: Optional[str] = None

    @model_validator(mode="after")
    def _mismatch_matches_status(self):
        if self.status == "fail" and self.first_mismatch is None:
            raise ValueError("a failing report must name its first mismatch")
        if self.status == "pass" and self.first_mismatch is not None:
            raise ValueError("a passing report cannot carry a mismatch")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __eq__(self, other):
        if not isinstance(other, VerificationReport):
            return NotImplemented
        # wall-clock time is not part of the outcome
        return self.model_dump(exclude={"elapsed_ms"}) == other.model_dump(exclude={"elapsed_ms"})

    def to_json_dict(self, include_timings: bool = True) -> Dict:
        data = {"id": self.id, "status": self.status, "order": self.order_checked}
        if self.first_mismatch is not None:
            data["first_mismatch"] = self.first_mismatch.model_dump()
        if self.error is not None:
            data["error"] = self.error
        if include_timings:
            data["ms"] = round(self.elapsed_ms, 3)
        return data


def elapsed_ms(started: float) -> float:
    return (time.perf_counter() - started) * 1000.0


def compare_series(record_id: str, lhs: TruncatedSeries, rhs: TruncatedSeries, started: float) -> VerificationReport:
    """Coefficient-wise comparison of both sides up to their common order."""
    found = first_mismatch(lhs, rhs)
    order = min(lhs.order, rhs.order)
    if found is None:
        return VerificationReport(id=record_id, status="pass", order_checked=order, elapsed_ms=elapsed_ms(started))
    exponent, left, right = found
    return VerificationReport(
        id=record_id,
        status="fail",
        order_checked=order,
        first_mismatch=Mismatch(exponent=exponent, lhs=left, rhs=right),
        elapsed_ms=elapsed_ms(started),
    )


def error_report(record_id: str, order: int, message: str, started: float) -> VerificationReport:
    return VerificationReport(
        id=record_id, status="error", order_checked=order, error=message, elapsed_ms=elapsed_ms(started)
    )
