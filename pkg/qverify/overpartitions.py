# qverify/overpartitions.py
"""Overpartition counts and arithmetic-progression congruence scans."""

import logging
from typing import List

import numpy as np
from pydantic import BaseModel, Field, model_validator

from qverify.series import EtaQuotient, TruncatedSeries, eta_quotient

OVERPARTITION_ETA = EtaQuotient.of({2: 1, 1: -2})


def overpartition_gf(order: int, modulus: int = 0) -> TruncatedSeries:
    """``sum p(n) q^n = f_2 / f_1^2`` to the given order."""
    return eta_quotient(OVERPARTITION_ETA, order, modulus)


def _apply_overline_factor(counts: np.ndarray, k: int) -> np.ndarray:
    """Multiply by ``(1 + q^k)/(1 - q^k) = 1 + 2q^k + 2q^{2k} + ...``."""
    n = len(counts)
    rows = -(-n // k)
    padded = np.zeros(rows * k, dtype=object)
    padded[:n] = counts
    grid = padded.reshape(rows, k)
    # tail[i, j] = sum of grid[0..i-1, j], i.e. everything at lower exponents in the same class mod k
    tail = np.zeros_like(grid)
    tail[1:] = np.cumsum(grid[:-1], axis=0)
    return (grid + 2 * tail).reshape(-1)[:n]


def overpartition_oracle(n_max: int) -> List[int]:
    """Exact counts ``p(0) .. p(n_max)`` from the product ``prod (1+q^k)/(1-q^k)``.

    Independent of the series inverse so it can audit ``overpartition_gf``.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    counts = np.zeros(n_max + 1, dtype=object)
    counts[0] = 1
    for k in range(1, n_max + 1):
        counts = _apply_overline_factor(counts, k)
    return [int(c) for c in counts]


class CongruenceClaim(BaseModel):
    """``p(a n + b) == 0 (mod m)`` for ``0 <= n <= n_max``."""

    a: int = Field(ge=1)
    b: int = Field(ge=0)
    m: int = Field(ge=2)
    n_max: int = Field(ge=0)

    @model_validator(mode="after")
    def _residue_in_range(self):
        if self.b >= self.a:
            raise ValueError(f"offset b={self.b} must be smaller than the step a={self.a}")
        return self

    def __str__(self):
        return f"p({self.a}n+{self.b}) == 0 (mod {self.m}) for n <= {self.n_max}"


class CongruenceViolation(BaseModel):
    n: int
    residue: int


def scan_congruence(claim: CongruenceClaim, exact: bool = False) -> List[CongruenceViolation]:
    """All ``n`` violating the claim, in ascending order.

    The default path works in residues mod ``m``; ``exact`` recomputes the
    counts with the product oracle and reduces afterwards.
    """
    top = claim.a * claim.n_max + claim.b
    if exact:
        values = [c % claim.m for c in overpartition_oracle(top)]
    else:
        values = overpartition_gf(top, claim.m).coefficients()
    violations = [
        CongruenceViolation(n=n, residue=values[claim.a * n + claim.b])
        for n in range(claim.n_max + 1)
        if values[claim.a * n + claim.b] != 0
    ]
    logging.info(f"Scanned {claim}: {len(violations)} violation(s)")
    return violations
