# qverify/series/special.py
"""Named q-series: eta products, theta functions, q-Pochhammer products."""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Tuple

from qverify.errors import PreconditionError
from qverify.series.backends import backend_for
from qverify.series.core import (
    Monomial,
    TruncatedSeries,
    inverse,
    mul,
    negate_q,
    one,
    pow_series,
)


def _pentagonal_terms(order: int) -> Iterator[Tuple[int, int]]:
    """``(exponent, sign)`` of Euler's pentagonal series up to ``q^order``."""
    yield 0, 1
    k = 1
    while k * (3 * k - 1) // 2 <= order:
        sign = -1 if k % 2 else 1
        yield k * (3 * k - 1) // 2, sign
        if k * (3 * k + 1) // 2 <= order:
            yield k * (3 * k + 1) // 2, sign
        k += 1


@lru_cache(maxsize=256)
def eta_f(n: int, order: int, modulus: int = 0) -> TruncatedSeries:
    """``f_n = prod_{k>=1} (1 - q^{n k})``, built from the pentagonal number theorem."""
    if n < 1:
        raise PreconditionError(f"eta level must be positive, got {n}")
    backend = backend_for(modulus)
    arr = backend.zeros(order + 1)
    for exponent, sign in _pentagonal_terms(order // n):
        arr[n * exponent] = backend.reduce_scalar(sign)
    return TruncatedSeries(arr, backend)


@dataclass(frozen=True)
class EtaQuotient:
    """``prod_n f_n^{e_n}``; levels are positive and exponents nonzero."""

    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: Dict[int, int] = {}
        for level, exponent in self.factors:
            if level < 1:
                raise ValueError(f"eta level must be positive, got {level}")
            merged[level] = merged.get(level, 0) + exponent
        object.__setattr__(
            self, "factors", tuple(sorted((n, e) for n, e in merged.items() if e != 0))
        )

    @classmethod
    def of(cls, exponents: Mapping[int, int]) -> "EtaQuotient":
        return cls(tuple(exponents.items()))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        return EtaQuotient(self.factors + other.factors)

    def __truediv__(self, other: "EtaQuotient") -> "EtaQuotient":
        return EtaQuotient(self.factors + tuple((n, -e) for n, e in other.factors))

    def __pow__(self, k: int) -> "EtaQuotient":
        return EtaQuotient(tuple((n, e * k) for n, e in self.factors))

    def __str__(self):
        if not self.factors:
            return "1"

        def product(items):
            return "*".join(f"f{n}" if e == 1 else f"f{n}^{e}" for n, e in items)

        top = [(n, e) for n, e in self.factors if e > 0]
        bottom = [(n, -e) for n, e in self.factors if e < 0]
        text = product(top) if top else "1"
        if bottom:
            below = product(bottom)
            text += f"/({below})" if len(bottom) > 1 else f"/{below}"
        return text


@lru_cache(maxsize=1024)
def _eta_power(level: int, exponent: int, order: int, modulus: int) -> TruncatedSeries:
    base = eta_f(level, order, modulus)
    if exponent < 0:
        return pow_series(inverse(base), -exponent)
    return pow_series(base, exponent)


def eta_quotient(quotient: EtaQuotient, order: int, modulus: int = 0) -> TruncatedSeries:
    result = one(order, modulus)
    for level, exponent in quotient.factors:
        result = mul(result, _eta_power(level, exponent, order, modulus))
    return result


def pochhammer(a: Monomial, level: int, order: int, modulus: int = 0) -> TruncatedSeries:
    """``(a; q^level)_inf = prod_{n>=0} (1 - a q^{level n})``."""
    if level < 1:
        raise PreconditionError(f"pochhammer level must be positive, got {level}")
    if a.exponent == 0 and a.sign == 1:
        raise PreconditionError("(1; q^L) vanishes identically")
    backend = backend_for(modulus)
    arr = backend.zeros(order + 1)
    arr[0] = 1
    exponent = a.exponent
    while exponent <= order:
        if exponent == 0:
            arr = arr * 2
        else:
            # multiply by (1 - sign q^exponent)
            arr[exponent:] = arr[exponent:] - a.sign * arr[: order + 1 - exponent]
        arr = backend.normalize(arr)
        exponent += level
    return TruncatedSeries(arr, backend)


def _theta_exponent(alpha: int, beta: int, n: int) -> int:
    return alpha * n * (n + 1) // 2 + beta * n * (n - 1) // 2


def theta_f(a: Monomial, b: Monomial, order: int, modulus: int = 0) -> TruncatedSeries:
    """Ramanujan's ``f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}``."""
    alpha, beta = a.exponent, b.exponent
    if alpha + beta < 1:
        raise PreconditionError("theta_f needs a.exponent + b.exponent >= 1")
    backend = backend_for(modulus)
    arr = backend.zeros(order + 1)
    total = alpha + beta
    root = math.isqrt((alpha - beta) ** 2 + 8 * order * total)
    # both tails grow quadratically; one extra term on each side as a guard
    n_hi = (root - (alpha - beta)) // (2 * total) + 1
    n_lo = -((root + (alpha - beta)) // (2 * total) + 1)
    for n in range(n_lo, n_hi + 1):
        e = _theta_exponent(alpha, beta, n)
        if e > order:
            continue
        sign = a.sign ** (n * (n + 1) // 2 % 2) * b.sign ** (n * (n - 1) // 2 % 2)
        arr[e] += sign
    return TruncatedSeries(backend.normalize(arr), backend)


def phi(order: int, modulus: int = 0, level: int = 1) -> TruncatedSeries:
    """``phi(q^level) = 1 + 2 sum_{k>=1} q^{level k^2}``."""
    if level < 1:
        raise PreconditionError(f"phi level must be positive, got {level}")
    backend = backend_for(modulus)
    arr = backend.zeros(order + 1)
    arr[0] = 1
    k = 1
    while level * k * k <= order:
        arr[level * k * k] = 2
        k += 1
    return TruncatedSeries(arr, backend)


PHI_ETA = EtaQuotient.of({2: 5, 1: -2, 4: -2})
F_POS_ETA = EtaQuotient.of({2: 3, 1: -1, 4: -1})
PHI_NEG_ETA = EtaQuotient.of({1: 2, 2: -1})


def phi_eta(order: int, modulus: int = 0) -> TruncatedSeries:
    """``phi(q)`` from its eta-quotient form ``f_2^5 / (f_1^2 f_4^2)``."""
    return eta_quotient(PHI_ETA, order, modulus)


def phi_neg(order: int, modulus: int = 0) -> TruncatedSeries:
    """``phi(-q)``."""
    return negate_q(phi(order, modulus))


def f_pos(order: int, modulus: int = 0) -> TruncatedSeries:
    """``f(q) = (-q; -q)_inf = f_2^3 / (f_1 f_4)``."""
    return eta_quotient(F_POS_ETA, order, modulus)


def D_series(order: int, modulus: int = 0) -> TruncatedSeries:
    """``sum_{n in Z} q^{5n^2 + 2n}``."""
    return theta_f(Monomial(1, 7), Monomial(1, 3), order, modulus)


def E_series(order: int, modulus: int = 0) -> TruncatedSeries:
    """``sum_{n in Z} q^{5n^2 + 4n}``."""
    return theta_f(Monomial(1, 9), Monomial(1, 1), order, modulus)
