# qverify/series/core.py
"""Truncated power series in q with integer or residue coefficients.

A ``TruncatedSeries`` of order ``N`` records the coefficients of
``q^0 .. q^N`` and makes no claim about anything above ``q^N``. Values are
immutable; every operation returns a new series.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from qverify.errors import (
    ModulusMismatchError,
    NonUnitConstantError,
    PreconditionError,
)
from qverify.series.backends import CoefficientBackend, backend_for


@dataclass(frozen=True)
class Monomial:
    """``sign * q^exponent`` with ``sign`` in {+1, -1}."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"monomial sign must be +1 or -1, got {self.sign}")
        if self.exponent < 0:
            raise ValueError(f"monomial exponent must be non-negative, got {self.exponent}")

    def __str__(self):
        body = "1" if self.exponent == 0 else f"q^{self.exponent}"
        return f"-{body}" if self.sign < 0 else body


class TruncatedSeries:
    __slots__ = ("_coeffs", "_backend")

    def __init__(self, coeffs: np.ndarray, backend: CoefficientBackend):
        if len(coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant term")
        self._backend = backend
        self._coeffs = backend.freeze(backend.normalize(np.asarray(coeffs)))

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def modulus(self) -> int:
        return self._backend.modulus

    @property
    def backend(self) -> CoefficientBackend:
        return self._backend

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the coefficient array."""
        return self._coeffs

    def coefficients(self) -> List[int]:
        return [int(c) for c in self._coeffs]

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self._coeffs))

    def is_zero(self) -> bool:
        return self.nonzero_count() == 0

    def __getitem__(self, exponent: int) -> int:
        if not 0 <= exponent <= self.order:
            raise IndexError(f"exponent {exponent} outside 0..{self.order}")
        return int(self._coeffs[exponent])

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.order == other.order
            and self.coefficients() == other.coefficients()
        )

    def __hash__(self):
        return hash((self.modulus, tuple(self.coefficients())))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coefficients()[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{head}{more}], order={self.order}, modulus={self.modulus})"

    def __add__(self, other):
        return add(self, _promote(other, self))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _promote(other, self))

    def __rsub__(self, other):
        return sub(_promote(other, self), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return divide(self, _promote(other, self))

    def __pow__(self, k: int):
        return pow_series(self, k)


def _promote(value, like: TruncatedSeries) -> TruncatedSeries:
    if isinstance(value, TruncatedSeries):
        return value
    if isinstance(value, int):
        return constant(value, like.order, like.modulus)
    return NotImplemented


def _wrap(arr: np.ndarray, backend: CoefficientBackend) -> TruncatedSeries:
    return TruncatedSeries(arr, backend)


def _check_same_ring(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.modulus != b.modulus:
        raise ModulusMismatchError(a.modulus, b.modulus)


def make_series(coeffs: Iterable[int], modulus: int = 0) -> TruncatedSeries:
    """Series whose order is ``len(coeffs) - 1``; residues are reduced into ``[0, m)``."""
    backend = backend_for(modulus)
    return _wrap(backend.coerce(coeffs), backend)


def zero(order: int, modulus: int = 0) -> TruncatedSeries:
    backend = backend_for(modulus)
    return _wrap(backend.zeros(order + 1), backend)


def constant(value: int, order: int, modulus: int = 0) -> TruncatedSeries:
    backend = backend_for(modulus)
    arr = backend.zeros(order + 1)
    arr[0] = backend.reduce_scalar(value)
    return _wrap(arr, backend)


def one(order: int, modulus: int = 0) -> TruncatedSeries:
    return constant(1, order, modulus)


def monomial_series(mono: Monomial, order: int, modulus: int = 0) -> TruncatedSeries:
    """``sign * q^exponent`` as a series; zero when the exponent exceeds the order."""
    backend = backend_for(modulus)
    arr = backend.zeros(order + 1)
    if mono.exponent <= order:
        arr[mono.exponent] = backend.reduce_scalar(mono.sign)
    return _wrap(arr, backend)


def truncate(s: TruncatedSeries, order: int) -> TruncatedSeries:
    if order > s.order:
        raise PreconditionError(f"cannot extend a series of order {s.order} to order {order}")
    if order == s.order:
        return s
    return _wrap(s.array[: order + 1].copy(), s.backend)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same_ring(a, b)
    n = min(a.order, b.order) + 1
    return _wrap(a.array[:n] + b.array[:n], a.backend)


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same_ring(a, b)
    n = min(a.order, b.order) + 1
    return _wrap(a.array[:n] - b.array[:n], a.backend)


def neg(s: TruncatedSeries) -> TruncatedSeries:
    return _wrap(-s.array, s.backend)


def scale(s: TruncatedSeries, c: int) -> TruncatedSeries:
    c = s.backend.reduce_scalar(c)
    return _wrap(s.array * c, s.backend)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product, of order ``min(a.order, b.order)``."""
    _check_same_ring(a, b)
    length = min(a.order, b.order) + 1
    return _wrap(a.backend.convolve(a.array, b.array, length), a.backend)


def shift_mul(s: TruncatedSeries, j: int) -> TruncatedSeries:
    """Multiply by ``q^j``; the order is unchanged."""
    if j < 0:
        raise PreconditionError(f"shift must be non-negative, got {j}")
    arr = s.backend.zeros(s.order + 1)
    if j <= s.order:
        arr[j:] = s.array[: s.order + 1 - j]
    return _wrap(arr, s.backend)


def _is_sparse(s: TruncatedSeries) -> bool:
    return s.nonzero_count() <= 4 * math.isqrt(s.order + 1) + 8


def _unit(s: TruncatedSeries) -> int:
    c0 = int(s.array[0])
    u = s.backend.unit_inverse(c0)
    if u is None:
        raise NonUnitConstantError(c0, s.modulus)
    return u


def inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be a unit."""
    u = _unit(s)
    length = s.order + 1
    if _is_sparse(s):
        rhs = s.backend.zeros(length)
        rhs[0] = 1
        arr = s.backend.divide_sparse(rhs, s.backend.nonzero_terms(s.array), u, length)
    else:
        logging.debug(f"dense inverse by Newton iteration at order {s.order}")
        arr = s.backend.inverse_newton(s.array, u, length)
    return _wrap(arr, s.backend)


def divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same_ring(a, b)
    u = _unit(b)
    if _is_sparse(b):
        length = min(a.order, b.order) + 1
        arr = b.backend.divide_sparse(a.array, b.backend.nonzero_terms(b.array[:length]), u, length)
        return _wrap(arr, b.backend)
    return mul(a, inverse(b))


def pow_series(s: TruncatedSeries, k: int) -> TruncatedSeries:
    """``s^k`` by binary exponentiation; negative ``k`` needs a unit constant term."""
    if k < 0:
        return pow_series(inverse(s), -k)
    result = one(s.order, s.modulus)
    base = s
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def substitute_power(s: TruncatedSeries, m: int) -> TruncatedSeries:
    """``s(q^m)``, keeping the order of ``s``."""
    if m < 1:
        raise PreconditionError(f"substitution power must be positive, got {m}")
    arr = s.backend.zeros(s.order + 1)
    arr[::m] = s.array[: s.order // m + 1]
    return _wrap(arr, s.backend)


def dissect(s: TruncatedSeries, m: int, r: int) -> TruncatedSeries:
    """``sum_n s[m*n + r] q^n`` of order ``(N - r) // m``."""
    if m < 1:
        raise PreconditionError(f"dissection modulus must be positive, got {m}")
    if not 0 <= r < m:
        raise PreconditionError(f"dissection residue {r} outside 0..{m - 1}")
    if s.order < r:
        raise PreconditionError(f"series of order {s.order} has no coefficient at q^{r}")
    return _wrap(s.array[r::m].copy(), s.backend)


def shift_div(s: TruncatedSeries, r: int) -> TruncatedSeries:
    """Divide by ``q^r``; the first ``r`` coefficients must vanish."""
    if r < 0:
        raise PreconditionError(f"shift must be non-negative, got {r}")
    if r > s.order:
        raise PreconditionError(f"cannot divide a series of order {s.order} by q^{r}")
    head = np.flatnonzero(s.array[:r])
    if len(head):
        raise PreconditionError(f"coefficient of q^{int(head[0])} is nonzero, cannot divide by q^{r}")
    return _wrap(s.array[r:].copy(), s.backend)


def negate_q(s: TruncatedSeries) -> TruncatedSeries:
    """``s(-q)``."""
    arr = s.array.copy()
    arr[1::2] = -arr[1::2]
    return _wrap(arr, s.backend)


def reduce_mod(s: TruncatedSeries, m: int) -> TruncatedSeries:
    if m < 1:
        raise PreconditionError(f"modulus must be positive, got {m}")
    if s.modulus == m:
        return s
    if s.modulus != 0 and s.modulus % m != 0:
        raise ModulusMismatchError(s.modulus, m)
    backend = backend_for(m)
    return _wrap(backend.coerce(s.coefficients()), backend)


def first_mismatch(a: TruncatedSeries, b: TruncatedSeries) -> Optional[Tuple[int, int, int]]:
    """First ``(exponent, a_n, b_n)`` where the two series differ, up to the common order."""
    _check_same_ring(a, b)
    n = min(a.order, b.order) + 1
    diff = np.flatnonzero(a.array[:n] != b.array[:n])
    if len(diff) == 0:
        return None
    i = int(diff[0])
    return i, a[i], b[i]
