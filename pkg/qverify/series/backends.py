# qverify/series/backends.py
"""Coefficient storage for truncated power series.

Coefficients live in one-dimensional numpy arrays. Over the integers the
array holds Python ints (``dtype=object``); modulo ``m`` the array holds
residues in ``[0, m)``, as ``int64`` while the product of two residues still
fits in a machine word and as Python ints beyond that.
"""

import math
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

import numpy as np

from qverify.errors import PreconditionError

# Residues below this bound multiply without overflowing int64.
RESIDUE_WORD_LIMIT = 2**31

_INT64_MAX = 2**63 - 1


class CoefficientBackend:
    """Arithmetic on coefficient arrays for one coefficient ring."""

    def __init__(self, modulus: int):
        if modulus < 0:
            raise PreconditionError(f"modulus must be non-negative, got {modulus}")
        self.modulus = modulus
        self.dtype = np.int64 if 0 < modulus <= RESIDUE_WORD_LIMIT else object

    @property
    def exact(self) -> bool:
        return self.modulus == 0

    def __repr__(self):
        ring = "ZZ" if self.exact else f"ZZ/{self.modulus}"
        return f"CoefficientBackend({ring}, dtype={np.dtype(self.dtype).name})"

    def zeros(self, length: int) -> np.ndarray:
        return np.zeros(length, dtype=self.dtype)

    def coerce(self, values: Iterable[int]) -> np.ndarray:
        """Build a normalized array from Python integers."""
        values = [int(v) for v in values]
        if not self.exact:
            values = [v % self.modulus for v in values]
        arr = np.empty(len(values), dtype=self.dtype)
        arr[:] = values
        return arr

    def reduce_scalar(self, value: int) -> int:
        value = int(value)
        return value % self.modulus if self.modulus else value

    def normalize(self, arr: np.ndarray) -> np.ndarray:
        if arr.dtype != np.dtype(self.dtype):
            arr = self.coerce(arr.tolist())
        if self.modulus:
            arr = np.mod(arr, self.modulus)
        return arr

    def freeze(self, arr: np.ndarray) -> np.ndarray:
        arr.setflags(write=False)
        return arr

    def unit_inverse(self, value: int) -> Optional[int]:
        """Inverse of ``value`` in the coefficient ring, or None for a non-unit."""
        value = self.reduce_scalar(value)
        if self.exact:
            return value if value in (1, -1) else None
        if math.gcd(value, self.modulus) != 1:
            return None
        return pow(value, -1, self.modulus)

    def nonzero_terms(self, arr: np.ndarray) -> List[Tuple[int, int]]:
        return [(int(i), int(arr[i])) for i in np.flatnonzero(arr)]

    def _dense_convolve_is_safe(self, length: int) -> bool:
        return self.dtype is np.int64 and (self.modulus - 1) ** 2 * length <= _INT64_MAX

    def convolve(self, a: np.ndarray, b: np.ndarray, length: int) -> np.ndarray:
        """Product of two coefficient arrays, truncated to ``length`` terms."""
        a = a[:length]
        b = b[:length]
        nz_a = np.flatnonzero(a)
        nz_b = np.flatnonzero(b)
        if len(nz_b) < len(nz_a):
            a, b, nz_a = b, a, nz_b
        out = self.zeros(length)
        if len(nz_a) == 0 or len(b) == 0:
            return out

        if self._dense_convolve_is_safe(length) and len(nz_a) > 2 * math.isqrt(length) + 16:
            full = np.convolve(a, b)[:length]
            out[: len(full)] = full
            return np.mod(out, self.modulus)

        for i in nz_a:
            if i >= length:
                break
            span = min(length - i, len(b))
            out[i : i + span] += a[i] * b[:span]
            if self.modulus:
                out[i : i + span] %= self.modulus
        return out

    def divide_sparse(self, a: np.ndarray, divisor: List[Tuple[int, int]], unit: int, length: int) -> np.ndarray:
        """Solve ``c * b = a`` term by term, where ``divisor`` lists the nonzero ``(k, b_k)``."""
        tail = [(k, c) for k, c in divisor if k > 0]
        src = [int(v) for v in a[:length]] + [0] * max(0, length - len(a))
        c = [0] * length
        m = self.modulus
        for n in range(length):
            acc = src[n]
            for k, bk in tail:
                if k > n:
                    break
                acc -= bk * c[n - k]
            acc *= unit
            c[n] = acc % m if m else acc
        return self.coerce(c)

    def inverse_newton(self, b: np.ndarray, unit: int, length: int) -> np.ndarray:
        """Inverse of ``b`` by Newton iteration ``g <- g (2 - b g)``."""
        g = self.coerce([unit])
        prec = 1
        while prec < length:
            prec = min(2 * prec, length)
            padded = self.zeros(prec)
            padded[: len(g)] = g
            e = self.convolve(b[:prec], padded, prec)
            e = -e
            e[0] += 2
            g = self.normalize(self.convolve(padded, self.normalize(e), prec))
        return g


@lru_cache(maxsize=None)
def backend_for(modulus: int) -> CoefficientBackend:
    return CoefficientBackend(modulus)
