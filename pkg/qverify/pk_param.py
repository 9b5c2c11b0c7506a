# qverify/pk_param.py
"""The (p, k) parametrization by theta functions and the mod 5 certificate.

    p = (phi(q)^2 - phi(q^3)^2) / (2 phi(q^3)^2),    k = phi(q^3)^3 / phi(q)

Eta products with fractional powers of p and k are checked after raising
both sides to the power that clears every fractional exponent.
"""

import time
from functools import lru_cache
from typing import Dict, List, NamedTuple, Sequence, Tuple

from qverify.errors import PreconditionError
from qverify.overpartitions import overpartition_gf
from qverify.series import (
    EtaQuotient,
    TruncatedSeries,
    add,
    constant,
    dissect,
    divide,
    eta_quotient,
    make_series,
    mul,
    phi,
    pow_series,
    reduce_mod,
    scale,
    shift_mul,
    sub,
)
from qverify.verifier.report import VerificationReport, compare_series

# Coefficients of p^0 .. p^20.
F_COEFFICIENTS: Tuple[int, ...] = (
    2621440,
    30146560,
    443678720,
    4203806720,
    25364889600,
    112351805440,
    378957086720,
    980173332480,
    1961928110080,
    3051430471680,
    3658168560640,
    3316049272320,
    2205104730880,
    1020945279360,
    295430818880,
    40648474720,
    694662000,
    168540920,
    -82928860,
    12386590,
    98305,
)

# p = 2 q f2^3 f3^3 f12^6 / (f1 f4^2 f6^9)
P_ETA = EtaQuotient.of({2: 3, 3: 3, 12: 6, 1: -1, 4: -2, 6: -9})

# prefactor of F(p) in 2^19 sum p(40n+35) q^n
R7_ETA = EtaQuotient.of({2: 22, 1: -23})


@lru_cache(maxsize=32)
def compute_p(order: int) -> TruncatedSeries:
    """``p`` over the integers to ``q^order``; its constant term is 0."""
    phi1 = phi(order)
    phi3_sq = pow_series(phi(order, level=3), 2)
    twice_p = divide(sub(pow_series(phi1, 2), phi3_sq), phi3_sq)
    coeffs = twice_p.coefficients()
    odd = [n for n, c in enumerate(coeffs) if c % 2]
    if odd:
        raise PreconditionError(f"2p has an odd coefficient at q^{odd[0]}")
    return make_series([c // 2 for c in coeffs])


@lru_cache(maxsize=32)
def compute_k(order: int) -> TruncatedSeries:
    """``k`` over the integers to ``q^order``; its constant term is 1."""
    return divide(pow_series(phi(order, level=3), 3), phi(order))


def p_eta_form(order: int, modulus: int = 0) -> TruncatedSeries:
    return shift_mul(scale(eta_quotient(P_ETA, order, modulus), 2), 1)


def evaluate_F(p: TruncatedSeries, coefficients: Sequence[int] = F_COEFFICIENTS) -> TruncatedSeries:
    """``sum_j c_j p^j`` by Horner's rule."""
    result = constant(coefficients[-1], p.order, p.modulus)
    for c in reversed(coefficients[:-1]):
        result = add(mul(result, p), constant(c, p.order, p.modulus))
    return result


def F_divisible_by(m: int, coefficients: Sequence[int] = F_COEFFICIENTS) -> bool:
    return all(c % m == 0 for c in coefficients)


def verify_R7(order: int, coefficients: Sequence[int] = F_COEFFICIENTS) -> VerificationReport:
    """``2^19 sum p(40n+35) q^n == f2^22/f1^23 F(p) (mod 5)`` to ``q^order``."""
    started = time.perf_counter()
    lhs = scale(dissect(overpartition_gf(40 * order + 35, 5), 40, 35), 2**19)
    F_mod5 = reduce_mod(evaluate_F(compute_p(order), coefficients), 5)
    rhs = mul(eta_quotient(R7_ETA, order, 5), F_mod5)
    return compare_series("R-7", lhs, rhs, started)


class PKProduct(NamedTuple):
    """``coefficient * q^shift * eta * prod (a + b p)^e * k^k_power``."""

    coefficient: int
    shift: int
    eta: Dict[int, int]
    p_factors: List[Tuple[int, int, int]]
    k_power: int

    def evaluate(self, order: int) -> TruncatedSeries:
        p, k = compute_p(order), compute_k(order)
        value = scale(eta_quotient(EtaQuotient.of(self.eta), order), self.coefficient)
        for a, b, e in self.p_factors:
            linear = add(constant(a, order), scale(p, b))
            value = mul(value, pow_series(linear, e))
        if self.k_power:
            value = mul(value, pow_series(k, self.k_power))
        return shift_mul(value, self.shift)


class IntegralForm(NamedTuple):
    id: str
    lhs: PKProduct
    rhs: PKProduct


INTEGRAL_FORMS: List[IntegralForm] = [
    IntegralForm(
        "R-8",
        PKProduct(1, 0, {}, [(0, 1, 1)], 0),
        PKProduct(2, 1, P_ETA.as_dict(), [], 0),
    ),
    # 24th power of the f1 formula
    IntegralForm(
        "2-11",
        PKProduct(16, 1, {1: 24}, [], 0),
        PKProduct(1, 0, {}, [(0, 1, 1), (1, -1, 12), (1, 1, 4), (1, 2, 3), (2, 1, 3)], 12),
    ),
    # 12th power of the f2 formula
    IntegralForm(
        "2-12",
        PKProduct(16, 1, {2: 12}, [], 0),
        PKProduct(1, 0, {}, [(0, 1, 1), (1, -1, 3), (1, 1, 1), (1, 2, 3), (2, 1, 3)], 6),
    ),
    # 24th power of the f4 formula
    IntegralForm(
        "2-13",
        PKProduct(2**16, 4, {4: 24}, [], 0),
        PKProduct(1, 0, {}, [(0, 1, 4), (1, -1, 3), (1, 1, 1), (1, 2, 3), (2, 1, 12)], 12),
    ),
    # 8th power of f2^22 / f1^23
    IntegralForm(
        "R-6",
        PKProduct(2**28, 7, {2: 176}, [(1, -1, 48), (1, 1, 16)], 4),
        PKProduct(1, 0, {1: 184}, [(0, 1, 7), (1, 2, 21), (2, 1, 21)], 0),
    ),
]


def verify_integral_form(form: IntegralForm, order: int) -> VerificationReport:
    started = time.perf_counter()
    return compare_series(form.id, form.lhs.evaluate(order), form.rhs.evaluate(order), started)


def verify_integral_forms(order: int) -> List[VerificationReport]:
    return [verify_integral_form(form, order) for form in INTEGRAL_FORMS]


def p_leading_coefficients(order: int = 8) -> Tuple[int, int]:
    """Coefficient of ``q^1`` in p, from the theta definition and from the eta form."""
    return compute_p(order)[1], p_eta_form(order)[1]
