# qverify/qlang/evaluator.py
"""Evaluate qlang trees to truncated power series.

Orders are pushed down the tree: a node asked for order ``N`` asks each child
for exactly the order it needs (``m*N + r`` under ``dissect``, ``N + r``
under ``shiftdiv``, ``N // m`` under ``subst``), so the result is valid to
``q^N`` without over-computing.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from qverify import series
from qverify.errors import EvaluationError, SeriesError
from qverify.qlang import ast
from qverify.qlang.parser import parse
from qverify.series import EtaQuotient, TruncatedSeries


@dataclass(frozen=True)
class EtaTerm:
    """``coefficient * q^shift * quotient``."""

    coefficient: int
    shift: int
    quotient: EtaQuotient


def lower_eta_term(node) -> Optional[EtaTerm]:
    """Recognize subtrees that are a signed integer multiple of a monomial times an eta quotient."""
    if isinstance(node, ast.EtaF):
        return EtaTerm(1, 0, EtaQuotient.of({node.level: 1}))
    if isinstance(node, ast.IntLiteral):
        return EtaTerm(node.value, 0, EtaQuotient())
    if isinstance(node, ast.QPower):
        return EtaTerm(1, node.exponent, EtaQuotient())
    if isinstance(node, ast.Neg):
        inner = lower_eta_term(node.operand)
        return inner and EtaTerm(-inner.coefficient, inner.shift, inner.quotient)
    if isinstance(node, ast.Mul):
        left, right = lower_eta_term(node.left), lower_eta_term(node.right)
        if left is None or right is None:
            return None
        return EtaTerm(left.coefficient * right.coefficient, left.shift + right.shift, left.quotient * right.quotient)
    if isinstance(node, ast.Div):
        left, right = lower_eta_term(node.left), lower_eta_term(node.right)
        if left is None or right is None or right.shift != 0 or right.coefficient not in (1, -1):
            return None
        return EtaTerm(left.coefficient * right.coefficient, left.shift, left.quotient / right.quotient)
    if isinstance(node, ast.PowInt):
        inner = lower_eta_term(node.base)
        if inner is None:
            return None
        k = node.exponent
        if k < 0 and (inner.shift != 0 or inner.coefficient not in (1, -1)):
            return None
        return EtaTerm(inner.coefficient ** abs(k), inner.shift * k, inner.quotient ** k)
    return None


class Evaluator:
    """Evaluates one expression tree in one coefficient ring, memoizing shared subtrees."""

    def __init__(self, modulus: int = 0):
        self.modulus = modulus
        self._memo: Dict[Tuple[object, int], TruncatedSeries] = {}

    def evaluate(self, node, order: int) -> TruncatedSeries:
        if order < 0:
            raise EvaluationError(f"order must be non-negative, got {order}", node.span)
        key = (node, order)
        if key not in self._memo:
            self._memo[key] = self._evaluate(node, order)
        return self._memo[key]

    def _evaluate(self, node, order: int) -> TruncatedSeries:
        term = lower_eta_term(node)
        try:
            if term is not None and not isinstance(node, (ast.IntLiteral, ast.QPower)):
                return self._eta_term(term, order)
            handler = getattr(self, f"_eval_{type(node).__name__}")
            return handler(node, order)
        except SeriesError as exc:
            raise EvaluationError(str(exc), node.span, exc) from exc

    def _eta_term(self, term: EtaTerm, order: int) -> TruncatedSeries:
        value = series.eta_quotient(term.quotient, order, self.modulus)
        value = series.shift_mul(series.scale(value, term.coefficient), term.shift)
        return value

    def _eval_EtaF(self, node, order):
        return series.eta_f(node.level, order, self.modulus)

    def _eval_Phi(self, node, order):
        return series.phi(order, self.modulus)

    def _eval_PhiAt(self, node, order):
        return series.phi(order, self.modulus, level=node.level)

    def _eval_DSeries(self, node, order):
        return series.D_series(order, self.modulus)

    def _eval_ESeries(self, node, order):
        return series.E_series(order, self.modulus)

    def _eval_PSeries(self, node, order):
        from qverify.pk_param import compute_p

        return series.reduce_mod(compute_p(order), self.modulus) if self.modulus else compute_p(order)

    def _eval_KSeries(self, node, order):
        from qverify.pk_param import compute_k

        return series.reduce_mod(compute_k(order), self.modulus) if self.modulus else compute_k(order)

    def _eval_IntLiteral(self, node, order):
        return series.constant(node.value, order, self.modulus)

    def _eval_QPower(self, node, order):
        return series.monomial_series(series.Monomial(1, node.exponent), order, self.modulus)

    def _eval_Theta(self, node, order):
        return series.theta_f(node.a, node.b, order, self.modulus)

    def _eval_Poch(self, node, order):
        return series.pochhammer(node.a, node.level, order, self.modulus)

    def _eval_Add(self, node, order):
        return series.add(self.evaluate(node.left, order), self.evaluate(node.right, order))

    def _eval_Sub(self, node, order):
        return series.sub(self.evaluate(node.left, order), self.evaluate(node.right, order))

    def _eval_Mul(self, node, order):
        return series.mul(self.evaluate(node.left, order), self.evaluate(node.right, order))

    def _eval_Div(self, node, order):
        return series.divide(self.evaluate(node.left, order), self.evaluate(node.right, order))

    def _eval_PowInt(self, node, order):
        return series.pow_series(self.evaluate(node.base, order), node.exponent)

    def _eval_Neg(self, node, order):
        return series.neg(self.evaluate(node.operand, order))

    def _eval_SubstQ(self, node, order):
        inner = self.evaluate(node.operand, order // node.m)
        # pad back up to the requested order; coefficients off the progression are zero
        padded = series.make_series(inner.coefficients() + [0] * (order - inner.order), self.modulus)
        return series.substitute_power(padded, node.m)

    def _eval_Dissect(self, node, order):
        return series.dissect(self.evaluate(node.operand, node.m * order + node.r), node.m, node.r)

    def _eval_ShiftDiv(self, node, order):
        return series.shift_div(self.evaluate(node.operand, order + node.r), node.r)

    def _eval_NegQ(self, node, order):
        return series.negate_q(self.evaluate(node.operand, order))

    def _eval_ModReduce(self, node, order):
        return series.reduce_mod(self.evaluate(node.operand, order), node.m)


def evaluate(expr, order: int, modulus: int = 0) -> TruncatedSeries:
    """Series of ``expr`` to ``q^order``, over the integers or modulo ``modulus``.

    ``expr`` may be a tree or qlang text.
    """
    if isinstance(expr, str):
        expr = parse(expr)
    return Evaluator(modulus).evaluate(expr, order)
