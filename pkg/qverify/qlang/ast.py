# qverify/qlang/ast.py
"""Expression tree for qlang.

Nodes are frozen dataclasses. Every node carries the byte span of the text
it was parsed from; spans take no part in equality or hashing, so two trees
are equal exactly when they have the same structure.
"""

from dataclasses import dataclass, field
from typing import Union

from qverify.series import Monomial


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"invalid span {self.start}..{self.end}")

    def contains(self, other: "SourceSpan") -> bool:
        return self.start <= other.start and other.end <= self.end

    def cover(self, other: "SourceSpan") -> "SourceSpan":
        return SourceSpan(min(self.start, other.start), max(self.end, other.end))


NO_SPAN = SourceSpan(0, 0)


def _span():
    return field(default=NO_SPAN, compare=False, repr=False)


@dataclass(frozen=True)
class EtaF:
    level: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Phi:
    span: SourceSpan = _span()


@dataclass(frozen=True)
class PhiAt:
    level: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class DSeries:
    span: SourceSpan = _span()


@dataclass(frozen=True)
class ESeries:
    span: SourceSpan = _span()


@dataclass(frozen=True)
class PSeries:
    span: SourceSpan = _span()


@dataclass(frozen=True)
class KSeries:
    span: SourceSpan = _span()


@dataclass(frozen=True)
class IntLiteral:
    value: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class QPower:
    exponent: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Theta:
    a: Monomial
    b: Monomial
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Poch:
    a: Monomial
    level: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Add:
    left: "QExpr"
    right: "QExpr"
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Sub:
    left: "QExpr"
    right: "QExpr"
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Mul:
    left: "QExpr"
    right: "QExpr"
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Div:
    left: "QExpr"
    right: "QExpr"
    span: SourceSpan = _span()


@dataclass(frozen=True)
class PowInt:
    base: "QExpr"
    exponent: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Neg:
    operand: "QExpr"
    span: SourceSpan = _span()


@dataclass(frozen=True)
class SubstQ:
    operand: "QExpr"
    m: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class Dissect:
    operand: "QExpr"
    m: int
    r: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class ShiftDiv:
    operand: "QExpr"
    r: int
    span: SourceSpan = _span()


@dataclass(frozen=True)
class NegQ:
    operand: "QExpr"
    span: SourceSpan = _span()


@dataclass(frozen=True)
class ModReduce:
    operand: "QExpr"
    m: int
    span: SourceSpan = _span()


QExpr = Union[
    EtaF, Phi, PhiAt, DSeries, ESeries, PSeries, KSeries, IntLiteral, QPower,
    Theta, Poch, Add, Sub, Mul, Div, PowInt, Neg, SubstQ, Dissect, ShiftDiv,
    NegQ, ModReduce,
]

LEAF_TYPES = (EtaF, Phi, PhiAt, DSeries, ESeries, PSeries, KSeries, IntLiteral, QPower, Theta, Poch)
BINARY_TYPES = (Add, Sub, Mul, Div)
UNARY_TYPES = (PowInt, Neg, SubstQ, Dissect, ShiftDiv, NegQ, ModReduce)


def children(node) -> tuple:
    if isinstance(node, BINARY_TYPES):
        return node.left, node.right
    if isinstance(node, (PowInt,)):
        return (node.base,)
    if isinstance(node, UNARY_TYPES):
        return (node.operand,)
    return ()


def walk(node):
    """Pre-order traversal."""
    yield node
    for child in children(node):
        yield from walk(child)
