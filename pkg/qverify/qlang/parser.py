# qverify/qlang/parser.py
"""Pratt parser for qlang expressions.

Precedence from loosest to tightest: ``+ -``, ``* /``, unary ``-``, ``^``
(also written ``**``). Binary operators associate to the left. The exponent
of ``^`` is an integer literal, optionally negative.
"""

import re
from typing import Callable, Dict

from qverify.errors import QLangSyntaxError, UnknownIdentifierError
from qverify.qlang import ast
from qverify.qlang.lexer import SourceText, Token, tokenize
from qverify.series import Monomial

BINARY_LBP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30, "**": 30}
UNARY_MINUS_RBP = 25

BINARY_NODES = {"+": ast.Add, "-": ast.Sub, "*": ast.Mul, "/": ast.Div}

ETA_NAME = re.compile(r"f(\d+)$")

NAMED_SERIES = {
    "phi": ast.Phi,
    "D": ast.DSeries,
    "E": ast.ESeries,
    "p": ast.PSeries,
    "k": ast.KSeries,
}


class Parser:
    def __init__(self, text: str):
        self.source = SourceText(text)
        self.tokens = tokenize(self.source)
        self.pos = 0
        self.functions: Dict[str, Callable[[Token], object]] = {
            "dissect": self._dissect,
            "subst": self._subst,
            "shiftdiv": self._shiftdiv,
            "negq": self._negq,
            "mod": self._mod,
            "theta": self._theta,
            "poch": self._poch,
        }

    # token helpers

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token, cls=QLangSyntaxError) -> QLangSyntaxError:
        return cls(message, tok.span, tok.line, tok.column)

    def is_op(self, tok: Token, *texts: str) -> bool:
        return tok.kind == "op" and tok.text in texts

    def expect_op(self, text: str, after: Token) -> Token:
        tok = self.peek()
        if not self.is_op(tok, text):
            where = tok if tok.kind != "eof" else after
            raise self.error(f"expected {text!r}", where)
        return self.advance()

    def expect_int(self, after: Token, what: str) -> int:
        tok = self.peek()
        if tok.kind != "int":
            where = tok if tok.kind != "eof" else after
            raise self.error(f"expected an integer {what}", where)
        self.advance()
        return int(tok.text)

    def previous(self) -> Token:
        return self.tokens[max(self.pos - 1, 0)]

    # core loop

    def parse(self):
        if self.peek().kind == "eof":
            raise self.error("empty expression", self.peek())
        expr = self.expression(0)
        tok = self.peek()
        if tok.kind != "eof":
            raise self.error(f"unexpected {tok.text!r}", tok)
        return expr

    def lbp(self, tok: Token) -> int:
        return BINARY_LBP.get(tok.text, 0) if tok.kind == "op" else 0

    def expression(self, rbp: int):
        tok = self.advance()
        left = self.nud(tok)
        while rbp < self.lbp(self.peek()):
            tok = self.advance()
            left = self.led(tok, left)
        return left

    def nud(self, tok: Token):
        if tok.kind == "int":
            return ast.IntLiteral(int(tok.text), span=tok.span)
        if tok.kind == "ident":
            return self.identifier(tok)
        if self.is_op(tok, "-"):
            operand = self.expression(UNARY_MINUS_RBP)
            return ast.Neg(operand, span=tok.span.cover(operand.span))
        if self.is_op(tok, "("):
            inner = self.expression(0)
            self.expect_op(")", tok)
            return inner
        if tok.kind == "eof":
            dangling = self.previous() if self.pos > 0 else tok
            raise self.error(f"expected an operand after {dangling.text!r}", dangling)
        raise self.error(f"unexpected {tok.text!r}", tok)

    def led(self, tok: Token, left):
        if self.is_op(tok, "^", "**"):
            exponent = self.signed_exponent(tok)
            return ast.PowInt(left, exponent, span=left.span.cover(self.previous().span))
        node = BINARY_NODES[tok.text]
        right = self.expression(BINARY_LBP[tok.text])
        return node(left, right, span=left.span.cover(right.span))

    def signed_exponent(self, op: Token) -> int:
        sign = 1
        if self.is_op(self.peek(), "-"):
            self.advance()
            sign = -1
        if self.peek().kind != "int":
            raise self.error(f"exponent after {op.text!r} must be an integer literal", op)
        return sign * int(self.advance().text)

    # identifiers and calls

    def identifier(self, tok: Token):
        name = tok.text
        if name == "q":
            if self.is_op(self.peek(), "^", "**") and self.peek(1).kind == "int":
                self.advance()
                exp_tok = self.advance()
                return ast.QPower(int(exp_tok.text), span=tok.span.cover(exp_tok.span))
            return ast.QPower(1, span=tok.span)
        eta = ETA_NAME.match(name)
        if eta:
            level = int(eta.group(1))
            if level < 1:
                raise self.error(f"unknown identifier {name!r}", tok, UnknownIdentifierError)
            return ast.EtaF(level, span=tok.span)
        if name in NAMED_SERIES:
            return self.named_series(tok)
        if name in self.functions:
            return self.functions[name](tok)
        raise self.error(f"unknown identifier {name!r}", tok, UnknownIdentifierError)

    def named_series(self, tok: Token):
        base = NAMED_SERIES[tok.text](span=tok.span)
        if tok.text in ("p", "k") or not self.is_op(self.peek(), "("):
            return base
        # phi(q^m), D(q^m), E(q^m), phi(-q), ...
        self.advance()
        arg = self.expression(0)
        close = self.expect_op(")", tok)
        span = tok.span.cover(close.span)
        if isinstance(arg, ast.QPower) and arg.exponent >= 1:
            if isinstance(base, ast.Phi):
                return ast.PhiAt(arg.exponent, span=span)
            if arg.exponent == 1:
                return type(base)(span=span)
            return ast.SubstQ(base, arg.exponent, span=span)
        if isinstance(arg, ast.Neg) and arg.operand == ast.QPower(1):
            return ast.NegQ(base, span=span)
        raise self.error(f"{tok.text}() takes q, q^m or -q", tok)

    def call_args(self, tok: Token):
        self.expect_op("(", tok)
        return self.expression(0)

    def close_call(self, tok: Token):
        close = self.expect_op(")", tok)
        return tok.span.cover(close.span)

    def int_arg(self, tok: Token, what: str) -> int:
        self.expect_op(",", self.previous())
        return self.expect_int(self.previous(), what)

    def monomial(self, node, tok: Token) -> Monomial:
        sign = 1
        if isinstance(node, ast.Neg):
            sign, node = -1, node.operand
        if isinstance(node, ast.QPower):
            return Monomial(sign, node.exponent)
        if isinstance(node, ast.IntLiteral) and node.value == 1:
            return Monomial(sign, 0)
        raise self.error(f"{tok.text}() arguments must be monomials 1, q^j, -1 or -q^j", tok)

    def _dissect(self, tok):
        operand = self.call_args(tok)
        m = self.int_arg(tok, "modulus")
        r = self.int_arg(tok, "residue")
        span = self.close_call(tok)
        if m < 1 or r >= m:
            raise self.error(f"dissect needs 0 <= r < m, got m={m}, r={r}", tok)
        return ast.Dissect(operand, m, r, span=span)

    def _subst(self, tok):
        operand = self.call_args(tok)
        m = self.int_arg(tok, "power")
        span = self.close_call(tok)
        if m < 1:
            raise self.error("subst needs a positive power", tok)
        return ast.SubstQ(operand, m, span=span)

    def _shiftdiv(self, tok):
        operand = self.call_args(tok)
        r = self.int_arg(tok, "shift")
        return ast.ShiftDiv(operand, r, span=self.close_call(tok))

    def _negq(self, tok):
        operand = self.call_args(tok)
        return ast.NegQ(operand, span=self.close_call(tok))

    def _mod(self, tok):
        operand = self.call_args(tok)
        m = self.int_arg(tok, "modulus")
        span = self.close_call(tok)
        if m < 1:
            raise self.error("mod needs a positive modulus", tok)
        return ast.ModReduce(operand, m, span=span)

    def _theta(self, tok):
        a = self.monomial(self.call_args(tok), tok)
        self.expect_op(",", self.previous())
        b = self.monomial(self.expression(0), tok)
        span = self.close_call(tok)
        if a.exponent + b.exponent < 1:
            raise self.error("theta needs a combined q-exponent of at least 1", tok)
        return ast.Theta(a, b, span=span)

    def _poch(self, tok):
        a = self.monomial(self.call_args(tok), tok)
        level = self.int_arg(tok, "level")
        span = self.close_call(tok)
        if level < 1:
            raise self.error("poch needs a positive level", tok)
        if a == Monomial(1, 0):
            raise self.error("poch(1, L) vanishes identically", tok)
        return ast.Poch(a, level, span=span)


def parse(text: str):
    """Parse qlang text into an expression tree."""
    return Parser(text).parse()
