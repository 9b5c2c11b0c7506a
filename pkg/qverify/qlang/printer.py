# qverify/qlang/printer.py
"""Render expression trees back to qlang text that parses to the same tree."""

from qverify.qlang import ast

_ADD, _MUL, _NEG, _POW, _ATOM = 10, 20, 25, 30, 40

_BINARY = {ast.Add: (" + ", _ADD), ast.Sub: (" - ", _ADD), ast.Mul: ("*", _MUL), ast.Div: ("/", _MUL)}


def _precedence(node) -> int:
    if isinstance(node, ast.BINARY_TYPES):
        return _BINARY[type(node)][1]
    if isinstance(node, ast.Neg):
        return _NEG
    if isinstance(node, ast.PowInt):
        return _POW
    return _ATOM


def _wrap(node, minimum: int) -> str:
    text = to_text(node)
    return f"({text})" if _precedence(node) < minimum else text


def _operand(node, minimum: int) -> str:
    if isinstance(node, ast.Neg):
        return f"({to_text(node)})"
    return _wrap(node, minimum)


def to_text(node) -> str:
    if isinstance(node, ast.BINARY_TYPES):
        symbol, prec = _BINARY[type(node)]
        # left-associative: an equal-precedence right operand needs parentheses
        return f"{_wrap(node.left, prec)}{symbol}{_operand(node.right, prec + 1)}"
    if isinstance(node, ast.Neg):
        return f"-{_wrap(node.operand, _NEG)}"
    if isinstance(node, ast.PowInt):
        return f"{_wrap(node.base, _ATOM)}^{node.exponent}"
    if isinstance(node, ast.EtaF):
        return f"f{node.level}"
    if isinstance(node, ast.Phi):
        return "phi"
    if isinstance(node, ast.PhiAt):
        return f"phi(q^{node.level})"
    if isinstance(node, ast.DSeries):
        return "D"
    if isinstance(node, ast.ESeries):
        return "E"
    if isinstance(node, ast.PSeries):
        return "p"
    if isinstance(node, ast.KSeries):
        return "k"
    if isinstance(node, ast.IntLiteral):
        return str(node.value) if node.value >= 0 else f"(-{-node.value})"
    if isinstance(node, ast.QPower):
        return f"q^{node.exponent}"
    if isinstance(node, ast.Theta):
        return f"theta({node.a}, {node.b})"
    if isinstance(node, ast.Poch):
        return f"poch({node.a}, {node.level})"
    if isinstance(node, ast.SubstQ):
        return f"subst({to_text(node.operand)}, {node.m})"
    if isinstance(node, ast.Dissect):
        return f"dissect({to_text(node.operand)}, {node.m}, {node.r})"
    if isinstance(node, ast.ShiftDiv):
        return f"shiftdiv({to_text(node.operand)}, {node.r})"
    if isinstance(node, ast.NegQ):
        return f"negq({to_text(node.operand)})"
    if isinstance(node, ast.ModReduce):
        return f"mod({to_text(node.operand)}, {node.m})"
    raise TypeError(f"not a qlang node: {node!r}")
