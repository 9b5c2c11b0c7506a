# qverify/errors.py
from typing import Optional


class QVerifyError(Exception):
    """Base class for every error raised by qverify."""


class SeriesError(QVerifyError, ValueError):
    """A truncated power series operation could not be carried out."""


class ModulusMismatchError(SeriesError):
    def __init__(self, left: int, right: int):
        super().__init__(f"coefficient moduli differ: {left} vs {right}")
        self.left = left
        self.right = right


class NonUnitConstantError(SeriesError):
    def __init__(self, constant: int, modulus: int):
        where = "over the integers" if modulus == 0 else f"modulo {modulus}"
        super().__init__(f"constant term {constant} is not invertible {where}")
        self.constant = constant
        self.modulus = modulus


class PreconditionError(SeriesError):
    """An operation was called outside its domain (bad residue, short prefix, ...)."""


class QLangError(QVerifyError):
    """Base class for qlang parse and evaluation errors."""


class QLangSyntaxError(QLangError):
    def __init__(self, message: str, span, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.span = span
        self.line = line
        self.column = column

    def caret(self, text: str) -> str:
        """Render the offending line with a caret under the error position."""
        lines = text.splitlines() or [""]
        source = lines[min(self.line, len(lines)) - 1]
        return f"{source}\n{' ' * (self.column - 1)}^"


class UnknownIdentifierError(QLangSyntaxError):
    pass


class EvaluationError(QLangError):
    def __init__(self, message: str, span=None, cause: Optional[Exception] = None):
        super().__init__(message)
        self.message = message
        self.span = span
        self.cause = cause
