# qverify/qlang/lexer.py
import re
from dataclasses import dataclass
from typing import List

from qverify.errors import QLangSyntaxError
from qverify.qlang.ast import SourceSpan

TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>\*\*|[-+*/^(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op" or "eof"
    text: str
    span: SourceSpan
    line: int
    column: int


class SourceText:
    """Maps character offsets of a qlang source to byte offsets and line/column."""

    def __init__(self, text: str):
        self.text = text
        self._byte_at = [0]
        for ch in text:
            self._byte_at.append(self._byte_at[-1] + len(ch.encode("utf-8")))

    def span(self, start: int, end: int) -> SourceSpan:
        return SourceSpan(self._byte_at[start], self._byte_at[end])

    def line_column(self, offset: int):
        line = self.text.count("\n", 0, offset) + 1
        column = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return line, column


def tokenize(source: SourceText) -> List[Token]:
    text = source.text
    tokens = []
    pos = 0
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        if match is None:
            line, column = source.line_column(pos)
            raise QLangSyntaxError(
                f"unexpected character {text[pos]!r}", source.span(pos, pos + 1), line, column
            )
        kind = match.lastgroup
        if kind != "ws":
            line, column = source.line_column(pos)
            tokens.append(Token(kind, match.group(), source.span(pos, match.end()), line, column))
        pos = match.end()
    line, column = source.line_column(len(text))
    tokens.append(Token("eof", "", source.span(len(text), len(text)), line, column))
    return tokens
