"""Token and normalized program types."""
from __future__ import annotations

import attr

from wafix.const import CONTROL_KINDS, TokenKind


@attr.s(frozen=True, slots=True)
class Token:
    """A lexer token; control tokens carry empty text."""

    kind: TokenKind = attr.ib()
    text: str = attr.ib()
    source_line: int = attr.ib()

    @property
    def is_control(self) -> bool:
        """Return whether this is a NEWLINE, INDENT or DEDENT token."""
        return self.kind in CONTROL_KINDS


@attr.s(frozen=True, slots=True)
class Diagnostic:
    """A recoverable problem found while lexing."""

    line: int = attr.ib()
    message: str = attr.ib()


@attr.s(frozen=True, slots=True)
class LogicalLine:
    """A logical line: its block depth and its visible tokens."""

    indent_depth: int = attr.ib()
    tokens: tuple[Token, ...] = attr.ib(converter=tuple)

    @property
    def texts(self) -> tuple[str, ...]:
        """Return the token texts."""
        return tuple(token.text for token in self.tokens)


@attr.s(frozen=True, slots=True)
class NormalizedProgram:
    """A program as logical lines of visible tokens."""

    lines: tuple[LogicalLine, ...] = attr.ib(converter=tuple, factory=tuple)

    @property
    def token_texts(self) -> list[str]:
        """Return the visible token texts of all lines, flattened."""
        return [token.text for line in self.lines for token in line.tokens]
