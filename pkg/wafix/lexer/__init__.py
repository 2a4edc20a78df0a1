"""Best-effort Python 3 tokenizer and code normalization.

Comments, blank lines and whitespace are dropped; block structure is kept as
NEWLINE/INDENT/DEDENT control tokens. Identifiers are kept verbatim. Malformed
input never raises: problems are recorded as diagnostics and lexing continues.
"""
from __future__ import annotations

import keyword
import logging
from typing import Final, Iterable

import regex

from wafix.const import CONTROL_KINDS, TAB_SIZE, TokenKind
from wafix.lexer.model import Diagnostic, LogicalLine, NormalizedProgram, Token

_LOGGER = logging.getLogger(__name__)

OPERATORS: Final[tuple[str, ...]] = tuple(
    sorted(
        (
            "**=", "//=", ">>=", "<<=", "...",
            "->", ":=", "**", "//", "==", "!=", "<=", ">=", "<<", ">>",
            "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@=",
            "+", "-", "*", "/", "%", "@", "&", "|", "^", "~", "<", ">",
            "(", ")", "[", "]", "{", "}", ",", ":", ";", ".", "=",
        ),
        key=len,
        reverse=True,
    )
)
OPEN_BRACKETS: Final[frozenset[str]] = frozenset("([{")
CLOSE_BRACKETS: Final[frozenset[str]] = frozenset(")]}")
STRING_PREFIXES: Final[frozenset[str]] = frozenset(
    {"r", "u", "b", "f", "br", "rb", "fr", "rf"}
)
QUOTES: Final[str] = "'\""

NUMBER_RE = regex.compile(
    r"0[xX](?:_?[0-9a-fA-F])+"
    r"|0[bB](?:_?[01])+"
    r"|0[oO](?:_?[0-7])+"
    r"|(?:(?:\d(?:_?\d)*)?\.\d(?:_?\d)*|\d(?:_?\d)*\.?)(?:[eE][+-]?\d(?:_?\d)*)?[jJ]?"
)
NAME_RE = regex.compile(r"[^\W\d]\w*")


def _is_digit(char: str) -> bool:
    """Return whether char is an ASCII digit."""
    return char.isascii() and char.isdigit()


class Tokenizer:
    """Single-pass scanner producing tokens and diagnostics."""

    def __init__(self, source: str) -> None:
        """Initialize the tokenizer."""
        self.source = source.replace("\r\n", "\n").replace("\r", "\n")
        self.tokens: list[Token] = []
        self.diagnostics: list[Diagnostic] = []
        self.pos = 0
        self.line = 1
        self.indents: list[int] = [0]
        self.bracket_level = 0
        self.line_has_tokens = False
        self.at_line_start = True

    @property
    def scanned(self) -> bool:
        """Return True if the source has been fully scanned."""
        return self.pos >= len(self.source)

    def peek(self, offset: int = 0) -> str:
        """Return the character at the given offset without consuming it."""
        index = self.pos + offset
        if index >= len(self.source):
            return ""
        return self.source[index]

    def add_token(
        self, kind: TokenKind, text: str = "", line: int | None = None
    ) -> None:
        """Append a token."""
        self.tokens.append(Token(kind, text, self.line if line is None else line))
        if kind not in CONTROL_KINDS:
            self.line_has_tokens = True

    def diagnose(self, message: str, line: int | None = None) -> None:
        """Record a recoverable problem."""
        self.diagnostics.append(
            Diagnostic(self.line if line is None else line, message)
        )

    def scan_tokens(self) -> list[Token]:
        """Scan the whole source."""
        while not self.scanned:
            if self.at_line_start and self.bracket_level == 0:
                self.at_line_start = False
                self.scan_indent()
                continue
            self.scan_token()
        self.finish()
        return self.tokens

    def scan_token(self) -> None:
        """Scan one token or skip one piece of insignificant text."""
        char = self.peek()

        if char == "\n":
            self.pos += 1
            if self.bracket_level == 0:
                if self.line_has_tokens:
                    self.add_token(TokenKind.NEWLINE)
                    self.line_has_tokens = False
                self.at_line_start = True
            self.line += 1

        elif char in " \t\f\v":
            self.pos += 1

        elif char == "#":
            end = self.source.find("\n", self.pos)
            self.pos = len(self.source) if end == -1 else end

        elif char == "\\" and self.peek(1) == "\n":
            self.pos += 2
            self.line += 1

        elif char in QUOTES:
            self.scan_string(self.pos)

        elif _is_digit(char) or (char == "." and _is_digit(self.peek(1))):
            self.scan_number()

        elif (match := NAME_RE.match(self.source, self.pos)) is not None:
            name = match.group()
            quote = self.peek(len(name))
            if quote and quote in QUOTES and name.lower() in STRING_PREFIXES:
                self.scan_string(self.pos, prefix_length=len(name))
            else:
                self.pos = match.end()
                if keyword.iskeyword(name):
                    self.add_token(TokenKind.KEYWORD, name)
                else:
                    self.add_token(TokenKind.NAME, name)

        else:
            self.scan_operator()

    def scan_indent(self) -> None:
        """Measure the indentation of a physical line and emit INDENT/DEDENT."""
        column = 0
        while not self.scanned and self.peek() in " \t\f":
            char = self.peek()
            if char == " ":
                column += 1
            elif char == "\t":
                column = (column // TAB_SIZE + 1) * TAB_SIZE
            else:
                column = 0
            self.pos += 1

        if self.scanned or self.peek() in "\n#":
            # blank and comment-only lines do not affect indentation
            return

        if column > self.indents[-1]:
            self.indents.append(column)
            self.add_token(TokenKind.INDENT)
        elif column < self.indents[-1]:
            self.dedent_to(column)

    def dedent_to(self, column: int) -> None:
        """Close indentation levels down to the given column."""
        target = column
        if column not in self.indents:
            target = min(self.indents, key=lambda level: (abs(level - column), level))
            self.diagnose(
                f"inconsistent dedent to column {column}, snapped to {target}"
            )
        while self.indents[-1] > target:
            self.indents.pop()
            self.add_token(TokenKind.DEDENT)

    def scan_string(self, start: int, prefix_length: int = 0) -> None:
        """Scan a string literal, quotes and prefix included."""
        first_line = self.line
        quote_at = start + prefix_length
        quote = self.source[quote_at]
        delimiter = quote * 3 if self.source.startswith(quote * 3, quote_at) else quote
        index = quote_at + len(delimiter)
        terminated = False
        while index < len(self.source):
            char = self.source[index]
            if char == "\\":
                if self.source[index + 1 : index + 2] == "\n":
                    self.line += 1
                index += 2
            elif self.source.startswith(delimiter, index):
                index += len(delimiter)
                terminated = True
                break
            elif char == "\n":
                if len(delimiter) == 1:
                    break
                self.line += 1
                index += 1
            else:
                index += 1
        index = min(index, len(self.source))
        if not terminated:
            self.diagnose("unterminated string literal", first_line)
        self.pos = index
        self.add_token(TokenKind.STRING, self.source[start:index], first_line)

    def scan_number(self) -> None:
        """Scan a numeric literal keeping its exact spelling."""
        match = NUMBER_RE.match(self.source, self.pos)
        assert match is not None
        self.pos = match.end()
        self.add_token(TokenKind.NUMBER, match.group())

    def scan_operator(self) -> None:
        """Scan an operator or delimiter; unknown characters become operators too."""
        for operator in OPERATORS:
            if self.source.startswith(operator, self.pos):
                break
        else:
            operator = self.peek()
            self.diagnose(f"unrecognized character {operator!r}")

        self.pos += len(operator)
        self.add_token(TokenKind.OPERATOR, operator)
        if operator in OPEN_BRACKETS:
            self.bracket_level += 1
        elif operator in CLOSE_BRACKETS:
            if self.bracket_level > 0:
                self.bracket_level -= 1
            else:
                self.diagnose(f"unmatched {operator!r}")

    def finish(self) -> None:
        """Terminate the last logical line and close open blocks."""
        if self.bracket_level > 0:
            self.diagnose("unclosed bracket at end of input")
        if self.line_has_tokens:
            self.add_token(TokenKind.NEWLINE)
            self.line_has_tokens = False
        while len(self.indents) > 1:
            self.indents.pop()
            self.add_token(TokenKind.DEDENT)


def tokenize_with_diagnostics(source: str) -> tuple[list[Token], list[Diagnostic]]:
    """Tokenize source and return the tokens with the lexer diagnostics."""
    tokenizer = Tokenizer(source)
    tokens = tokenizer.scan_tokens()
    for diagnostic in tokenizer.diagnostics:
        _LOGGER.debug("line %s: %s", diagnostic.line, diagnostic.message)
    return tokens, tokenizer.diagnostics


def tokenize(source: str) -> list[Token]:
    """Tokenize source, dropping comments, blank lines and whitespace."""
    return tokenize_with_diagnostics(source)[0]


def normalize(tokens: Iterable[Token]) -> NormalizedProgram:
    """Group tokens into logical lines with their block depth."""
    lines: list[LogicalLine] = []
    depth = 0
    current: list[Token] = []
    line_depth = 0
    for token in tokens:
        if token.kind is TokenKind.INDENT:
            depth += 1
        elif token.kind is TokenKind.DEDENT:
            depth = max(depth - 1, 0)
        elif token.kind is TokenKind.NEWLINE:
            if current:
                lines.append(LogicalLine(line_depth, current))
            current = []
        else:
            if not current:
                line_depth = depth
            current.append(token)
    if current:
        lines.append(LogicalLine(line_depth, current))
    return NormalizedProgram(lines)


def normalize_source(source: str) -> NormalizedProgram:
    """Tokenize and normalize source."""
    return normalize(tokenize(source))


def render_line(line: LogicalLine | Iterable[Token]) -> str:
    """Join the visible token texts of a line with single spaces."""
    tokens = line.tokens if isinstance(line, LogicalLine) else line
    return " ".join(token.text for token in tokens)


def dump_program(program: NormalizedProgram) -> str:
    """Return one ``depth<TAB>rendered line`` entry per logical line."""
    return "".join(
        f"{line.indent_depth}\t{render_line(line)}\n" for line in program.lines
    )
