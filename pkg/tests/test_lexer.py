"""Test the tokenizer and code normalization."""
from __future__ import annotations

import io
import random
import tokenize as std_tokenize

import pytest

from wafix.const import CONTROL_KINDS, TokenKind
from wafix.lexer import (
    dump_program,
    normalize,
    normalize_source,
    render_line,
    tokenize,
    tokenize_with_diagnostics,
)
from wafix.lexer.model import Token

SNIPPETS = [
    "def f(a, b=2) -> int:\n    return a ** b // 3\n",
    "x = [i * 2 for i in range(10) if i % 2]\nprint(*x, sep=', ')\n",
    "while True:\n    if x >= 3 and not y:\n        break\n    x += 1\nelse:\n"
    "    pass\n",
    "s = '''a\nb'''\nt = r'\\d+' + \"q\"\n",
    "a = (1 +\n     2)\nb = 0x1F, 1e-3, .5, 3.14j, 1_000\n",
    "class A:\n    def m(self):\n        return self.x[1:2]\n\n\n# done\n",
    "if a:\n\tb = 1\nelif c != d:\n\tpass\n",
    "n, m = map(int, input().split())\nprint(n << 2, m >> 1, ~n, n ^ m)\n",
]
VISIBLE_STD_TYPES = {
    std_tokenize.NAME,
    std_tokenize.NUMBER,
    std_tokenize.STRING,
    std_tokenize.OP,
}


def _kinds_and_texts(source: str) -> list[tuple[TokenKind, str]]:
    return [(token.kind, token.text) for token in tokenize(source)]


def _std_tokens(source: str) -> list[std_tokenize.TokenInfo]:
    return list(std_tokenize.generate_tokens(io.StringIO(source).readline))


def test_tokenize_empty() -> None:
    """Test an empty program has no tokens."""
    assert tokenize("") == []
    assert normalize([]).lines == ()


def test_tokenize_drops_comment() -> None:
    """Test comments and whitespace are removed."""
    assert _kinds_and_texts("x = 1  # note") == [
        (TokenKind.NAME, "x"),
        (TokenKind.OPERATOR, "="),
        (TokenKind.NUMBER, "1"),
        (TokenKind.NEWLINE, ""),
    ]


def test_tokenize_block() -> None:
    """Test indentation becomes INDENT and DEDENT control tokens."""
    assert _kinds_and_texts("if a:\n    b()\n") == [
        (TokenKind.KEYWORD, "if"),
        (TokenKind.NAME, "a"),
        (TokenKind.OPERATOR, ":"),
        (TokenKind.NEWLINE, ""),
        (TokenKind.INDENT, ""),
        (TokenKind.NAME, "b"),
        (TokenKind.OPERATOR, "("),
        (TokenKind.OPERATOR, ")"),
        (TokenKind.NEWLINE, ""),
        (TokenKind.DEDENT, ""),
    ]


@pytest.mark.parametrize("source", SNIPPETS)
def test_tokenize_matches_reference_tokenizer(source: str) -> None:
    """Test visible tokens and block structure agree with the stdlib tokenizer."""
    expected = _std_tokens(source)
    tokens = tokenize(source)

    assert [token.text for token in tokens if not token.is_control] == [
        token.string for token in expected if token.type in VISIBLE_STD_TYPES
    ]
    for kind, std_type in (
        (TokenKind.INDENT, std_tokenize.INDENT),
        (TokenKind.DEDENT, std_tokenize.DEDENT),
    ):
        assert sum(token.kind is kind for token in tokens) == sum(
            token.type == std_type for token in expected
        )


def test_tokenize_keywords_and_identifiers() -> None:
    """Test keywords are told apart from names kept verbatim."""
    tokens = tokenize("if αβ_1 is not None: match = print\n")
    kinds = {token.text: token.kind for token in tokens}
    assert kinds["if"] is TokenKind.KEYWORD
    assert kinds["is"] is TokenKind.KEYWORD
    assert kinds["None"] is TokenKind.KEYWORD
    assert kinds["αβ_1"] is TokenKind.NAME
    assert kinds["match"] is TokenKind.NAME
    assert kinds["print"] is TokenKind.NAME


def test_tokenize_literals_keep_spelling() -> None:
    """Test string and number literals are single tokens as written."""
    texts = [token.text for token in tokenize("x = rb'\\d' + 'a b' + .5 + 3.140\n")]
    assert texts[:-1] == ["x", "=", "rb'\\d'", "+", "'a b'", "+", ".5", "+", "3.140"]


def test_tokenize_source_lines() -> None:
    """Test tokens record their physical line."""
    tokens = tokenize("a = 1\n\n# comment\nb = '''x\ny'''\nc = 2\n")
    lines = {token.text: token.source_line for token in tokens if token.text}
    assert (lines["a"], lines["b"], lines["'''x\ny'''"], lines["c"]) == (1, 4, 4, 6)


def test_tokenize_unterminated_string() -> None:
    """Test an unterminated string is diagnosed and lexing continues."""
    tokens, diagnostics = tokenize_with_diagnostics("s = 'abc\nprint(s)\n")

    assert [(d.line, d.message) for d in diagnostics] == [
        (1, "unterminated string literal")
    ]
    assert [token.text for token in tokens if not token.is_control] == [
        "s",
        "=",
        "'abc",
        "print",
        "(",
        "s",
        ")",
    ]


def test_tokenize_inconsistent_dedent() -> None:
    """Test a dedent to an unknown column snaps to the nearest open level."""
    source = "if a:\n        b = 1\n    c = 2\n"
    tokens, diagnostics = tokenize_with_diagnostics(source)

    assert [d.message for d in diagnostics] == [
        "inconsistent dedent to column 4, snapped to 0"
    ]
    assert [line.indent_depth for line in normalize(tokens).lines] == [0, 1, 0]


def test_tokenize_tabs_expand_to_eight_columns() -> None:
    """Test a tab and eight spaces indent to the same level."""
    tokens, diagnostics = tokenize_with_diagnostics(
        "if a:\n\tb = 1\n        c = 2\n"
    )
    assert diagnostics == []
    assert [line.indent_depth for line in normalize(tokens).lines] == [0, 1, 1]


def test_tokenize_unrecognized_character() -> None:
    """Test an unknown character becomes an operator token."""
    tokens, diagnostics = tokenize_with_diagnostics("a = $b\n")
    assert [token.text for token in tokens if not token.is_control] == [
        "a",
        "=",
        "$",
        "b",
    ]
    assert diagnostics[0].message == "unrecognized character '$'"


def test_tokenize_never_raises() -> None:
    """Test arbitrary text is lexed with balanced block structure."""
    rng = random.Random(7)
    alphabet = "ab1 \t\n#'\"()[]{}:=+-*/\\.,$?é"
    for _ in range(500):
        source = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 60)))
        tokens = tokenize(source)
        indents = sum(token.kind is TokenKind.INDENT for token in tokens)
        dedents = sum(token.kind is TokenKind.DEDENT for token in tokens)
        assert indents == dedents
        assert all(token.text for token in tokens if not token.is_control)


@pytest.mark.parametrize("source", SNIPPETS)
def test_tokenize_ignores_comments(source: str) -> None:
    """Test adding full-line and trailing comments leaves the tokens unchanged."""
    commented = "# header\n" + source.replace(":\n", ":  # block\n", 1)
    assert _kinds_and_texts(commented) == _kinds_and_texts(source)


def test_normalize_single_line() -> None:
    """Test one statement is one logical line at depth 0."""
    (line,) = normalize_source("x = 1").lines
    assert line.indent_depth == 0
    assert line.texts == ("x", "=", "1")


def test_normalize_block_depth() -> None:
    """Test a block body is one level deeper."""
    program = normalize_source("if a:\n    b()")
    assert [line.indent_depth for line in program.lines] == [0, 1]


def test_normalize_joins_brackets() -> None:
    """Test a bracketed expression over several lines is one logical line."""
    program = normalize_source("x = foo(1,\n        2)\ny = [\n  3,\n]\n")
    assert [render_line(line) for line in program.lines] == [
        "x = foo ( 1 , 2 )",
        "y = [ 3 , ]",
    ]


def test_render_line() -> None:
    """Test rendering joins the visible tokens with single spaces."""
    assert render_line(tokenize("print()")[:3]) == "print ( )"
    (line,) = normalize_source("x = int(input())\n").lines
    assert render_line(line) == "x = int ( input ( ) )"
    assert render_line([]) == ""


@pytest.mark.parametrize("source", SNIPPETS)
def test_render_is_stable(source: str) -> None:
    """Test re-lexing a rendered line renders it the same way."""
    for line in normalize_source(source).lines:
        if any(token.kind is TokenKind.STRING for token in line.tokens):
            continue
        rendered = render_line(line)
        (again,) = normalize_source(rendered).lines
        assert render_line(again) == rendered


def test_dump_program() -> None:
    """Test the debug dump prefixes each rendered line with its depth."""
    program = normalize_source("if a:\n    b()  # call\n\nc = 1\n")
    assert dump_program(program) == "0\tif a :\n1\tb ( )\n0\tc = 1\n"


@pytest.mark.parametrize("kind", list(TokenKind))
def test_control_tokens(kind: TokenKind) -> None:
    """Test only NEWLINE, INDENT and DEDENT tokens are control tokens."""
    token = Token(kind, "", 1)
    assert token.is_control is (kind in CONTROL_KINDS)
    assert CONTROL_KINDS == {TokenKind.NEWLINE, TokenKind.INDENT, TokenKind.DEDENT}
