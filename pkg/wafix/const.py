"""Constants."""

from enum import StrEnum
from typing import Final


class Verdict(StrEnum):
    """Judge verdicts of a submission."""

    AC = "AC"
    WA = "WA"
    RE = "RE"
    TLE = "TLE"
    MLE = "MLE"
    CE = "CE"
    OTHER = "OTHER"

    @classmethod
    def parse(cls, value: str) -> "Verdict":
        """Map a log verdict string to a verdict, unknown strings map to OTHER."""
        key = " ".join(value.strip().upper().replace("_", " ").split())
        return VERDICT_ALIASES.get(key, cls.OTHER)


VERDICT_ALIASES: Final[dict[str, Verdict]] = {
    "AC": Verdict.AC,
    "ACCEPTED": Verdict.AC,
    "WA": Verdict.WA,
    "WRONG ANSWER": Verdict.WA,
    "RE": Verdict.RE,
    "RUNTIME ERROR": Verdict.RE,
    "TLE": Verdict.TLE,
    "TIME LIMIT EXCEEDED": Verdict.TLE,
    "MLE": Verdict.MLE,
    "MEMORY LIMIT EXCEEDED": Verdict.MLE,
    "CE": Verdict.CE,
    "COMPILE ERROR": Verdict.CE,
}


class TokenKind(StrEnum):
    """Kinds of lexer tokens."""

    NAME = "NAME"
    NUMBER = "NUMBER"
    STRING = "STRING"
    OPERATOR = "OPERATOR"
    KEYWORD = "KEYWORD"
    NEWLINE = "NEWLINE"
    INDENT = "INDENT"
    DEDENT = "DEDENT"


CONTROL_KINDS: Final[frozenset[TokenKind]] = frozenset(
    {TokenKind.NEWLINE, TokenKind.INDENT, TokenKind.DEDENT}
)


class ChangeLabel(StrEnum):
    """Change labels of lines and tokens."""

    EQUAL = "EQUAL"
    INSERT = "INSERT"
    DELETE = "DELETE"
    REPLACE = "REPLACE"


class RuleCategory(StrEnum):
    """Categories of classification rules."""

    INSERT = "insert"
    DELETE = "delete"
    LINE_REPLACE = "line-replace"
    WITHIN_REPLACE = "within-replace"
    TOKEN_REPLACE = "token-replace"


class Side(StrEnum):
    """Side of a code pair a label was matched on."""

    WA = "WA"
    AC = "AC"
    BOTH = "BOTH"


class UserLevel(StrEnum):
    """Programmer levels."""

    NOVICE = "NOVICE"
    EXPERT = "EXPERT"
    OTHER = "OTHER"


class OutputFormat(StrEnum):
    """Report output formats."""

    HUMAN = "human"
    RECORDS = "records"


class CliCommands(StrEnum):
    """CLI subcommands."""

    PAIRS = "pairs"
    CLASSIFY = "classify"
    STATS = "stats"
    ANALYZE = "analyze"
    SCORE = "score"


DEFAULT_MAX_EDIT_DISTANCE: Final[int] = 100
DEFAULT_ALPHA: Final[float] = 0.05
TAB_SIZE: Final[int] = 8

NOVICE_WA_AC_FACTOR: Final[int] = 5
EXPERT_MIN_SOLVED: Final[int] = 10

INDENT_TRIGGER: Final[str] = "indent"

EXIT_OK: Final[int] = 0
EXIT_FAILURE: Final[int] = 1
EXIT_USAGE: Final[int] = 2

PAIR_ID_SEPARATOR: Final[str] = ":"
