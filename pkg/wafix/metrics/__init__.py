"""Corpus statistics over code pairs."""
from __future__ import annotations

from collections import Counter
import logging
import statistics
from typing import Final, Iterable, Sequence

import Levenshtein

from wafix.const import TokenKind
from wafix.exceptions import EmptyCorpusError
from wafix.ingest.model import CodePair
from wafix.lexer import normalize_source
from wafix.lexer.model import NormalizedProgram
from wafix.metrics.model import PAIR_FIELDS, Aggregate, CorpusStats, PairStats
from wafix.rules.model import ErrorLabel

_LOGGER = logging.getLogger(__name__)

DECISION_KEYWORDS: Final[frozenset[str]] = frozenset(
    {"if", "elif", "for", "while", "and", "or", "except"}
)
PERCENT_FIELDS: Final[frozenset[str]] = frozenset(
    {"char_similarity", "token_similarity"}
)
BASIC_ROWS: Final[tuple[tuple[str, str], ...]] = (
    ("Avg. #Errors", "error_count"),
    ("Avg. Char-based Edit Distance", "char_edit_distance"),
    ("Avg. Char-based Similarity", "char_similarity"),
    ("Avg. Token-based Edit Distance", "token_edit_distance"),
    ("Avg. Token-based Similarity", "token_similarity"),
)
PROGRAM_ROWS: Final[tuple[tuple[str, str, str], ...]] = (
    ("Avg. #Lines", "wa_lines", "ac_lines"),
    ("Avg. #Chars", "wa_chars", "ac_chars"),
    ("Avg. #Tokens", "wa_tokens", "ac_tokens"),
    ("Avg. Cyclomatic Complexity", "wa_cyclomatic", "ac_cyclomatic"),
)


def token_edit_distance(a: NormalizedProgram, b: NormalizedProgram) -> int:
    """Return the Levenshtein distance over the visible token texts."""
    return Levenshtein.distance(a.token_texts, b.token_texts)


def similarity(distance: int, len_a: int, len_b: int) -> float:
    """Return 1 - distance / max(len_a, len_b); two empty sequences are identical."""
    longest = max(len_a, len_b)
    if longest == 0:
        return 1.0
    return 1.0 - distance / longest


def cyclomatic_complexity(program: NormalizedProgram) -> int:
    """Return 1 plus the number of decision points of the whole program.

    Conditional expression and comprehension ``if``/``for`` keywords count as
    decision points as well.
    """
    decisions = sum(
        1
        for line in program.lines
        for token in line.tokens
        if token.kind is TokenKind.KEYWORD and token.text in DECISION_KEYWORDS
    )
    return 1 + decisions


def pair_statistics(pair: CodePair, error_count: int = 0) -> PairStats:
    """Compute the statistics of one code pair."""
    wa = normalize_source(pair.wa)
    ac = normalize_source(pair.ac)
    wa_tokens, ac_tokens = len(wa.token_texts), len(ac.token_texts)
    token_distance = token_edit_distance(wa, ac)
    return PairStats(
        pair_id=pair.pair_id,
        user_id=pair.user_id,
        problem_id=pair.problem_id,
        error_count=error_count,
        char_edit_distance=pair.char_edit_distance,
        char_similarity=similarity(
            pair.char_edit_distance, len(pair.wa), len(pair.ac)
        ),
        token_edit_distance=token_distance,
        token_similarity=similarity(token_distance, wa_tokens, ac_tokens),
        wa_lines=len(wa.lines),
        ac_lines=len(ac.lines),
        wa_chars=len(pair.wa),
        ac_chars=len(pair.ac),
        wa_tokens=wa_tokens,
        ac_tokens=ac_tokens,
        wa_cyclomatic=cyclomatic_complexity(wa),
        ac_cyclomatic=cyclomatic_complexity(ac),
    )


def aggregate(stats: Sequence[PairStats], ddof: int = 0) -> CorpusStats:
    """Aggregate per-pair statistics into means and standard deviations."""
    if not stats:
        raise EmptyCorpusError("no code pairs to compute statistics over")
    aggregates = []
    for name in PAIR_FIELDS:
        values = [float(getattr(item, name)) for item in stats]
        if ddof == 0:
            sd = statistics.pstdev(values)
        else:
            sd = statistics.stdev(values) if len(values) > 1 else 0.0
        aggregates.append(Aggregate(name=name, mean=statistics.fmean(values), sd=sd))
    return CorpusStats(
        n_pairs=len(stats),
        n_users=len({item.user_id for item in stats}),
        n_problems=len({item.problem_id for item in stats}),
        ddof=ddof,
        aggregates=aggregates,
    )


def error_counts(labels: Iterable[ErrorLabel]) -> Counter[str]:
    """Count labels per pair."""
    return Counter(label.pair_id for label in labels)


def corpus_statistics(
    pairs: Sequence[CodePair], labels: Iterable[ErrorLabel], ddof: int = 0
) -> CorpusStats:
    """Compute per-pair statistics and aggregate them.

    ``labels`` are expected to be summarized and deduplicated per pair.
    """
    counts = error_counts(labels)
    stats = [pair_statistics(pair, counts.get(pair.pair_id, 0)) for pair in pairs]
    _LOGGER.debug("computed statistics of %s pairs", len(stats))
    return aggregate(stats, ddof)


def render_stats(stats: CorpusStats) -> str:
    """Render both statistics tables as aligned text."""
    basic: list[tuple[str, str]] = [
        ("Source", "Python 3"),
        ("#Code Pairs", str(stats.n_pairs)),
        ("#Users", str(stats.n_users)),
        ("#Problems", str(stats.n_problems)),
    ]
    for title, name in BASIC_ROWS:
        basic.append((title, stats.get(name).format(name in PERCENT_FIELDS)))

    width = max(len(title) for title, _ in basic)
    out = ["Basic statistics\n"]
    out.extend(f"{title:<{width}}  {value}\n" for title, value in basic)

    program = [("", "WA", "AC")]
    program.extend(
        (title, stats.get(wa).format(), stats.get(ac).format())
        for title, wa, ac in PROGRAM_ROWS
    )
    widths = [max(len(row[i]) for row in program) for i in range(3)]
    out.append("\nWA and AC programs\n")
    out.extend(
        f"{row[0]:<{widths[0]}}  {row[1]:<{widths[1]}}  {row[2]}".rstrip() + "\n"
        for row in program
    )
    return "".join(out)
