"""Models for corpus statistics."""
from __future__ import annotations

from typing import Final

from wafix.model import BaseModel

PAIR_FIELDS: Final[tuple[str, ...]] = (
    "error_count",
    "char_edit_distance",
    "char_similarity",
    "token_edit_distance",
    "token_similarity",
    "wa_lines",
    "ac_lines",
    "wa_chars",
    "ac_chars",
    "wa_tokens",
    "ac_tokens",
    "wa_cyclomatic",
    "ac_cyclomatic",
)


class PairStats(BaseModel):
    """Statistics of one code pair."""

    pair_id: str
    user_id: str
    problem_id: str
    error_count: int
    char_edit_distance: int
    char_similarity: float
    token_edit_distance: int
    token_similarity: float
    wa_lines: int
    ac_lines: int
    wa_chars: int
    ac_chars: int
    wa_tokens: int
    ac_tokens: int
    wa_cyclomatic: int
    ac_cyclomatic: int


class Aggregate(BaseModel):
    """Mean and standard deviation of one statistic."""

    name: str
    mean: float
    sd: float

    def format(self, percent: bool = False) -> str:
        """Format as ``mean (± sd)``."""
        if percent:
            return f"{self.mean * 100:.2f}% (± {self.sd * 100:.2f}%)"
        return f"{self.mean:.2f} (± {self.sd:.2f})"


class CorpusStats(BaseModel):
    """Aggregated statistics over the code pairs of a corpus."""

    n_pairs: int
    n_users: int
    n_problems: int
    ddof: int = 0
    aggregates: list[Aggregate]

    def get(self, name: str) -> Aggregate:
        """Return the aggregate of a pair statistic."""
        for aggregate in self.aggregates:
            if aggregate.name == name:
                return aggregate
        raise KeyError(name)
