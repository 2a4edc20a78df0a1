"""Models for classification rules and their labels."""
from __future__ import annotations

from typing import Optional

import attr
import regex

from wafix.const import RuleCategory, Side
from wafix.model import BaseModel


@attr.s(frozen=True, slots=True)
class Rule:
    """A classification rule.

    Pattern rules carry the compiled ``regex`` pattern. Trigger rules fire on a
    flag of the line operation instead and have no pattern.
    """

    name: str = attr.ib()
    category: RuleCategory = attr.ib()
    summary: str = attr.ib()
    pattern: Optional[str] = attr.ib(default=None)
    trigger: Optional[str] = attr.ib(default=None)
    compiled: Optional[regex.Pattern] = attr.ib(
        default=None, eq=False, repr=False
    )

    @property
    def is_trigger(self) -> bool:
        """Return whether this rule fires on a trigger rather than a pattern."""
        return self.trigger is not None


@attr.s(frozen=True, slots=True)
class RuleSet:
    """An ordered, immutable collection of rules."""

    rules: tuple[Rule, ...] = attr.ib(converter=tuple, factory=tuple)
    version: str = attr.ib(default="")
    requires: frozenset[str] = attr.ib(converter=frozenset, factory=frozenset)

    def __len__(self) -> int:
        """Return the number of rules."""
        return len(self.rules)

    def by_category(self, category: RuleCategory) -> list[Rule]:
        """Return the pattern rules of a category in file order."""
        return [
            rule
            for rule in self.rules
            if rule.category is category and not rule.is_trigger
        ]

    def triggered_by(self, trigger: str) -> list[Rule]:
        """Return the rules fired by a trigger in file order."""
        return [rule for rule in self.rules if rule.trigger == trigger]

    def summary_of(self, name: str) -> Optional[str]:
        """Return the summary of a rule name, or None if no rule has the name."""
        for rule in self.rules:
            if rule.name == name:
                return rule.summary
        return None


class ErrorLabel(BaseModel):
    """A classified error of one line operation of a code pair.

    Spans are character offsets into the rendered line of the matched side,
    the AC line when both sides matched. Token indexes are only set for
    token-replace rules.
    """

    pair_id: str
    rule: str
    summary: Optional[str] = None
    op_index: int
    side: Side
    span_start: int
    span_end: int
    wa_token_index: Optional[int] = None
    ac_token_index: Optional[int] = None

    @property
    def gold_key(self) -> tuple[str, str, int]:
        """Return the key labels are compared with gold labels by."""
        return (self.pair_id, self.rule, self.op_index)


class ScoreResult(BaseModel):
    """Accuracy of labels against hand labels; accuracy is None without labels."""

    correct: int
    total: int
    accuracy: Optional[float] = None
