"""Error classification by regular expression rules.

Each classified rule belongs to one summarized rule; labels keep both names.
"""
from __future__ import annotations

import logging
from typing import Iterable, Optional

from wafix.exceptions import UnknownSummaryError
from wafix.rules.engine import classify
from wafix.rules.model import ErrorLabel, Rule, RuleSet, ScoreResult
from wafix.rules.parser import load_default_rules, load_rules, load_rules_file
from wafix.rules.registries import RULE_SUMMARY, SUMMARY_GROUPS

_LOGGER = logging.getLogger(__name__)

__all__ = [
    "ErrorLabel",
    "Rule",
    "RuleSet",
    "ScoreResult",
    "classify",
    "dedup_per_pair",
    "load_default_rules",
    "load_rules",
    "load_rules_file",
    "score_against_gold",
    "summarize",
]


def summarize(
    labels: Iterable[ErrorLabel], rule_set: Optional[RuleSet] = None
) -> list[ErrorLabel]:
    """Fill in the summarized rule of every label.

    The rule set is consulted first so custom rule files can name their own
    rules, then the shipped grouping, then the summary the label already has.
    """
    summarized = []
    for label in labels:
        summary = rule_set.summary_of(label.rule) if rule_set is not None else None
        if summary is None:
            summary = RULE_SUMMARY.get(label.rule, label.summary)
        if summary is None or summary not in SUMMARY_GROUPS:
            raise UnknownSummaryError(f"no summarized rule for {label.rule!r}")
        summarized.append(label.model_copy(update={"summary": summary}))
    return summarized


def dedup_per_pair(labels: Iterable[ErrorLabel]) -> list[ErrorLabel]:
    """Keep the first label of every (pair, summarized rule)."""
    seen: set[tuple[str, str]] = set()
    kept = []
    for label in labels:
        if label.summary is None:
            raise UnknownSummaryError(f"label {label.rule!r} is not summarized")
        key = (label.pair_id, label.summary)
        if key in seen:
            continue
        seen.add(key)
        kept.append(label)
    return kept


def score_against_gold(
    labels: Iterable[ErrorLabel], gold: Iterable[ErrorLabel]
) -> ScoreResult:
    """Count the labels that exactly match a hand label."""
    gold_keys = {label.gold_key for label in gold}
    labels = list(labels)
    correct = sum(1 for label in labels if label.gold_key in gold_keys)
    total = len(labels)
    accuracy = correct / total if total else None
    _LOGGER.debug("%s of %s labels match the gold labels", correct, total)
    return ScoreResult(correct=correct, total=total, accuracy=accuracy)
