"""Helpers for wafix tests."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Sequence

from wafix.const import Verdict

ARITHMETIC_WA = "a = int(input())\nb = a - 3\nprint(b)\n"
ARITHMETIC_AC = "a = int(input())\nb = a + 3\nprint(b)\n"
LITERAL_WA = "a = int(input())\nb = a + 2\nprint(b)\n"
LITERAL_AC = ARITHMETIC_AC

INTRO_PROBLEMS = ("P1", "P2")
EXPERT_PROBLEMS = tuple(f"X{index:02d}" for index in range(1, 12))


def make_record(
    submission_id: str,
    user_id: str,
    problem_id: str,
    verdict: Verdict | str,
    submitted_at: int,
    source: str = "print(1)\n",
) -> dict[str, Any]:
    """Return a submission log record."""
    return {
        "submission_id": submission_id,
        "user_id": user_id,
        "problem_id": problem_id,
        "verdict": str(verdict),
        "submitted_at": submitted_at,
        "source": source,
    }


def write_log(path: Path, records: Iterable[dict[str, Any]]) -> Path:
    """Write records as a line-delimited submission log."""
    path.write_text(
        "".join(json.dumps(record) + "\n" for record in records), encoding="utf-8"
    )
    return path


def levenshtein_oracle(a: Sequence[Any], b: Sequence[Any]) -> int:
    """Unit-cost edit distance by dynamic programming."""
    previous = list(range(len(b) + 1))
    for i, item_a in enumerate(a, start=1):
        current = [i]
        for j, item_b in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (item_a != item_b),
                )
            )
        previous = current
    return previous[-1]


def lcs_length(a: Sequence[Any], b: Sequence[Any]) -> int:
    """Length of the longest common subsequence by dynamic programming."""
    previous = [0] * (len(b) + 1)
    for item_a in a:
        current = [0]
        for j, item_b in enumerate(b, start=1):
            if item_a == item_b:
                current.append(previous[j - 1] + 1)
            else:
                current.append(max(previous[j], current[j - 1]))
        previous = current
    return previous[-1]


def _user_pair(
    user_id: str, wa: str, ac: str, extra: list[tuple[str, Verdict]]
) -> list[dict[str, Any]]:
    records = [
        make_record(f"{user_id}-1", user_id, "P1", Verdict.WA, 1, wa),
        make_record(f"{user_id}-2", user_id, "P1", Verdict.AC, 2, ac),
    ]
    for index, (problem_id, verdict) in enumerate(extra, start=3):
        records.append(
            make_record(f"{user_id}-{index}", user_id, problem_id, verdict, index)
        )
    return records


def synthetic_study(
    novices: tuple[int, int], experts: tuple[int, int]
) -> list[dict[str, Any]]:
    """Build a submission log of novices and experts fixing P1.

    ``novices`` and ``experts`` give how many users of the level fix a wrong
    arithmetic operator and how many fix a wrong literal. Every pair also
    changes a variable declaration. Novices pile up wrong answers on the
    introductory problem P2; experts solve eleven other problems.
    """
    novice_extra = [("P2", Verdict.WA)] * 5
    expert_extra = [(problem_id, Verdict.AC) for problem_id in EXPERT_PROBLEMS]
    records: list[dict[str, Any]] = []
    for prefix, (arithmetic, literal), extra in (
        ("n", novices, novice_extra),
        ("e", experts, expert_extra),
    ):
        for index in range(arithmetic + literal):
            wa, ac = (
                (ARITHMETIC_WA, ARITHMETIC_AC)
                if index < arithmetic
                else (LITERAL_WA, LITERAL_AC)
            )
            records.extend(_user_pair(f"{prefix}{index:03d}", wa, ac, extra))
    return records
