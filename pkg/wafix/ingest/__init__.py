"""Submission log parsing and WA to AC code pair construction."""
from __future__ import annotations

from collections import defaultdict
import json
import logging
from pathlib import Path
from typing import IO, Iterable, Iterator

import Levenshtein
from pydantic import ValidationError

from wafix.const import DEFAULT_MAX_EDIT_DISTANCE
from wafix.exceptions import SubmissionLogError
from wafix.ingest.model import (
    CodePair,
    LogError,
    PairMeta,
    SubmissionLog,
    SubmissionRecord,
)

_LOGGER = logging.getLogger(__name__)


def _describe_validation_error(err: ValidationError) -> str:
    """Return a compact one-line description of a validation error."""
    parts = []
    for error in err.errors():
        location = ".".join(str(loc) for loc in error["loc"]) or "record"
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)


def parse_submission_log(
    stream: IO[str], base_path: Path | None = None
) -> SubmissionLog:
    """Parse a line-delimited submission log.

    Records are returned in file order. Malformed lines, duplicate submission ids
    and unreadable ``source_path`` files become ``LogError`` entries citing the
    line number; the remaining lines are still parsed. ``source_path`` values are
    resolved against ``base_path`` and loaded into ``source``.
    """
    log = SubmissionLog()
    seen: set[str] = set()
    try:
        lines = list(stream)
    except OSError as err:
        raise SubmissionLogError(f"cannot read submission log: {err}") from err

    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as err:
            log.errors.append(
                LogError(line=line_number, message=f"invalid record: {err}")
            )
            continue
        if not isinstance(data, dict):
            log.errors.append(
                LogError(line=line_number, message="record is not an object")
            )
            continue
        try:
            record = SubmissionRecord.model_validate(data)
        except ValidationError as err:
            log.errors.append(
                LogError(line=line_number, message=_describe_validation_error(err))
            )
            continue
        if record.submission_id in seen:
            log.errors.append(
                LogError(
                    line=line_number,
                    message=f"duplicate submission_id {record.submission_id}",
                )
            )
            continue
        if record.source is None:
            assert record.source_path is not None
            path = Path(record.source_path)
            if base_path is not None and not path.is_absolute():
                path = base_path / path
            try:
                record.source = path.read_text(encoding="utf-8")
            except (OSError, UnicodeDecodeError) as err:
                log.errors.append(
                    LogError(line=line_number, message=f"cannot read {path}: {err}")
                )
                continue
        seen.add(record.submission_id)
        log.records.append(record)

    for error in log.errors:
        _LOGGER.warning("submission log line %s: %s", error.line, error.message)
    _LOGGER.debug(
        "parsed %s records with %s errors", len(log.records), len(log.errors)
    )
    return log


def read_submission_log(path: Path) -> SubmissionLog:
    """Parse the submission log stored at ``path``."""
    try:
        with path.open(encoding="utf-8") as stream:
            return parse_submission_log(stream, base_path=path.parent)
    except OSError as err:
        raise SubmissionLogError(f"cannot read submission log {path}: {err}") from err


def char_edit_distance(a: str, b: str) -> int:
    """Return the unit-cost Levenshtein distance over code points."""
    return Levenshtein.distance(a, b)


def _chronological(records: Iterable[SubmissionRecord]) -> list[SubmissionRecord]:
    """Sort records by time, breaking ties by submission id."""
    return sorted(records, key=lambda r: (r.submitted_at, r.submission_id))


def pair_candidates(records: Iterable[SubmissionRecord]) -> Iterator[CodePair]:
    """Yield every WA to AC pair before the distance filter.

    Each non-AC submission pairs with the earliest AC on the same problem by the
    same user submitted strictly after it.
    """
    by_user: defaultdict[str, list[SubmissionRecord]] = defaultdict(list)
    for record in records:
        by_user[record.user_id].append(record)

    for user_id in sorted(by_user):
        history = _chronological(by_user[user_id])
        position = {r.submission_id: index for index, r in enumerate(history, 1)}
        by_problem: defaultdict[str, list[SubmissionRecord]] = defaultdict(list)
        for record in history:
            by_problem[record.problem_id].append(record)

        for problem_id in sorted(by_problem):
            attempts = by_problem[problem_id]
            first_ac = next((r for r in attempts if r.is_accepted), None)
            for index, wa in enumerate(attempts):
                if wa.is_accepted:
                    continue
                ac = next(
                    (
                        r
                        for r in attempts[index + 1 :]
                        if r.is_accepted and r.submitted_at > wa.submitted_at
                    ),
                    None,
                )
                if ac is None:
                    continue
                assert wa.source is not None and ac.source is not None
                yield CodePair(
                    pair_id=CodePair.make_id(wa.submission_id, ac.submission_id),
                    user_id=user_id,
                    problem_id=problem_id,
                    wa=wa.source,
                    ac=ac.source,
                    wa_verdict=wa.verdict,
                    wa_submitted_at=wa.submitted_at,
                    ac_submitted_at=ac.submitted_at,
                    char_edit_distance=char_edit_distance(wa.source, ac.source),
                    meta=PairMeta(
                        total_submissions_at_time=position[wa.submission_id],
                        attempts_to_problem=index + 1,
                        is_first_acceptance=ac is first_ac,
                    ),
                )


def build_code_pairs(
    records: Iterable[SubmissionRecord],
    max_distance: int = DEFAULT_MAX_EDIT_DISTANCE,
) -> list[CodePair]:
    """Build the code pairs whose character edit distance is below the threshold."""
    pairs = [
        pair
        for pair in pair_candidates(records)
        if pair.char_edit_distance < max_distance
    ]
    _LOGGER.debug("built %s code pairs (max distance %s)", len(pairs), max_distance)
    return pairs
