"""Models for submission logs and code pairs."""
from __future__ import annotations

from typing import Any, Container, Optional

from pydantic import Field, field_validator, model_validator

from wafix.const import PAIR_ID_SEPARATOR, Verdict
from wafix.model import BaseModel


class SubmissionRecord(BaseModel):
    """One judged submission."""

    submission_id: str
    user_id: str
    problem_id: str
    verdict: Verdict
    submitted_at: int
    source: Optional[str] = None
    source_path: Optional[str] = None

    @field_validator("verdict", mode="before")
    @classmethod
    def convert_verdict(cls, verdict: Any) -> Verdict:
        """Map judge verdict strings, unknown ones become OTHER."""
        if isinstance(verdict, Verdict):
            return verdict
        return Verdict.parse(str(verdict))

    @field_validator("submission_id", "user_id", "problem_id", mode="before")
    @classmethod
    def convert_identifier(cls, value: Any) -> str:
        """Accept numeric identifiers from judge exports."""
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            return str(value)
        raise ValueError("identifier must be a string or an integer")

    @model_validator(mode="after")
    def check_source(self) -> SubmissionRecord:
        """Require an inline source or a source path."""
        if self.source is None and self.source_path is None:
            raise ValueError("record needs either source or source_path")
        return self

    @property
    def is_accepted(self) -> bool:
        """Return whether the submission was accepted."""
        return self.verdict is Verdict.AC


class LogError(BaseModel):
    """A malformed line of a submission log."""

    line: int
    message: str


class SubmissionLog(BaseModel):
    """Parsed submission log: records in file order plus per-line errors."""

    records: list[SubmissionRecord] = Field(default_factory=list)
    errors: list[LogError] = Field(default_factory=list)


class PairMeta(BaseModel):
    """Metadata of a code pair taken from the user's history."""

    total_submissions_at_time: int
    attempts_to_problem: int
    is_first_acceptance: bool


class CodePair(BaseModel):
    """A wrong and an accepted source of one user on one problem."""

    pair_id: str
    user_id: str
    problem_id: str
    wa: str
    ac: str
    wa_verdict: Verdict = Verdict.WA
    wa_submitted_at: int
    ac_submitted_at: int
    char_edit_distance: int
    meta: PairMeta

    @staticmethod
    def make_id(wa_submission_id: str, ac_submission_id: str) -> str:
        """Return the pair id for two submission ids."""
        return f"{wa_submission_id}{PAIR_ID_SEPARATOR}{ac_submission_id}"

    @staticmethod
    def split_id(
        pair_id: str, known: Container[str] | None = None
    ) -> tuple[str, str]:
        """Return the WA and AC submission ids of a pair id.

        Submission ids may contain the separator; with ``known`` ids the split
        whose both halves are known wins, otherwise the last separator splits.
        """
        parts = pair_id.split(PAIR_ID_SEPARATOR)
        splits = [
            (PAIR_ID_SEPARATOR.join(parts[:i]), PAIR_ID_SEPARATOR.join(parts[i:]))
            for i in range(len(parts) - 1, 0, -1)
        ]
        if not splits:
            return pair_id, ""
        if known is not None:
            for wa_id, ac_id in splits:
                if wa_id in known and ac_id in known:
                    return wa_id, ac_id
        return splits[0]

    @property
    def wa_submission_id(self) -> str:
        """Return the submission id of the wrong side."""
        return self.split_id(self.pair_id)[0]
