"""Exceptions used by wafix."""
from __future__ import annotations


class WafixException(Exception):
    """Base class for wafix exceptions."""


class ConfigurationError(WafixException):
    """Raised for an invalid run configuration."""


class SubmissionLogError(WafixException):
    """Raised when a submission log cannot be read at all."""


class RuleFileError(WafixException):
    """Raised when a rule file has one or more problems."""

    def __init__(self, problems: list[str]) -> None:
        """Initialize with every problem found in the rule file."""
        super().__init__("; ".join(problems))
        self.problems = problems


class UnknownSummaryError(WafixException):
    """Raised when a label cannot be mapped to a summarized rule."""


class UntestableTableError(WafixException):
    """Raised when a contingency table cannot be tested."""

    def __init__(self, problem_id: str, reason: str) -> None:
        """Initialize with the problem and the reason."""
        super().__init__(f"{problem_id}: {reason}")
        self.problem_id = problem_id
        self.reason = reason


class EmptyCorpusError(WafixException):
    """Raised when statistics are requested over no pairs."""


class RecordFileError(WafixException):
    """Raised when a line-delimited record file cannot be read."""
