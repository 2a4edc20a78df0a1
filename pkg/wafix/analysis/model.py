"""Models for the novice and expert difference analysis."""
from __future__ import annotations

from typing import Any, Iterable, Optional

import attr
from pydantic import Field

from wafix.const import UserLevel
from wafix.model import BaseModel

Matrix = tuple[tuple[int, ...], ...]
RealMatrix = tuple[tuple[Optional[float], ...], ...]


def _matrix(rows: Iterable[Iterable[Any]]) -> tuple[tuple[Any, ...], ...]:
    return tuple(tuple(row) for row in rows)


@attr.s(frozen=True, slots=True)
class PairErrors:
    """The summarized errors of one code pair with its author's level."""

    pair_id: str = attr.ib()
    user_id: str = attr.ib()
    problem_id: str = attr.ib()
    level: UserLevel = attr.ib()
    summaries: frozenset[str] = attr.ib(converter=frozenset)


@attr.s(frozen=True, slots=True)
class ContingencyTable:
    """Pair counts per summarized rule (rows) and user level (columns)."""

    problem_id: str = attr.ib()
    row_names: tuple[str, ...] = attr.ib(converter=tuple)
    col_names: tuple[UserLevel, ...] = attr.ib(converter=tuple)
    counts: Matrix = attr.ib(converter=_matrix)
    dropped_cols: tuple[UserLevel, ...] = attr.ib(converter=tuple, factory=tuple)

    @property
    def row_totals(self) -> list[int]:
        """Return n_i."""
        return [sum(row) for row in self.counts]

    @property
    def col_totals(self) -> list[int]:
        """Return n_j."""
        return [
            sum(row[j] for row in self.counts) for j in range(len(self.col_names))
        ]

    @property
    def total(self) -> int:
        """Return N."""
        return sum(self.row_totals)

    @property
    def expected(self) -> list[list[float]]:
        """Return E_ij = n_i * n_j / N."""
        total = self.total
        col_totals = self.col_totals
        return [
            [row_total * col_total / total for col_total in col_totals]
            for row_total in self.row_totals
        ]

    @property
    def dof(self) -> int:
        """Return (rows - 1) * (cols - 1), never negative."""
        return max(len(self.row_names) - 1, 0) * max(len(self.col_names) - 1, 0)

    @property
    def untestable_reason(self) -> Optional[str]:
        """Return why the table cannot be tested, None if it can."""
        if not self.row_names:
            return "no errors"
        if len(self.row_names) < 2:
            return "fewer than 2 error rows"
        if len(self.col_names) < 2:
            return "fewer than 2 user level columns"
        return None

    def count(self, row_name: str, col_name: UserLevel) -> int:
        """Return O_ij by names."""
        return self.counts[self.row_names.index(row_name)][
            self.col_names.index(col_name)
        ]


@attr.s(frozen=True, slots=True)
class ChiSquareResult:
    """Chi-square test and standardized residuals of one table.

    Residual cells are None where a margin equals the grand total.
    """

    problem_id: str = attr.ib()
    chi_square: float = attr.ib()
    dof: int = attr.ib()
    p_value: float = attr.ib()
    residuals: RealMatrix = attr.ib(converter=_matrix)
    residual_p: RealMatrix = attr.ib(converter=_matrix)
    alpha: float = attr.ib()

    @property
    def significant(self) -> bool:
        """Return whether the chi-square test rejects independence."""
        return self.p_value < self.alpha


class DifferenceRow(BaseModel):
    """A summarized rule whose frequency differs between novices and experts."""

    problem_id: str
    chi2: float
    dof: int
    p: float
    rule: str
    residual: float
    residual_p: float
    novice_ratio: float
    expert_ratio: float
    direction: UserLevel


class UntestableProblem(BaseModel):
    """A problem whose table could not be tested."""

    problem_id: str
    reason: str


class DifferenceReport(BaseModel):
    """Significant differences between novices and experts per problem."""

    alpha: float
    tested: int = 0
    rows: list[DifferenceRow] = Field(default_factory=list)
    untestable: list[UntestableProblem] = Field(default_factory=list)
