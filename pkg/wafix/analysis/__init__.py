"""Novice and expert error frequency analysis.

Users are split into levels from their submission history, per-problem
contingency tables count the code pairs containing each summarized error, and
a chi-square test followed by standardized Pearson residuals locates the
errors whose frequency differs between levels. No continuity correction is
applied.
"""
from __future__ import annotations

from collections import defaultdict
import logging
import math
from typing import Final, Iterable, Mapping, Optional, Sequence

from wafix.analysis.model import (
    ChiSquareResult,
    ContingencyTable,
    DifferenceReport,
    DifferenceRow,
    PairErrors,
    UntestableProblem,
)
from wafix.analysis.special import chi2_sf, normal_two_tailed
from wafix.const import (
    DEFAULT_ALPHA,
    EXPERT_MIN_SOLVED,
    NOVICE_WA_AC_FACTOR,
    UserLevel,
)
from wafix.exceptions import UnknownSummaryError, UntestableTableError
from wafix.ingest.model import CodePair, SubmissionRecord
from wafix.rules.model import ErrorLabel

_LOGGER = logging.getLogger(__name__)

LEVEL_COLUMNS: Final[tuple[UserLevel, ...]] = (UserLevel.NOVICE, UserLevel.EXPERT)


def classify_user_level(
    history: Iterable[SubmissionRecord], intro_problems: frozenset[str]
) -> UserLevel:
    """Return the level of a user from their complete submission history."""
    accepted = 0
    rejected = 0
    solved: set[str] = set()
    for record in history:
        if record.is_accepted:
            accepted += 1
            solved.add(record.problem_id)
        else:
            rejected += 1

    if len(solved - intro_problems) > EXPERT_MIN_SOLVED:
        return UserLevel.EXPERT
    if solved <= intro_problems and rejected > NOVICE_WA_AC_FACTOR * accepted:
        return UserLevel.NOVICE
    return UserLevel.OTHER


def classify_user_levels(
    records: Iterable[SubmissionRecord], intro_problems: frozenset[str]
) -> dict[str, UserLevel]:
    """Return the level of every user in a submission log."""
    histories: defaultdict[str, list[SubmissionRecord]] = defaultdict(list)
    for record in records:
        histories[record.user_id].append(record)
    levels = {
        user_id: classify_user_level(history, intro_problems)
        for user_id, history in sorted(histories.items())
    }
    _LOGGER.debug(
        "user levels: %s",
        {level.value: list(levels.values()).count(level) for level in UserLevel},
    )
    return levels


def join_pair_errors(
    labels: Iterable[ErrorLabel],
    records: Iterable[SubmissionRecord],
    levels: Mapping[str, UserLevel],
    pair_ids: Iterable[str] = (),
) -> list[PairErrors]:
    """Attach authors, problems and levels to the summarized labels of each pair.

    Pairs are found through the WA submission id in their pair id; pairs listed
    in ``pair_ids`` are kept even without labels.
    """
    by_submission = {record.submission_id: record for record in records}
    summaries: dict[str, set[str]] = {pair_id: set() for pair_id in pair_ids}
    for label in labels:
        if label.summary is None:
            raise UnknownSummaryError(f"label {label.rule!r} is not summarized")
        summaries.setdefault(label.pair_id, set()).add(label.summary)

    joined = []
    for pair_id in sorted(summaries):
        wa_submission_id, _ = CodePair.split_id(pair_id, by_submission)
        record = by_submission.get(wa_submission_id)
        if record is None:
            _LOGGER.warning(
                "pair %s: no submission %s in log", pair_id, wa_submission_id
            )
            continue
        joined.append(
            PairErrors(
                pair_id=pair_id,
                user_id=record.user_id,
                problem_id=record.problem_id,
                level=levels.get(record.user_id, UserLevel.OTHER),
                summaries=summaries[pair_id],
            )
        )
    return joined


def build_table(problem_id: str, pairs: Iterable[PairErrors]) -> ContingencyTable:
    """Count the pairs of each level on a problem containing each summarized error.

    Rows and columns with a zero total are dropped.
    """
    counts: defaultdict[str, dict[UserLevel, int]] = defaultdict(
        lambda: dict.fromkeys(LEVEL_COLUMNS, 0)
    )
    for pair in pairs:
        if pair.problem_id != problem_id or pair.level not in LEVEL_COLUMNS:
            continue
        for summary in pair.summaries:
            counts[summary][pair.level] += 1

    row_names = sorted(name for name, row in counts.items() if sum(row.values()))
    col_names = [
        level for level in LEVEL_COLUMNS if any(counts[n][level] for n in row_names)
    ]
    return ContingencyTable(
        problem_id=problem_id,
        row_names=row_names,
        col_names=col_names,
        counts=[[counts[name][level] for level in col_names] for name in row_names],
        dropped_cols=[level for level in LEVEL_COLUMNS if level not in col_names],
    )


def _require_testable(table: ContingencyTable) -> None:
    reason = table.untestable_reason
    if reason is not None:
        raise UntestableTableError(table.problem_id, reason)


def chi_square_test(table: ContingencyTable) -> tuple[float, int, float]:
    """Return the chi-square statistic, degrees of freedom and upper tail p."""
    _require_testable(table)
    statistic = 0.0
    for observed_row, expected_row in zip(table.counts, table.expected):
        for observed, expected in zip(observed_row, expected_row):
            statistic += (observed - expected) ** 2 / expected
    dof = table.dof
    return statistic, dof, chi2_sf(statistic, dof)


def residual_analysis(
    table: ContingencyTable,
) -> tuple[list[list[Optional[float]]], list[list[Optional[float]]]]:
    """Return the standardized Pearson residuals and their two-tailed p-values."""
    _require_testable(table)
    total = table.total
    col_totals = table.col_totals
    residuals: list[list[Optional[float]]] = []
    p_values: list[list[Optional[float]]] = []
    for observed_row, expected_row, row_total in zip(
        table.counts, table.expected, table.row_totals
    ):
        residual_row: list[Optional[float]] = []
        p_row: list[Optional[float]] = []
        for observed, expected, col_total in zip(
            observed_row, expected_row, col_totals
        ):
            variance = expected * (1 - row_total / total) * (1 - col_total / total)
            if variance <= 0:
                residual_row.append(None)
                p_row.append(None)
                continue
            residual = (observed - expected) / math.sqrt(variance)
            residual_row.append(residual)
            p_row.append(normal_two_tailed(residual))
        residuals.append(residual_row)
        p_values.append(p_row)
    return residuals, p_values


def evaluate_table(
    table: ContingencyTable, alpha: float = DEFAULT_ALPHA
) -> ChiSquareResult:
    """Run the chi-square test and the residual analysis on a table."""
    chi_square, dof, p_value = chi_square_test(table)
    residuals, residual_p = residual_analysis(table)
    return ChiSquareResult(
        problem_id=table.problem_id,
        chi_square=chi_square,
        dof=dof,
        p_value=p_value,
        residuals=residuals,
        residual_p=residual_p,
        alpha=alpha,
    )


def difference_report(
    tables: Sequence[ContingencyTable],
    results: Sequence[Optional[ChiSquareResult]],
    alpha: float = DEFAULT_ALPHA,
) -> DifferenceReport:
    """Report the errors whose frequency differs between novices and experts.

    ``results`` are aligned with ``tables``; None marks an untestable table.
    A ratio is the number of pairs of a level containing the error divided by
    all error occurrences of that level on the problem.
    """
    report = DifferenceReport(alpha=alpha)
    for table, result in sorted(
        zip(tables, results), key=lambda item: item[0].problem_id
    ):
        if result is None:
            report.untestable.append(
                UntestableProblem(
                    problem_id=table.problem_id,
                    reason=table.untestable_reason or "untestable",
                )
            )
            continue
        report.tested += 1
        if not result.p_value < alpha:
            continue

        col_totals = table.col_totals
        novice = table.col_names.index(UserLevel.NOVICE)
        expert = table.col_names.index(UserLevel.EXPERT)
        for i, rule in enumerate(table.row_names):
            residual = result.residuals[i][novice]
            residual_p = result.residual_p[i][novice]
            if residual is None or residual_p is None or not residual_p < alpha:
                continue
            novice_ratio = table.counts[i][novice] / col_totals[novice]
            expert_ratio = table.counts[i][expert] / col_totals[expert]
            report.rows.append(
                DifferenceRow(
                    problem_id=table.problem_id,
                    chi2=result.chi_square,
                    dof=result.dof,
                    p=result.p_value,
                    rule=rule,
                    residual=residual,
                    residual_p=residual_p,
                    novice_ratio=novice_ratio,
                    expert_ratio=expert_ratio,
                    direction=(
                        UserLevel.NOVICE
                        if novice_ratio > expert_ratio
                        else UserLevel.EXPERT
                    ),
                )
            )
    _LOGGER.debug(
        "%s problems tested, %s untestable, %s differences",
        report.tested,
        len(report.untestable),
        len(report.rows),
    )
    return report


def analyze(
    pairs: Sequence[PairErrors], alpha: float = DEFAULT_ALPHA
) -> DifferenceReport:
    """Build, test and report the tables of every problem with labeled pairs."""
    tables = []
    results: list[Optional[ChiSquareResult]] = []
    for problem_id in sorted({pair.problem_id for pair in pairs}):
        table = build_table(problem_id, pairs)
        tables.append(table)
        try:
            results.append(evaluate_table(table, alpha))
        except UntestableTableError as err:
            _LOGGER.info("problem %s not tested: %s", problem_id, err.reason)
            results.append(None)
    return difference_report(tables, results, alpha)
