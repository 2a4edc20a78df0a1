"""Rendering of difference reports."""
from __future__ import annotations

from typing import IO

from wafix.analysis.model import DifferenceReport, DifferenceRow
from wafix.const import UserLevel
from wafix.model import write_records

COLUMNS = ("Problem", "P-value", "Summarized Rule", "P-value", "Novice", "Expert")


def _ratio(row: DifferenceRow, level: UserLevel) -> str:
    value = row.novice_ratio if level is UserLevel.NOVICE else row.expert_ratio
    flag = "*" if row.direction is level else ""
    return f"{value * 100:.2f}%{flag}"


def render_report(report: DifferenceReport) -> str:
    """Render a report as an aligned text table with a header and warnings."""
    out = [
        "Significant differences between novices and experts\n",
        f"alpha={report.alpha} tested={report.tested} "
        "chi-square without continuity correction\n",
        "ratio = pairs of the level containing the error / "
        "error occurrences of the level on the problem; * marks the greater\n",
        "\n",
    ]
    table = [COLUMNS]
    table.extend(
        (
            row.problem_id,
            f"{row.p:.3e}",
            row.rule,
            f"{row.residual_p:.3e}",
            _ratio(row, UserLevel.NOVICE),
            _ratio(row, UserLevel.EXPERT),
        )
        for row in report.rows
    )
    widths = [max(len(line[i]) for line in table) for i in range(len(COLUMNS))]
    for line in table:
        out.append(
            "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
            + "\n"
        )

    if report.untestable:
        out.append("\nwarnings:\n")
        out.extend(
            f"  {problem.problem_id}: untestable ({problem.reason})\n"
            for problem in report.untestable
        )
    return "".join(out)


def write_report_records(stream: IO[str], report: DifferenceReport) -> int:
    """Write the report rows as line-delimited records."""
    return write_records(stream, report.rows)
