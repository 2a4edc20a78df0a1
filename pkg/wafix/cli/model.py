"""Models for the command line subcommands."""
from __future__ import annotations

from pathlib import Path
from typing import Any, Literal, Optional

from wafix.const import CliCommands, OutputFormat
from wafix.model import BaseModel


class CliCommand(BaseModel):
    """Arguments shared by every subcommand."""

    command: CliCommands
    config: Optional[Path] = None
    debug: bool = False
    quiet: bool = False

    def overrides(self) -> dict[str, Any]:
        """Return the run configuration values given on the command line."""
        return {}


class PairsCommand(CliCommand):
    """Build code pairs from a submission log."""

    command: Literal[CliCommands.PAIRS] = CliCommands.PAIRS
    log: Path
    output: Optional[Path] = None
    max_distance: Optional[int] = None

    def overrides(self) -> dict[str, Any]:
        """Return the run configuration values given on the command line."""
        return {"max_edit_distance": self.max_distance}


class ClassifyCommand(CliCommand):
    """Classify the errors of code pairs."""

    command: Literal[CliCommands.CLASSIFY] = CliCommands.CLASSIFY
    pairs: Path
    output: Optional[Path] = None
    rules: Optional[Path] = None
    dedup: bool = False
    jobs: Optional[int] = None

    def overrides(self) -> dict[str, Any]:
        """Return the run configuration values given on the command line."""
        return {"rules": self.rules, "jobs": self.jobs}


class StatsCommand(CliCommand):
    """Compute corpus statistics."""

    command: Literal[CliCommands.STATS] = CliCommands.STATS
    pairs: Path
    labels: Optional[Path] = None
    output: Optional[Path] = None
    rules: Optional[Path] = None
    jobs: Optional[int] = None
    format: Optional[OutputFormat] = None

    def overrides(self) -> dict[str, Any]:
        """Return the run configuration values given on the command line."""
        return {"rules": self.rules, "jobs": self.jobs, "output_format": self.format}


class AnalyzeCommand(CliCommand):
    """Compare the errors of novices and experts."""

    command: Literal[CliCommands.ANALYZE] = CliCommands.ANALYZE
    labels: Path
    log: Path
    intro_problems: Optional[Path] = None
    output: Optional[Path] = None
    rules: Optional[Path] = None
    alpha: Optional[float] = None
    format: Optional[OutputFormat] = None

    def overrides(self) -> dict[str, Any]:
        """Return the run configuration values given on the command line."""
        return {
            "intro_problems": self.intro_problems,
            "rules": self.rules,
            "alpha": self.alpha,
            "output_format": self.format,
        }


class ScoreCommand(CliCommand):
    """Score labels against hand labels."""

    command: Literal[CliCommands.SCORE] = CliCommands.SCORE
    labels: Path
    gold: Path
