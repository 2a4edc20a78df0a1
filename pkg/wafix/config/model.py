"""Configuration models for wafix runs."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

from pydantic import field_validator

from wafix.const import DEFAULT_ALPHA, DEFAULT_MAX_EDIT_DISTANCE, OutputFormat
from wafix.model import BaseModel


class RunConfiguration(BaseModel):
    """Configuration shared by the wafix subcommands."""

    max_edit_distance: int = DEFAULT_MAX_EDIT_DISTANCE
    alpha: float = DEFAULT_ALPHA
    intro_problems: Optional[Path] = None
    rules: Optional[Path] = None
    jobs: int = 1
    output_format: OutputFormat = OutputFormat.HUMAN
    std_ddof: int = 0

    @field_validator("max_edit_distance")
    @classmethod
    def check_max_edit_distance(cls, value: int) -> int:
        """Require a positive distance threshold."""
        if value < 1:
            raise ValueError("max_edit_distance must be at least 1")
        return value

    @field_validator("alpha")
    @classmethod
    def check_alpha(cls, value: float) -> float:
        """Require a significance level strictly between 0 and 1."""
        if not 0.0 < value < 1.0:
            raise ValueError("alpha must be in (0, 1)")
        return value

    @field_validator("jobs")
    @classmethod
    def check_jobs(cls, value: int) -> int:
        """Require at least one worker."""
        if value < 1:
            raise ValueError("jobs must be at least 1")
        return value

    @field_validator("std_ddof")
    @classmethod
    def check_std_ddof(cls, value: int) -> int:
        """Allow population (0) or sample (1) standard deviation."""
        if value not in (0, 1):
            raise ValueError("std_ddof must be 0 or 1")
        return value
