"""Configuration utilities for wafix."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from wafix.config.model import RunConfiguration
from wafix.exceptions import ConfigurationError

_LOGGER = logging.getLogger(__name__)


def load_configuration(
    config_path: Path | None = None, overrides: dict[str, Any] | None = None
) -> RunConfiguration:
    """Load the run configuration from a JSON file and apply explicit overrides."""
    data: dict[str, Any] = {}
    if config_path is None:
        _LOGGER.info("No config file provided, using default configuration")
    else:
        _LOGGER.info("Loading configuration from %s", config_path)
        try:
            data = RunConfiguration.model_validate_json(
                config_path.read_text(encoding="utf-8")
            ).model_dump(exclude_unset=True)
        except OSError as err:
            raise ConfigurationError(f"cannot read {config_path}: {err}") from err
        except ValidationError as err:
            raise ConfigurationError(f"invalid configuration: {err}") from err
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return RunConfiguration.model_validate(data)
    except ValidationError as err:
        raise ConfigurationError(f"invalid configuration: {err}") from err


def load_intro_problems(path: Path | None) -> frozenset[str]:
    """Read a problem-id list, one id per line, ignoring blanks and # comments."""
    if path is None:
        return frozenset()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ConfigurationError(f"cannot read intro problems {path}: {err}") from err
    problems = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            problems.add(line)
    _LOGGER.debug("loaded %s introductory problems from %s", len(problems), path)
    return frozenset(problems)
