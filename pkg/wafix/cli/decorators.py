"""Decorators for the command line subcommands."""
from __future__ import annotations

from collections.abc import Callable
from functools import wraps
import logging
from typing import Any

from wafix.cli.model import CliCommand
from wafix.config.model import RunConfiguration
from wafix.const import EXIT_FAILURE, EXIT_USAGE
from wafix.exceptions import ConfigurationError, WafixException

_LOGGER = logging.getLogger(__name__)

CommandHandler = Callable[[Any, RunConfiguration], int]


def handle_errors(func: CommandHandler) -> CommandHandler:
    """Map exceptions raised by a handler to exit codes."""

    @wraps(func)
    def wrapper(command: CliCommand, config: RunConfiguration) -> int:
        try:
            return func(command, config)
        except ConfigurationError as err:
            _LOGGER.error("%s: %s", command.command, err)
            return EXIT_USAGE
        except WafixException as err:
            _LOGGER.error("%s failed: %s", command.command, err)
            return EXIT_FAILURE
        except Exception as err:  # pylint: disable=broad-except
            _LOGGER.exception("Error handling %s: %s", command.command, err)
            return EXIT_FAILURE

    return wrapper


def cli_command(
    model: type[CliCommand],
) -> Callable[[CommandHandler], CommandHandler]:
    """Tag a function as the handler of a subcommand."""
    command = model.model_fields["command"].default

    def decorate(func: CommandHandler) -> CommandHandler:
        """Decorate the subcommand function."""
        wrapped = handle_errors(func)
        # pylint: disable=protected-access
        wrapped._cli_command_model = model  # type: ignore[attr-defined]
        wrapped._cli_command = command  # type: ignore[attr-defined]
        return wrapped

    return decorate
