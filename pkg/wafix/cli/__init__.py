"""Command line interface for wafix."""
from __future__ import annotations

import argparse
from collections.abc import Sequence
import logging
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from wafix.cli import commands
from wafix.cli.decorators import CommandHandler
from wafix.cli.model import CliCommand
from wafix.config.util import load_configuration
from wafix.const import EXIT_USAGE, CliCommands, OutputFormat
from wafix.exceptions import ConfigurationError

_LOGGER = logging.getLogger(__name__)

COMMANDS: dict[CliCommands, tuple[CommandHandler, type[CliCommand]]] = {}


def register_command(handler: CommandHandler) -> None:
    """Register a subcommand handler tagged with ``cli_command``."""
    # pylint: disable=protected-access
    command = handler._cli_command  # type: ignore[attr-defined]
    model = handler._cli_command_model  # type: ignore[attr-defined]
    COMMANDS[command] = (handler, model)


for _handler in (
    commands.cmd_pairs,
    commands.cmd_classify,
    commands.cmd_stats,
    commands.cmd_analyze,
    commands.cmd_score,
):
    register_command(_handler)


def existing_path(value: str) -> Path:
    """Argument type for input files that must exist."""
    path = Path(value)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"no such file: {value}")
    return path


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", type=existing_path, help="Path to a JSON configuration file"
    )
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--debug", action="store_true", help="Log debug messages")
    verbosity.add_argument("--quiet", action="store_true", help="Log warnings only")

    parser = argparse.ArgumentParser(
        prog="wafix",
        description="Classify the errors fixed between wrong and accepted submissions",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    pairs = subparsers.add_parser(
        CliCommands.PAIRS, parents=[common], help="Build code pairs"
    )
    pairs.add_argument("log", type=existing_path, help="Submission log")
    pairs.add_argument("-o", "--output", type=Path, help="Pair file to write")
    pairs.add_argument(
        "--max-distance", dest="max_distance", type=int, help="Edit distance bound"
    )

    classify = subparsers.add_parser(
        CliCommands.CLASSIFY, parents=[common], help="Classify errors"
    )
    classify.add_argument("pairs", type=existing_path, help="Pair file")
    classify.add_argument("-o", "--output", type=Path, help="Label file to write")
    classify.add_argument("--rules", type=existing_path, help="Rule file")
    classify.add_argument(
        "--dedup",
        action="store_true",
        help="Keep one label per pair and summarized rule",
    )
    classify.add_argument("--jobs", type=int, help="Worker processes")

    stats = subparsers.add_parser(
        CliCommands.STATS, parents=[common], help="Corpus statistics"
    )
    stats.add_argument("pairs", type=existing_path, help="Pair file")
    stats.add_argument("--labels", type=existing_path, help="Label file")
    stats.add_argument("-o", "--output", type=Path, help="Report file to write")
    stats.add_argument("--rules", type=existing_path, help="Rule file")
    stats.add_argument("--jobs", type=int, help="Worker processes")
    stats.add_argument("--format", choices=[f.value for f in OutputFormat])

    analyze = subparsers.add_parser(
        CliCommands.ANALYZE, parents=[common], help="Novice and expert differences"
    )
    analyze.add_argument("labels", type=existing_path, help="Label file")
    analyze.add_argument(
        "--log", type=existing_path, required=True, help="Submission log"
    )
    analyze.add_argument(
        "--intro-problems",
        dest="intro_problems",
        type=existing_path,
        help="Introductory problem list",
    )
    analyze.add_argument("-o", "--output", type=Path, help="Report file to write")
    analyze.add_argument("--rules", type=existing_path, help="Rule file")
    analyze.add_argument("--alpha", type=float, help="Significance level")
    analyze.add_argument("--format", choices=[f.value for f in OutputFormat])

    score = subparsers.add_parser(
        CliCommands.SCORE, parents=[common], help="Score labels against hand labels"
    )
    score.add_argument("labels", type=existing_path, help="Label file")
    score.add_argument("gold", type=existing_path, help="Hand label file")
    return parser


def configure_logging(command: CliCommand) -> None:
    """Set the root log level from the verbosity flags."""
    level = logging.INFO
    if command.debug:
        level = logging.DEBUG
    elif command.quiet:
        level = logging.WARNING
    logging.getLogger().setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run a subcommand and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, model = COMMANDS[CliCommands(args.command)]
    try:
        command = model.model_validate(
            {**vars(args), "command": CliCommands(args.command)}
        )
    except ValidationError as err:
        _LOGGER.error("invalid arguments: %s", err)
        return EXIT_USAGE
    configure_logging(command)

    try:
        config = load_configuration(command.config, command.overrides())
    except ConfigurationError as err:
        _LOGGER.error("%s", err)
        return EXIT_USAGE
    return handler(command, config)
