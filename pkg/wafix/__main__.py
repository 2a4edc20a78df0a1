"""Command line entry point of wafix."""
from __future__ import annotations

import logging
import sys

from colorlog import ColoredFormatter

from wafix.cli import main as cli_main

FMT = "%(asctime)s %(levelname)s (%(threadName)s) [%(name)s] %(message)s"
LOG_COLORS = {
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "red",
}


def setup_logging() -> None:
    """Install a colored formatter on the root handler."""
    logging.basicConfig(level=logging.INFO)
    logging.getLogger().handlers[0].setFormatter(
        ColoredFormatter(
            f"%(log_color)s{FMT}%(reset)s", reset=True, log_colors=LOG_COLORS
        )
    )


def main() -> int:
    """Run the command line interface."""
    setup_logging()
    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
