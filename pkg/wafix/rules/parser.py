"""Rule file parser.

A rule file is a sequence of blocks separated by blank lines. Header blocks
hold ``requires:`` and ``version:`` lines, rule blocks hold ``name:``,
``category:``, ``summary:`` and either ``pattern:`` or ``trigger:``. Lines
starting with ``#`` are comments. Pattern text is taken verbatim after the
single space following the colon.
"""
from __future__ import annotations

from importlib import resources
import logging
from pathlib import Path
from typing import Final, Iterator, Optional

import regex

from wafix.const import INDENT_TRIGGER, RuleCategory
from wafix.exceptions import RuleFileError
from wafix.rules.model import Rule, RuleSet
from wafix.rules.registries import REGEX_FEATURES, RULE_SUMMARY, SUMMARY_GROUPS

_LOGGER = logging.getLogger(__name__)

DEFAULT_RULES_RESOURCE: Final[str] = "default.rules"
HEADER_KEYS: Final[frozenset[str]] = frozenset({"requires", "version"})
RULE_KEYS: Final[frozenset[str]] = frozenset(
    {"name", "category", "summary", "pattern", "trigger"}
)
TRIGGERS: Final[frozenset[str]] = frozenset({INDENT_TRIGGER})


def _blocks(config: str) -> Iterator[tuple[int, list[tuple[int, str]]]]:
    """Yield (first line number, numbered lines) per block, comments removed."""
    block: list[tuple[int, str]] = []
    for line_number, raw in enumerate(config.splitlines(), start=1):
        line = raw.rstrip("\r")
        if line.lstrip().startswith("#"):
            continue
        if not line.strip():
            if block:
                yield block[0][0], block
            block = []
            continue
        block.append((line_number, line))
    if block:
        yield block[0][0], block


def _split(line: str) -> tuple[str, str]:
    key, _, value = line.partition(":")
    value = value[1:] if value.startswith(" ") else value
    return key.strip().lower(), value


class RuleFileParser:
    """Collects every problem of a rule file before failing."""

    def __init__(self) -> None:
        """Initialize the parser."""
        self.problems: list[str] = []
        self.rules: list[Rule] = []
        self.requires: set[str] = set()
        self.version = ""
        self._names: set[str] = set()

    def problem(self, line_number: int, message: str) -> None:
        """Record a problem found at a line."""
        self.problems.append(f"line {line_number}: {message}")

    def parse(self, config: str) -> RuleSet:
        """Parse rule file text into a rule set."""
        for first_line, block in _blocks(config):
            fields: dict[str, str] = {}
            for line_number, line in block:
                if ":" not in line:
                    self.problem(line_number, f"expected 'key: value', got {line!r}")
                    continue
                key, value = _split(line)
                if key not in HEADER_KEYS | RULE_KEYS:
                    self.problem(line_number, f"unknown key {key!r}")
                    continue
                if key in fields:
                    self.problem(line_number, f"repeated key {key!r}")
                    continue
                fields[key] = value

            if fields.keys() <= HEADER_KEYS:
                self.parse_header(first_line, fields)
            elif fields.keys() & HEADER_KEYS:
                self.problem(first_line, "header keys mixed into a rule block")
            else:
                self.parse_rule(first_line, fields)

        if self.problems:
            raise RuleFileError(self.problems)
        _LOGGER.debug(
            "loaded %s rules (version %r, requires %s)",
            len(self.rules),
            self.version,
            sorted(self.requires),
        )
        return RuleSet(self.rules, self.version, self.requires)

    def parse_header(self, line_number: int, fields: dict[str, str]) -> None:
        """Parse a header block."""
        if "version" in fields:
            self.version = fields["version"].strip()
        if "requires" in fields:
            for feature in fields["requires"].replace(",", " ").split():
                if feature not in REGEX_FEATURES:
                    self.problem(line_number, f"unknown regex feature {feature!r}")
                self.requires.add(feature)

    def parse_rule(self, line_number: int, fields: dict[str, str]) -> None:
        """Parse and validate a rule block."""
        for key in ("name", "category", "summary"):
            if not fields.get(key, "").strip():
                self.problem(line_number, f"rule block without {key!r}")
                return

        name = fields["name"].strip()
        if name in self._names:
            self.problem(line_number, f"duplicate rule name {name!r}")
            return
        self._names.add(name)

        try:
            category = RuleCategory(fields["category"].strip().lower())
        except ValueError:
            self.problem(
                line_number,
                f"rule {name!r}: unknown category {fields['category'].strip()!r}",
            )
            return

        summary = fields["summary"].strip()
        if summary not in SUMMARY_GROUPS:
            self.problem(line_number, f"rule {name!r}: unknown summary {summary!r}")
            return
        if name in RULE_SUMMARY and RULE_SUMMARY[name] != summary:
            self.problem(
                line_number,
                f"rule {name!r} belongs to summary {RULE_SUMMARY[name]!r}, "
                f"not {summary!r}",
            )
            return

        pattern = fields.get("pattern")
        trigger = fields.get("trigger")
        if (pattern is None) == (trigger is None):
            self.problem(
                line_number, f"rule {name!r}: expected one of 'pattern' or 'trigger'"
            )
            return

        if trigger is not None:
            trigger = trigger.strip()
            if trigger not in TRIGGERS:
                self.problem(line_number, f"rule {name!r}: unknown trigger {trigger!r}")
                return
            self.rules.append(Rule(name, category, summary, trigger=trigger))
            return

        assert pattern is not None
        compiled = self.compile(line_number, name, category, pattern)
        if compiled is not None:
            self.rules.append(Rule(name, category, summary, pattern, None, compiled))

    def compile(
        self, line_number: int, name: str, category: RuleCategory, pattern: str
    ) -> Optional[regex.Pattern]:
        """Compile a rule pattern, recording a problem when it is invalid."""
        if category is RuleCategory.LINE_REPLACE and not (
            pattern.startswith("^") and pattern.endswith("$")
        ):
            self.problem(
                line_number,
                f"rule {name!r}: line-replace pattern must start with ^ and end with $",
            )
            return None
        try:
            return regex.compile(pattern, regex.VERSION0)
        except regex.error as err:
            self.problem(line_number, f"rule {name!r}: invalid pattern: {err}")
            return None


def load_rules(config: str) -> RuleSet:
    """Parse rule file text; raises RuleFileError listing every problem."""
    return RuleFileParser().parse(config)


def load_rules_file(path: Path) -> RuleSet:
    """Load a rule file from disk."""
    try:
        config = path.read_text(encoding="utf-8")
    except OSError as err:
        raise RuleFileError([f"cannot read {path}: {err}"]) from err
    return load_rules(config)


def load_default_rules() -> RuleSet:
    """Load the rule set shipped with the package."""
    config = (
        resources.files("wafix.rules")
        .joinpath(DEFAULT_RULES_RESOURCE)
        .read_text(encoding="utf-8")
    )
    return load_rules(config)
