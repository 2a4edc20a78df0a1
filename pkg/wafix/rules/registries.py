"""Mapping registries for classified and summarized rules."""
from __future__ import annotations

from typing import Final

SUMMARY_GROUPS: Final[dict[str, tuple[str, ...]]] = {
    "output": ("missing output", "needless output", "wrong output"),
    "input": ("missing input", "needless input", "wrong input"),
    "convert variable": (
        "wrong join list",
        "wrong convert list",
        "wrong convert value",
    ),
    "other function invocation": (
        "missing function invocation",
        "needless function invocation",
        "wrong function invocation",
    ),
    "conditional statement": (
        "missing if statement",
        "needless if statement",
        "wrong if statement",
        "missing else elif",
        "needless else elif",
        "wrong else elif",
    ),
    "loop statement": (
        "missing for statement",
        "needless for statement",
        "wrong for statement",
        "missing while statement",
        "needless while statement",
        "wrong while statement",
    ),
    "for range": ("wrong range",),
    "break continue": (
        "missing break continue",
        "needless break continue",
        "wrong break continue",
    ),
    "literal": ("wrong string", "wrong value", "wrong boolean value"),
    "import": ("missing import", "needless import", "wrong import"),
    "variable declaration": (
        "missing variable declaration",
        "needless variable declaration",
        "wrong variable declaration",
    ),
    "function definition": (
        "missing function definition",
        "needless function definition",
        "wrong function definition",
        "missing return",
        "needless return",
        "wrong return",
    ),
    "pass": ("missing pass", "needless pass", "wrong pass"),
    "comparison operator": ("wrong comparison operator",),
    "logical operator": ("wrong logical operator",),
    "arithmetic operator": ("wrong arithmetic operator",),
    "unpack operator": ("wrong unpack operator",),
    "other operator": ("wrong in operator", "wrong assignment operator"),
    "index": ("wrong list index",),
    "list comprehension": ("wrong list comprehension",),
    "indent": ("wrong indent",),
}

RULE_SUMMARY: Final[dict[str, str]] = {
    rule: summary for summary, rules in SUMMARY_GROUPS.items() for rule in rules
}

REGEX_FEATURES: Final[frozenset[str]] = frozenset(
    {
        "alternation",
        "lazy",
        "anchors",
        "classes",
        "lookahead",
        "lookbehind",
        "variable-lookbehind",
    }
)
