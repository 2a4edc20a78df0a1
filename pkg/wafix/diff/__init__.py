"""Changes extraction between the normalized WA and AC programs.

Lines are compared first; EQUAL, INSERT and DELETE lines keep their label and
runs of deleted lines next to inserted lines are paired positionally into
REPLACE operations whose tokens are compared in turn.
"""
from __future__ import annotations

import logging

import attr

from wafix.const import ChangeLabel
from wafix.diff.model import ChangeSet, LineOp
from wafix.diff.myers import Myers
from wafix.ingest.model import CodePair
from wafix.lexer import normalize, render_line, tokenize_with_diagnostics
from wafix.lexer.model import LogicalLine, NormalizedProgram

_LOGGER = logging.getLogger(__name__)

DUMP_PREFIXES = {
    ChangeLabel.EQUAL: "=",
    ChangeLabel.INSERT: "+",
    ChangeLabel.DELETE: "-",
}


def _fuse(deleted: list[LogicalLine], inserted: list[LogicalLine]) -> list[LineOp]:
    """Pair a run of deleted lines with the adjacent inserted lines."""
    ops = [
        LineOp(
            ChangeLabel.REPLACE,
            wa_line,
            ac_line,
            indent_changed=wa_line.indent_depth != ac_line.indent_depth,
        )
        for wa_line, ac_line in zip(deleted, inserted)
    ]
    paired = len(ops)
    ops.extend(LineOp(ChangeLabel.DELETE, wa_line=line) for line in deleted[paired:])
    ops.extend(LineOp(ChangeLabel.INSERT, ac_line=line) for line in inserted[paired:])
    return ops


def diff_lines(wa: NormalizedProgram, ac: NormalizedProgram) -> list[LineOp]:
    """Align the lines of two programs by their rendering.

    Lines with the same rendering but a different depth become REPLACE with
    ``indent_changed``. Token labels are not filled in.
    """
    wa_keys = [render_line(line) for line in wa.lines]
    ac_keys = [render_line(line) for line in ac.lines]
    ops: list[LineOp] = []
    deleted: list[LogicalLine] = []
    inserted: list[LogicalLine] = []

    for edit in Myers.symmetric_diff(wa_keys, ac_keys):
        if edit.kind == "del":
            assert edit.a_index is not None
            deleted.append(wa.lines[edit.a_index])
            continue
        if edit.kind == "ins":
            assert edit.b_index is not None
            inserted.append(ac.lines[edit.b_index])
            continue
        ops.extend(_fuse(deleted, inserted))
        deleted, inserted = [], []
        assert edit.a_index is not None and edit.b_index is not None
        wa_line, ac_line = wa.lines[edit.a_index], ac.lines[edit.b_index]
        if wa_line.indent_depth == ac_line.indent_depth:
            ops.append(LineOp(ChangeLabel.EQUAL, wa_line, ac_line))
        else:
            ops.append(
                LineOp(ChangeLabel.REPLACE, wa_line, ac_line, indent_changed=True)
            )
    ops.extend(_fuse(deleted, inserted))
    return ops


def diff_tokens(
    wa_line: LogicalLine, ac_line: LogicalLine
) -> tuple[list[ChangeLabel], list[ChangeLabel]]:
    """Label the tokens of two replaced lines; unaligned tokens are REPLACE."""
    wa_labels = [ChangeLabel.REPLACE] * len(wa_line.tokens)
    ac_labels = [ChangeLabel.REPLACE] * len(ac_line.tokens)
    for edit in Myers.symmetric_diff(wa_line.texts, ac_line.texts):
        if edit.kind == "eql":
            assert edit.a_index is not None and edit.b_index is not None
            wa_labels[edit.a_index] = ChangeLabel.EQUAL
            ac_labels[edit.b_index] = ChangeLabel.EQUAL
    return wa_labels, ac_labels


def diff_programs(
    wa: NormalizedProgram, ac: NormalizedProgram, pair_id: str = ""
) -> ChangeSet:
    """Diff two normalized programs down to token level."""
    ops = []
    for op in diff_lines(wa, ac):
        if op.label is ChangeLabel.REPLACE:
            assert op.wa_line is not None and op.ac_line is not None
            wa_labels, ac_labels = diff_tokens(op.wa_line, op.ac_line)
            op = attr.evolve(op, token_labels_wa=wa_labels, token_labels_ac=ac_labels)
        ops.append(op)
    return ChangeSet(pair_id, ops)


def diff_sources(wa: str, ac: str, pair_id: str = "") -> ChangeSet:
    """Tokenize, normalize and diff two sources."""
    wa_tokens, wa_diagnostics = tokenize_with_diagnostics(wa)
    ac_tokens, ac_diagnostics = tokenize_with_diagnostics(ac)
    change_set = diff_programs(normalize(wa_tokens), normalize(ac_tokens), pair_id)
    warnings = [f"WA line {d.line}: {d.message}" for d in wa_diagnostics]
    warnings.extend(f"AC line {d.line}: {d.message}" for d in ac_diagnostics)
    if warnings:
        _LOGGER.debug("%s: %s lexer warnings", pair_id, len(warnings))
        change_set = attr.evolve(change_set, warnings=warnings)
    return change_set


def extract_changes(pair: CodePair) -> ChangeSet:
    """Extract the labeled line and token changes of a code pair."""
    return diff_sources(pair.wa, pair.ac, pair.pair_id)


def dump_change_set(change_set: ChangeSet) -> str:
    """Render a change set, one operation per line (two for REPLACE)."""
    out = []
    for op in change_set.ops:
        if op.label is ChangeLabel.REPLACE:
            assert op.wa_line is not None and op.ac_line is not None
            suffix = " [indent]" if op.indent_changed else ""
            out.append(f"~- {render_line(op.wa_line)}{suffix}\n")
            out.append(f"~+ {render_line(op.ac_line)}{suffix}\n")
            continue
        line = op.ac_line if op.label is ChangeLabel.INSERT else op.wa_line
        assert line is not None
        out.append(f"{DUMP_PREFIXES[op.label]} {render_line(line)}\n")
    return "".join(out)
