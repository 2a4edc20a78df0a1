"""Rule application over the line operations of a change set."""
from __future__ import annotations

import logging
from typing import Optional, Sequence

import attr

from wafix.const import INDENT_TRIGGER, ChangeLabel, RuleCategory, Side
from wafix.diff.model import ChangeSet, LineOp
from wafix.lexer import render_line
from wafix.lexer.model import LogicalLine
from wafix.rules.model import ErrorLabel, Rule, RuleSet
from wafix.util import LogMixin

_LOGGER = logging.getLogger(__name__)


def token_spans(line: LogicalLine) -> list[tuple[int, int]]:
    """Return the character span of every token in the rendered line."""
    spans = []
    position = 0
    for token in line.tokens:
        spans.append((position, position + len(token.text)))
        position += len(token.text) + 1
    return spans


@attr.s(frozen=True, slots=True)
class RenderedSide:
    """One side of a replaced line, rendered, with its replaced token spans."""

    side: Side = attr.ib()
    text: str = attr.ib()
    spans: tuple[tuple[int, int], ...] = attr.ib(converter=tuple)
    replaced: tuple[int, ...] = attr.ib(converter=tuple)

    @classmethod
    def of(
        cls, side: Side, line: LogicalLine, labels: Sequence[ChangeLabel]
    ) -> RenderedSide:
        """Render a line and locate its REPLACE tokens."""
        replaced = [i for i, label in enumerate(labels) if label is ChangeLabel.REPLACE]
        return cls(side, render_line(line), token_spans(line), replaced)

    def overlaps_replaced(self, start: int, end: int) -> bool:
        """Return whether [start, end) covers a character of a REPLACE token."""
        for index in self.replaced:
            token_start, token_end = self.spans[index]
            if start < token_end and token_start < end:
                return True
        return False


def _combine(
    wa_span: Optional[tuple[int, int]], ac_span: Optional[tuple[int, int]]
) -> Optional[tuple[Side, tuple[int, int]]]:
    if ac_span is not None:
        return (Side.BOTH if wa_span is not None else Side.AC), ac_span
    if wa_span is not None:
        return Side.WA, wa_span
    return None


class PairClassifier(LogMixin):
    """Applies a rule set to the operations of one change set."""

    _logger = _LOGGER

    def __init__(self, rule_set: RuleSet, change_set: ChangeSet) -> None:
        """Initialize the classifier."""
        self._rule_set = rule_set
        self._change_set = change_set
        self._log_tag = change_set.pair_id
        self._labels: list[ErrorLabel] = []

    def classify(self) -> list[ErrorLabel]:
        """Return the labels of every operation in operation order."""
        for op_index, op in enumerate(self._change_set.ops):
            if op.label is ChangeLabel.INSERT:
                assert op.ac_line is not None
                self.match_line(op_index, op.ac_line, RuleCategory.INSERT, Side.AC)
            elif op.label is ChangeLabel.DELETE:
                assert op.wa_line is not None
                self.match_line(op_index, op.wa_line, RuleCategory.DELETE, Side.WA)
            elif op.label is ChangeLabel.REPLACE:
                self.match_replace(op_index, op)
        self.debug("%s labels", len(self._labels))
        return self._labels

    def emit(
        self,
        rule: Rule,
        op_index: int,
        side: Side,
        span: tuple[int, int],
        wa_token_index: Optional[int] = None,
        ac_token_index: Optional[int] = None,
    ) -> None:
        """Record a label."""
        self.debug("op %s: %r on %s side at %s", op_index, rule.name, side, span)
        self._labels.append(
            ErrorLabel(
                pair_id=self._change_set.pair_id,
                rule=rule.name,
                summary=rule.summary,
                op_index=op_index,
                side=side,
                span_start=span[0],
                span_end=span[1],
                wa_token_index=wa_token_index,
                ac_token_index=ac_token_index,
            )
        )

    def match_line(
        self, op_index: int, line: LogicalLine, category: RuleCategory, side: Side
    ) -> None:
        """Apply whole-line rules of a category to an inserted or deleted line."""
        text = render_line(line)
        for rule in self._rule_set.by_category(category):
            assert rule.compiled is not None
            if rule.compiled.fullmatch(text):
                self.emit(rule, op_index, side, (0, len(text)))

    def match_replace(self, op_index: int, op: LineOp) -> None:
        """Apply the replace rules to a REPLACE operation."""
        assert op.wa_line is not None and op.ac_line is not None
        wa = RenderedSide.of(Side.WA, op.wa_line, op.token_labels_wa)
        ac = RenderedSide.of(Side.AC, op.ac_line, op.token_labels_ac)

        if op.indent_changed:
            for rule in self._rule_set.triggered_by(INDENT_TRIGGER):
                self.emit(rule, op_index, Side.BOTH, (0, len(ac.text)))

        if not op.has_replaced_tokens:
            return

        for rule in self._rule_set.by_category(RuleCategory.LINE_REPLACE):
            found = _combine(self.line_span(rule, wa), self.line_span(rule, ac))
            if found is not None:
                self.emit(rule, op_index, *found)

        for rule in self._rule_set.by_category(RuleCategory.WITHIN_REPLACE):
            found = _combine(self.within_span(rule, wa), self.within_span(rule, ac))
            if found is not None:
                self.emit(rule, op_index, *found)

        for rule in self._rule_set.by_category(RuleCategory.TOKEN_REPLACE):
            wa_index = self.matching_token(rule, wa, op.wa_line)
            ac_index = self.matching_token(rule, ac, op.ac_line)
            if wa_index is not None and ac_index is not None:
                self.emit(
                    rule,
                    op_index,
                    Side.BOTH,
                    ac.spans[ac_index],
                    wa_token_index=wa_index,
                    ac_token_index=ac_index,
                )

    @staticmethod
    def line_span(rule: Rule, rendered: RenderedSide) -> Optional[tuple[int, int]]:
        """Return the whole line span if it matches and has a REPLACE token."""
        assert rule.compiled is not None
        if rendered.replaced and rule.compiled.fullmatch(rendered.text):
            return 0, len(rendered.text)
        return None

    @staticmethod
    def within_span(rule: Rule, rendered: RenderedSide) -> Optional[tuple[int, int]]:
        """Return the first match span that overlaps a REPLACE token."""
        assert rule.compiled is not None
        if not rendered.replaced:
            return None
        for match in rule.compiled.finditer(rendered.text, overlapped=True):
            if rendered.overlaps_replaced(*match.span()):
                return match.span()
        return None

    @staticmethod
    def matching_token(
        rule: Rule, rendered: RenderedSide, line: LogicalLine
    ) -> Optional[int]:
        """Return the first REPLACE token whose text matches the rule."""
        assert rule.compiled is not None
        for index in rendered.replaced:
            if rule.compiled.fullmatch(line.tokens[index].text):
                return index
        return None


def classify(change_set: ChangeSet, rule_set: RuleSet) -> list[ErrorLabel]:
    """Classify the errors fixed in a change set."""
    return PairClassifier(rule_set, change_set).classify()
