"""Types describing the changes between the WA and AC programs."""
from __future__ import annotations

from typing import Optional

import attr

from wafix.const import ChangeLabel
from wafix.lexer.model import LogicalLine


def _replaced(labels: tuple[ChangeLabel, ...]) -> list[int]:
    return [i for i, label in enumerate(labels) if label is ChangeLabel.REPLACE]


@attr.s(frozen=True, slots=True)
class LineOp:
    """One aligned line operation.

    INSERT has only ``ac_line``, DELETE only ``wa_line``, EQUAL and REPLACE both.
    Token labels are present for REPLACE only.
    """

    label: ChangeLabel = attr.ib()
    wa_line: Optional[LogicalLine] = attr.ib(default=None)
    ac_line: Optional[LogicalLine] = attr.ib(default=None)
    token_labels_wa: tuple[ChangeLabel, ...] = attr.ib(default=(), converter=tuple)
    token_labels_ac: tuple[ChangeLabel, ...] = attr.ib(default=(), converter=tuple)
    indent_changed: bool = attr.ib(default=False)

    @property
    def replaced_wa(self) -> list[int]:
        """Return the indexes of REPLACE tokens on the WA side."""
        return _replaced(self.token_labels_wa)

    @property
    def replaced_ac(self) -> list[int]:
        """Return the indexes of REPLACE tokens on the AC side."""
        return _replaced(self.token_labels_ac)

    @property
    def has_replaced_tokens(self) -> bool:
        """Return whether any token on either side is labeled REPLACE."""
        return ChangeLabel.REPLACE in self.token_labels_wa or (
            ChangeLabel.REPLACE in self.token_labels_ac
        )


@attr.s(frozen=True, slots=True)
class ChangeSet:
    """Line operations of one code pair plus the lexer warnings of both sides."""

    pair_id: str = attr.ib()
    ops: tuple[LineOp, ...] = attr.ib(converter=tuple)
    warnings: tuple[str, ...] = attr.ib(default=(), converter=tuple)

    @property
    def wa_lines(self) -> list[LogicalLine]:
        """Return the WA lines reconstructed from the operations."""
        return [op.wa_line for op in self.ops if op.wa_line is not None]

    @property
    def ac_lines(self) -> list[LogicalLine]:
        """Return the AC lines reconstructed from the operations."""
        return [op.ac_line for op in self.ops if op.ac_line is not None]

    @property
    def is_unchanged(self) -> bool:
        """Return whether every operation is EQUAL."""
        return all(op.label is ChangeLabel.EQUAL for op in self.ops)
