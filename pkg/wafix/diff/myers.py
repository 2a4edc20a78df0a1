"""Myers shortest edit script over sequences of hashable keys."""
from __future__ import annotations

from typing import Hashable, Iterator, Literal, Sequence

import attr

EditKind = Literal["eql", "ins", "del"]


@attr.s(frozen=True, slots=True)
class Edit:
    """One step of an edit script; indexes refer to the a and b sequences."""

    kind: EditKind = attr.ib()
    a_index: int | None = attr.ib(default=None)
    b_index: int | None = attr.ib(default=None)


class Myers:
    """Minimal edit script between two key sequences.

    The number of ``eql`` edits equals the length of a longest common
    subsequence, so inserted plus deleted keys is minimal.
    """

    def __init__(self, a: Sequence[Hashable], b: Sequence[Hashable]) -> None:
        """Initialize with the two sequences."""
        self.a = a
        self.b = b

    @classmethod
    def diff(cls, a: Sequence[Hashable], b: Sequence[Hashable]) -> list[Edit]:
        """Return the edit script turning a into b."""
        return cls(a, b)._diff()

    @classmethod
    def symmetric_diff(
        cls, a: Sequence[Hashable], b: Sequence[Hashable]
    ) -> list[Edit]:
        """Return the edit script turning a into b, independent of input order.

        The alignment is computed with the lexicographically smaller sequence
        first, so ``symmetric_diff(b, a)`` is the mirror of
        ``symmetric_diff(a, b)`` with insertions and deletions swapped.
        """
        if list(a) <= list(b):
            return cls.diff(a, b)
        return [_mirror(edit) for edit in cls.diff(b, a)]

    def _diff(self) -> list[Edit]:
        edits: list[Edit] = []
        for prev_x, prev_y, x, y in self._backtrack():
            if x == prev_x:
                edits.append(Edit("ins", None, prev_y))
            elif y == prev_y:
                edits.append(Edit("del", prev_x, None))
            else:
                edits.append(Edit("eql", prev_x, prev_y))
        edits.reverse()
        return edits

    def _backtrack(self) -> Iterator[tuple[int, int, int, int]]:
        trace = self._shortest_edit()
        x, y = len(self.a), len(self.b)

        for d in range(len(trace) - 1, -1, -1):
            v = trace[d]
            k = x - y

            if k == -d or (k != d and v.get(k - 1, 0) < v.get(k + 1, 0)):
                prev_k = k + 1
            else:
                prev_k = k - 1

            prev_x = v.get(prev_k, 0)
            prev_y = prev_x - prev_k

            while x > prev_x and y > prev_y:
                yield x - 1, y - 1, x, y
                x -= 1
                y -= 1

            if d > 0:
                yield prev_x, prev_y, x, y

            x, y = prev_x, prev_y

    def _shortest_edit(self) -> list[dict[int, int]]:
        n, m = len(self.a), len(self.b)
        v: dict[int, int] = {1: 0}
        trace: list[dict[int, int]] = []

        for d in range(n + m + 1):
            trace.append(v.copy())

            for k in range(-d, d + 1, 2):
                if k == -d or (k != d and v.get(k - 1, 0) < v.get(k + 1, 0)):
                    x = v.get(k + 1, 0)
                else:
                    x = v.get(k - 1, 0) + 1

                y = x - k

                while x < n and y < m and self.a[x] == self.b[y]:
                    x += 1
                    y += 1

                v[k] = x

                if x >= n and y >= m:
                    return trace

        return trace


def _mirror(edit: Edit) -> Edit:
    if edit.kind == "ins":
        return Edit("del", edit.b_index, None)
    if edit.kind == "del":
        return Edit("ins", None, edit.a_index)
    return Edit("eql", edit.b_index, edit.a_index)
