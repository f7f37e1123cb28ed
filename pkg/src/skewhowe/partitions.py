"""Young diagrams inside a rectangle.

Partitions are tuples of positive parts in weakly decreasing order, stored
without trailing zeros so that equality is structural.  Boxes are 1-indexed
``(row, col)`` pairs with rows counted downward (English convention).

The ambient rectangle with ``m`` rows and ``n`` columns is always written
``Rectangle(rows=m, cols=n)``; its transpose is ``Rectangle(rows=n, cols=m)``.

>>> conjugate(Partition([8, 7, 7, 4, 2]))
Partition(5, 5, 4, 4, 3, 3, 3, 1)
>>> complement(Partition([7, 5, 4, 2]), Rectangle(4, 8))
Partition(6, 4, 3, 1)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import ContainmentError, DomainError

__all__ = [
    "Partition", "Rectangle", "Box",
    "conjugate", "complement", "enumerate_partitions", "hook_lengths",
    "contents", "add_corners", "boxes", "fits",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros in the input are dropped; anything else that is not a
    partition raises :class:`DomainError`.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for i, part in enumerate(parts):
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise DomainError(f"parts must be positive integers, got {parts!r}")
            if i and part > parts[i - 1]:
                raise DomainError(f"parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part lookup; missing parts read as zero."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def to_json(self) -> str:
        return json.dumps(list(self), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        return cls(json.loads(text))


@dataclass(frozen=True)
class Rectangle:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DomainError(f"rectangle needs rows, cols >= 1, got {self.rows}x{self.cols}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    @property
    def full(self) -> Partition:
        return Partition([self.cols] * self.rows)

    def transpose(self) -> "Rectangle":
        return Rectangle(self.cols, self.rows)


class Box(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


def fits(lam: Partition, rect: Rectangle) -> bool:
    return len(lam) <= rect.rows and (not lam or lam[0] <= rect.cols)


def _require_fit(lam: Partition, rect: Rectangle) -> None:
    if not fits(lam, rect):
        raise ContainmentError(f"{lam!r} does not fit in {rect.rows}x{rect.cols}")


def boxes(lam: Partition) -> Iterator[Box]:
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield Box(i, j)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition([sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1)])


def complement(lam: Partition, rect: Rectangle) -> Partition:
    """Boxes of ``rect`` outside ``lam``, rotated by 180 degrees."""
    _require_fit(lam, rect)
    return Partition([rect.cols - lam.part(rect.rows + 1 - k) for k in range(1, rect.rows + 1)])


def enumerate_partitions(rect: Rectangle, p: int) -> Iterator[Partition]:
    """All partitions of ``p`` inside ``rect``, lexicographically decreasing."""
    if not 0 <= p <= rect.area:
        raise DomainError(f"p={p} outside 0..{rect.area}")

    def rec(remaining: int, max_part: int, rows_left: int) -> Iterator[list[int]]:
        if remaining == 0:
            yield []
            return
        if rows_left == 0:
            return
        # the first part must be large enough for the remaining rows to absorb the rest
        lo = -(-remaining // rows_left)
        for part in range(min(max_part, remaining), lo - 1, -1):
            for tail in rec(remaining - part, part, rows_left - 1):
                yield [part, *tail]

    for parts in rec(p, rect.cols, rect.rows):
        yield Partition(parts)


def hook_lengths(lam: Partition) -> dict[Box, int]:
    conj = conjugate(lam)
    return {b: lam[b.row - 1] - b.col + conj[b.col - 1] - b.row + 1 for b in boxes(lam)}


def contents(lam: Partition) -> dict[Box, int]:
    return {b: b.content for b in boxes(lam)}


def add_corners(lam: Partition, rect: Rectangle) -> list[Partition]:
    """Partitions obtained by adding one box to ``lam`` without leaving ``rect``.

    Ordered by the row of the added box.
    """
    _require_fit(lam, rect)
    out = []
    for i in range(1, min(len(lam) + 1, rect.rows) + 1):
        current = lam.part(i)
        above = lam.part(i - 1) if i > 1 else rect.cols
        if current < above and current < rect.cols:
            parts = list(lam) + [0] * (i - len(lam))
            parts[i - 1] += 1
            out.append(Partition(parts))
    return out
