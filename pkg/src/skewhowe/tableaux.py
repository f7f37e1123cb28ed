"""Standard and semistandard Young tableaux.

Tableaux are stored as tuples of rows, first row on top (English
convention): rows weakly increase to the right, columns strictly increase
downward.  Figures in the French convention are just the rows read in
reverse order.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError, ResourceError
from .partitions import Box, Partition, Rectangle, complement, conjugate, fits

__all__ = [
    "Tableau", "SemistandardTableau", "StandardTableau",
    "enumerate_ssyt", "complement_ssyt", "gnw_sample_syt", "hook_walk_corners",
    "truncate_syt", "enumerate_syt", "EXHAUSTIVE_CAP",
]

EXHAUSTIVE_CAP = 12


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", tuple(row for row in rows if row))
        Partition(len(row) for row in self.rows)  # raises if the row lengths are not a shape
        self._validate()

    def _validate(self) -> None:
        pass

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def entries(self) -> dict[Box, int]:
        return {Box(i, j): x for i, row in enumerate(self.rows, 1) for j, x in enumerate(row, 1)}

    def column(self, j: int) -> tuple[int, ...]:
        """Entries of the 1-based column ``j``, top to bottom."""
        return tuple(row[j - 1] for row in self.rows if len(row) >= j)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]):
        height = max((len(c) for c in columns), default=0)
        rows = [[c[i] for c in columns if len(c) > i] for i in range(height)]
        return cls(rows)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str):
        return cls(json.loads(text))

    def french(self) -> str:
        """Multi-line rendering with the first row at the bottom."""
        return "\n".join(" ".join(map(str, row)) for row in reversed(self.rows))


class SemistandardTableau(Tableau):
    def _validate(self) -> None:
        for i, row in enumerate(self.rows):
            if any(x < 1 for x in row):
                raise DomainError("entries must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise DomainError(f"row {i + 1} is not weakly increasing: {row}")
            if i and any(above >= x for above, x in zip(self.rows[i - 1], row)):
                raise DomainError(f"column strictness fails at row {i + 1}")


class StandardTableau(SemistandardTableau):
    def _validate(self) -> None:
        super()._validate()
        flat = sorted(x for row in self.rows for x in row)
        if flat != list(range(1, len(flat) + 1)):
            raise DomainError("a standard tableau holds 1..N exactly once")
        if any(a >= b for row in self.rows for a, b in zip(row, row[1:])):
            raise DomainError("rows of a standard tableau strictly increase")


def enumerate_ssyt(nu: Partition, max_entry: int) -> Iterator[SemistandardTableau]:
    """Every SSYT of shape ``nu`` with entries in 1..max_entry."""
    if len(nu) > max_entry:
        return
    cells = [(i, j) for i, part in enumerate(nu) for j in range(part)]
    col_len = conjugate(nu)
    grid = [[0] * part for part in nu]

    def rec(k: int) -> Iterator[SemistandardTableau]:
        if k == len(cells):
            yield SemistandardTableau(grid)
            return
        i, j = cells[k]
        lo = max(grid[i][j - 1] if j else 1, grid[i - 1][j] + 1 if i else 1)
        # leave room for the strictly increasing entries below in this column
        hi = max_entry - (col_len[j] - 1 - i)
        for x in range(lo, hi + 1):
            grid[i][j] = x
            yield from rec(k + 1)
        grid[i][j] = 0

    yield from rec(0)


def complement_ssyt(t: Tableau, rect: Rectangle) -> SemistandardTableau:
    """Column-complement of ``t`` inside ``rect``, rotated by 180 degrees.

    ``rect.rows`` is the largest allowed entry and ``rect.cols`` the number
    of columns.  Column ``j`` of the result holds, top to bottom, the values
    of ``1..rect.rows`` missing from column ``rect.cols + 1 - j`` of ``t``.
    Applying the map twice with the same rectangle returns ``t``.
    """
    if not fits(t.shape, rect):
        raise DomainError(f"shape {t.shape!r} does not fit in {rect.rows}x{rect.cols}")
    if any(not 1 <= x <= rect.rows for row in t.rows for x in row):
        raise DomainError(f"entries must lie in 1..{rect.rows}")
    universe = range(1, rect.rows + 1)
    columns = []
    for j in range(rect.cols, 0, -1):
        present = set(t.column(j))
        columns.append([x for x in universe if x not in present])
    out = SemistandardTableau.from_columns(columns)
    assert out.shape == complement(t.shape, rect)
    return out


def hook_walk_corners(shape: Partition, rng: random.Random) -> Iterator[tuple[int, int]]:
    """Corners removed by successive Greene-Nijenhuis-Wilf hook walks.

    Yields 0-based ``(row, col)`` positions; the k-th yielded box carries
    entry ``|shape| + 1 - k`` of a uniformly random standard tableau.
    Stopping early leaves the boxes with the smallest entries.
    """
    rows = list(shape)
    cols = list(conjugate(shape))
    remaining = shape.size
    while remaining:
        k = rng.randrange(remaining)
        i = 0
        while k >= rows[i]:
            k -= rows[i]
            i += 1
        j = k
        while True:
            arm = rows[i] - j - 1
            leg = cols[j] - i - 1
            if arm + leg == 0:
                break
            t = rng.randrange(arm + leg)
            if t < arm:
                j += 1 + t
            else:
                i += 1 + t - arm
        yield i, j
        rows[i] -= 1
        cols[j] -= 1
        remaining -= 1


def gnw_sample_syt(shape: Partition, rng: random.Random) -> StandardTableau:
    grid = [[0] * part for part in shape]
    entry = shape.size
    for i, j in hook_walk_corners(shape, rng):
        grid[i][j] = entry
        entry -= 1
    return StandardTableau(grid)


def truncate_syt(t: Tableau, p: int) -> Partition:
    """Shape formed by the boxes with entries <= p."""
    if not 0 <= p <= t.shape.size:
        raise DomainError(f"p={p} outside 0..{t.shape.size}")
    return Partition(sum(1 for x in row if x <= p) for row in t.rows)


def enumerate_syt(shape: Partition, cap: int = EXHAUSTIVE_CAP) -> list[StandardTableau]:
    if shape.size > cap:
        raise ResourceError(f"|shape|={shape.size} exceeds the exhaustive cap {cap}")

    def rec(rows: list[int], entry: int) -> Iterator[list[tuple[int, int]]]:
        # placements of entries entry, entry-1, ..., 1 as corner removals
        if entry == 0:
            yield []
            return
        for i, part in enumerate(rows):
            if part and (i + 1 == len(rows) or rows[i + 1] < part):
                rows[i] -= 1
                for rest in rec(rows, entry - 1):
                    yield [(i, part - 1), *rest]
                rows[i] += 1

    out = []
    for placement in rec(list(shape), shape.size):
        grid = [[0] * part for part in shape]
        for k, (i, j) in enumerate(placement):
            grid[i][j] = shape.size - k
        out.append(StandardTableau(grid))
    return out
