"""Cells, diagrams, key diagrams and Kohnert moves.

Coordinates are ``(column, row)``, both 1-indexed, rows counted from the
bottom. A :class:`Diagram` is an immutable set of cells whose canonical order
is sorted by column and then row.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from ..errors import InvalidComposition
from .composition import WeakComposition


class Cell(NamedTuple):
    column: int
    row: int

    def left(self) -> Cell:
        return Cell(self.column - 1, self.row)

    def right(self) -> Cell:
        return Cell(self.column + 1, self.row)

    def to_json(self) -> list[int]:
        return [self.column, self.row]


@dataclass(frozen=True)
class Diagram:
    """A finite set of cells in the first quadrant."""
    members: frozenset[Cell]

    def __post_init__(self):
        members = frozenset(Cell(int(c), int(r)) for c, r in self.members)
        for cell in members:
            if cell.column < 1 or cell.row < 1:
                raise InvalidComposition(f"cell {tuple(cell)} is outside the first quadrant")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, cells: Iterable[tuple[int, int]]) -> Diagram:
        return cls(frozenset(cells))

    @classmethod
    def empty(cls) -> Diagram:
        return cls(frozenset())

    @classmethod
    def from_rows(cls, rows: Mapping[int, Iterable[int]]) -> Diagram:
        """Build a diagram from ``{row: [columns...]}``."""
        return cls(frozenset(Cell(c, r) for r, cols in rows.items() for c in cols))

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> Diagram:
        return cls(frozenset(Cell(*pair) for pair in data))

    # --- set protocol ---

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Cells in canonical (column, row) order."""
        return tuple(sorted(self.members))

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, cell) -> bool:
        return Cell(*cell) in self.members

    def __or__(self, other: Diagram | Iterable[tuple[int, int]]) -> Diagram:
        extra = other.members if isinstance(other, Diagram) else frozenset(Cell(*c) for c in other)
        return Diagram(self.members | extra)

    def __sub__(self, other: Diagram | Iterable[tuple[int, int]]) -> Diagram:
        extra = other.members if isinstance(other, Diagram) else frozenset(Cell(*c) for c in other)
        return Diagram(self.members - extra)

    def __repr__(self) -> str:
        return f"Diagram({[tuple(c) for c in self.cells]})"

    def add(self, cell: tuple[int, int]) -> Diagram:
        return Diagram(self.members | {Cell(*cell)})

    def remove(self, cell: tuple[int, int]) -> Diagram:
        return Diagram(self.members - {Cell(*cell)})

    def move(self, source: tuple[int, int], target: tuple[int, int]) -> Diagram:
        return Diagram((self.members - {Cell(*source)}) | {Cell(*target)})

    # --- shape data ---

    @property
    def max_column(self) -> int:
        return max((c.column for c in self.members), default=0)

    @property
    def max_row(self) -> int:
        return max((c.row for c in self.members), default=0)

    def column(self, c: int) -> tuple[int, ...]:
        """Rows occupied in column ``c``, increasing."""
        return tuple(sorted(cell.row for cell in self.members if cell.column == c))

    def row(self, r: int) -> tuple[int, ...]:
        """Columns occupied in row ``r``, increasing."""
        return tuple(sorted(cell.column for cell in self.members if cell.row == r))

    def row_weight(self, n: int | None = None) -> WeakComposition:
        """wt(T): the number of cells in each row, padded to ``n`` rows."""
        top = self.max_row
        n = top if n is None else n
        if n < top:
            raise InvalidComposition(f"diagram occupies row {top} but n = {n}")
        counts = [0] * n
        for cell in self.members:
            counts[cell.row - 1] += 1
        return WeakComposition(tuple(counts))

    def column_weight(self) -> WeakComposition:
        """cwt(T): the number of cells in each column."""
        counts = [0] * self.max_column
        for cell in self.members:
            counts[cell.column - 1] += 1
        return WeakComposition(tuple(counts))

    # --- Kohnert moves and genericity ---

    def kohnert_move(self, r: int) -> Diagram | None:
        """Drop the rightmost cell of row ``r`` to the first empty position below it."""
        cols = self.row(r)
        if not cols:
            return None
        c = cols[-1]
        occupied = set(self.column(c))
        for target in range(r - 1, 0, -1):
            if target not in occupied:
                return self.move((c, r), (c, target))
        return None

    def kohnert_successors(self) -> tuple[Diagram, ...]:
        successors = {self.kohnert_move(r) for r in range(2, self.max_row + 1)}
        successors.discard(None)
        return tuple(sorted(successors, key=lambda d: d.cells))

    def deficiency(self, c: int, r: int) -> int:
        """m_T(c, r): cells of column c-1 weakly above r minus those of column c."""
        if c < 2:
            raise InvalidComposition(f"deficiency needs a column > 1, got {c}")
        left = sum(1 for s in self.column(c - 1) if s >= r)
        here = sum(1 for s in self.column(c) if s >= r)
        return left - here

    def min_deficiency(self, c: int) -> tuple[int, int]:
        """(min over r of m_T(c,r), highest r attaining it) for column ``c``."""
        best, best_row = 0, 0
        for r in range(self.max_row, 0, -1):
            value = self.deficiency(c, r)
            if value < best:
                best, best_row = value, r
        return best, best_row

    @cached_property
    def is_generic(self) -> bool:
        """True iff every deficiency at a column > 1 is nonnegative."""
        for c in range(2, self.max_column + 1):
            left = self.column(c - 1)
            here = self.column(c)
            for r in here:
                if sum(1 for s in left if s >= r) < sum(1 for s in here if s >= r):
                    return False
        return True

    # --- rendering ---

    def render(self, n: int | None = None, mark: Iterable[tuple[int, int]] = ()) -> str:
        """English-notation picture, top row first; ``mark`` cells print as ``+``."""
        marked = {Cell(*c) for c in mark}
        rows = max(self.max_row, n or 0)
        width = self.max_column
        lines = []
        for r in range(rows, 0, -1):
            line = "".join(
                "+" if (c, r) in marked else ("#" if Cell(c, r) in self.members else ".")
                for c in range(1, width + 1)
            )
            lines.append(f"{r:>2} |{line}")
        return "\n".join(lines) if lines else "(empty)"

    def to_json(self) -> list[list[int]]:
        return [cell.to_json() for cell in self.cells]


def key_diagram(a: WeakComposition | Iterable[int]) -> Diagram:
    """key_a: row i holds the cells (1, i) .. (a_i, i)."""
    a = WeakComposition.of(a)
    return Diagram(frozenset(Cell(c, i) for i, part in enumerate(a, start=1) for c in range(1, part + 1)))


def row_weight(diagram: Diagram, n: int | None = None) -> WeakComposition:
    return diagram.row_weight(n)


def column_weight(diagram: Diagram) -> WeakComposition:
    return diagram.column_weight()


def kohnert_successors(diagram: Diagram) -> tuple[Diagram, ...]:
    return diagram.kohnert_successors()


def deficiency(diagram: Diagram, c: int, r: int) -> int:
    return diagram.deficiency(c, r)


def is_generic(diagram: Diagram) -> bool:
    return diagram.is_generic
