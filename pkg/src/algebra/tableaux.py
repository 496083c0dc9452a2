"""Semistandard Young tableaux, Schur polynomials, RSK row insertion and the diagram correspondence.

Tableaux use English notation: row 1 is the top row. A generic Kohnert
diagram in ``n`` rows corresponds to the tableau whose column ``c`` lists
``n + 1 - r`` for the rows ``r`` occupied in diagram column ``c``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from ..core.composition import WeakComposition
from ..core.diagram import Cell, Diagram
from ..errors import InvalidComposition, NotGenericDiagram
from .polynomial import Polynomial


def check_partition(shape: Iterable[int]) -> tuple[int, ...]:
    """Return ``shape`` without trailing zeros, or raise if it is not a partition."""
    parts = tuple(int(p) for p in shape)
    if any(p < 0 for p in parts) or any(x < y for x, y in zip(parts, parts[1:])):
        raise InvalidComposition(f"{parts} is not a partition")
    return tuple(p for p in parts if p)


def conjugate_partition(shape: Iterable[int]) -> tuple[int, ...]:
    shape = check_partition(shape)
    return tuple(sum(1 for p in shape if p >= c) for c in range(1, (shape[0] if shape else 0) + 1))


@dataclass(frozen=True)
class SSYT:
    """A semistandard tableau stored as a tuple of rows, top row first."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in row) for row in self.rows if row))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], n: int | None = None) -> SSYT:
        """Build a tableau, checking shape, semistandardness and the entry bound ``n``."""
        tableau = cls(tuple(tuple(row) for row in rows))
        check_partition(tableau.shape)
        if not tableau.is_semistandard(n):
            raise InvalidComposition(f"rows {tableau.rows} do not form a semistandard tableau")
        return tableau

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        width = self.shape[0] if self.rows else 0
        return tuple(tuple(row[c] for row in self.rows if c < len(row)) for c in range(width))

    def conjugate_shape(self) -> tuple[int, ...]:
        return conjugate_partition(self.shape)

    def weight(self, n: int) -> WeakComposition:
        counts = [0] * n
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return WeakComposition(tuple(counts))

    def is_semistandard(self, n: int | None = None) -> bool:
        for row in self.rows:
            if any(x < 1 or (n is not None and x > n) for x in row):
                return False
            if any(x > y for x, y in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if len(lower) > len(upper) or any(x >= y for x, y in zip(upper, lower)):
                return False
        return True

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def _fillings(shape: tuple[int, ...], n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]

    def fill(position: int):
        if position == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[position]
        low = 1
        if j > 0:
            low = max(low, grid[i][j - 1])
        if i > 0:
            low = max(low, grid[i - 1][j] + 1)
        for value in range(low, n + 1):
            grid[i][j] = value
            yield from fill(position + 1)
        grid[i][j] = 0

    yield from fill(0)


def enumerate_ssyt(shape: Iterable[int], n: int) -> list[SSYT]:
    """All semistandard tableaux of ``shape`` with entries at most ``n``."""
    shape = check_partition(shape)
    if len(shape) > n:
        return []
    return [SSYT(rows) for rows in _fillings(shape, n)]


@lru_cache(maxsize=512)
def _schur(shape: tuple[int, ...], n: int) -> Polynomial:
    terms: dict[tuple[int, ...], int] = {}
    for rows in _fillings(shape, n):
        exp = [0] * n
        for row in rows:
            for x in row:
                exp[x - 1] += 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(n, terms)


def schur_polynomial(shape: Iterable[int], n: int) -> Polynomial:
    """s_shape(x_1..x_n)."""
    shape = check_partition(shape)
    if len(shape) > n:
        return Polynomial.zero(n)
    return _schur(shape, n)


def rsk_insert(tableau: SSYT, value: int) -> SSYT:
    """Row-insert ``value``: bump the leftmost strictly larger entry into the next row."""
    if value < 1:
        raise InvalidComposition(f"tableau entries must be positive, got {value}")
    rows = [list(row) for row in tableau.rows]
    carry = value
    for row in rows:
        position = next((i for i, x in enumerate(row) if x > carry), None)
        if position is None:
            row.append(carry)
            return SSYT(tuple(tuple(r) for r in rows))
        row[position], carry = carry, row[position]
    rows.append([carry])
    return SSYT(tuple(tuple(r) for r in rows))


def insertion_cell(before: SSYT, after: SSYT) -> tuple[int, int]:
    """The (row, column) cell, 1-indexed, that ``after`` has beyond ``before``."""
    for i, (old, new) in enumerate(zip(before.rows + ((),), after.rows), start=1):
        if len(new) > len(old):
            return i, len(new)
    raise ValueError("tableaux have the same shape")


def diagram_of_tableau(tableau: SSYT, n: int) -> Diagram:
    """Place entry ``r`` of column ``c`` at the diagram cell (c, n + 1 - r)."""
    if not tableau.is_semistandard(n):
        raise InvalidComposition(f"tableau is not semistandard with entries at most {n}")
    return Diagram(frozenset(
        Cell(c, n + 1 - x) for c, column in enumerate(tableau.columns(), start=1) for x in column
    ))


def tableau_of_diagram(diagram: Diagram, n: int) -> SSYT:
    """Inverse of :func:`diagram_of_tableau` on generic diagrams within ``n`` rows.

    Raises:
        NotGenericDiagram: if the diagram is not generic or uses a row above ``n``.
    """
    if not diagram.is_generic or diagram.max_row > n:
        raise NotGenericDiagram(f"diagram is not a generic Kohnert diagram in {n} rows")
    columns = [sorted(n + 1 - r for r in diagram.column(c)) for c in range(1, diagram.max_column + 1)]
    if any(len(x) < len(y) for x, y in zip(columns, columns[1:])):
        raise NotGenericDiagram("column weight is not a partition")
    height = len(columns[0]) if columns else 0
    rows = tuple(tuple(col[i] for col in columns if i < len(col)) for i in range(height))
    tableau = SSYT(rows)
    if not tableau.is_semistandard(n):
        raise NotGenericDiagram("column reading does not give a semistandard tableau")
    return tableau
