"""Addable cells, support compositions, row sets and drop compositions."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from ..core.composition import WeakComposition
from ..errors import InvalidComposition, NotMember

logger = logging.getLogger("keypieri.pieri")


@dataclass(frozen=True, order=True)
class AddableCell:
    column: int
    row: int
    support: WeakComposition

    @property
    def term(self) -> WeakComposition:
        """supp + e_row, the index this cell contributes."""
        return self.support.plus_unit(self.row)


def is_addable(a: WeakComposition, c: int, r: int) -> bool:
    """(c, r) is addable for ``a``: a_r < c and some s >= r has a_s = c - 1."""
    if r < 1 or c < 1 or r > len(a):
        return False
    return a.part(r) < c and any(a.part(s) == c - 1 for s in range(r, len(a) + 1))


def is_k_addable(a: WeakComposition, k: int, c: int, r: int) -> bool:
    if not 1 <= r <= min(k, len(a)) or a.part(r) >= c:
        return False
    if a.part(r) < c - 1 and not any(a.part(l) == c - 1 for l in range(k + 1, len(a) + 1)):
        return False
    return all(a.part(i) < a.part(r) or a.part(i) >= c for i in range(r + 1, k + 1))


def support_chain(a: WeakComposition, c: int, r: int) -> list[int]:
    """The rows r = r_0 < r_1 < ... < r_q whose parts climb from a_r up to c - 1."""
    chain = [r]
    while a.part(chain[-1]) != c - 1:
        current = a.part(chain[-1])
        nxt = next((s for s in range(chain[-1] + 1, len(a) + 1) if current < a.part(s) <= c - 1), None)
        if nxt is None:
            raise NotMember(f"({c},{r}) is not addable for {a}")
        chain.append(nxt)
    return chain


def supp_composition(a: WeakComposition | Iterable[int], c: int, r: int) -> WeakComposition:
    """The maximal support composition of ``a`` at the addable position (c, r).

    Row ``r`` receives ``c - 1`` and every later row of the support chain
    receives the part of its predecessor.
    """
    a = WeakComposition.of(a)
    if not is_addable(a, c, r):
        raise NotMember(f"({c},{r}) is not addable for {a}")
    chain = support_chain(a, c, r)
    result = a
    for i, j in reversed(list(zip(chain, chain[1:]))):
        result = result.transpose(i, j)
    return result


def addable_cells(a: WeakComposition | Iterable[int]) -> list[AddableCell]:
    a = WeakComposition.of(a)
    cells = []
    for r in range(1, len(a) + 1):
        values = {a.part(s) for s in range(r, len(a) + 1) if a.part(s) >= a.part(r)}
        for value in sorted(values):
            c = value + 1
            cells.append(AddableCell(c, r, supp_composition(a, c, r)))
    return sorted(cells)


def k_addable_cells(a: WeakComposition | Iterable[int], k: int) -> list[AddableCell]:
    """All k-addable cells of ``a``, sorted by (column, row)."""
    if k < 1:
        raise InvalidComposition(f"k must be positive, got {k}")
    a = WeakComposition.of(a)
    a = a.padded(max(len(a), k))
    cells = []
    for r in range(1, k + 1):
        candidates = {a.part(r) + 1} | {a.part(l) + 1 for l in range(k + 1, len(a) + 1) if a.part(l) > a.part(r)}
        for c in sorted(candidates):
            if is_k_addable(a, k, c, r):
                cells.append(AddableCell(c, r, supp_composition(a, c, r)))
    return sorted(cells)


def k_addable_columns(a: WeakComposition | Iterable[int], k: int) -> list[int]:
    return sorted({cell.column for cell in k_addable_cells(a, k)})


def row_set(a: WeakComposition | Iterable[int], k: int, c: int) -> list[int]:
    """Rows r <= k for which (c, r) is k-addable, increasing."""
    a = WeakComposition.of(a)
    a = a.padded(max(len(a), k))
    return [r for r in range(1, k + 1) if is_k_addable(a, k, c, r)]


def drop_composition(a: WeakComposition | Iterable[int], c: int, rows: Iterable[int],
                     k: int | None = None) -> WeakComposition:
    """The maximal drop composition of ``a`` in column ``c`` at the row set ``rows``.

    Starts from the support at the largest row and then swaps each adjacent
    pair of ``rows`` from the top pair downwards. When ``k`` is given the rows
    must lie in the k-addable row set.
    """
    a = WeakComposition.of(a)
    rows = sorted(set(rows))
    if not rows:
        raise NotMember("drop composition needs a nonempty row set")
    if k is not None:
        allowed = set(row_set(a, k, c))
        if not set(rows) <= allowed:
            raise NotMember(f"rows {rows} are not {k}-addable for {a} in column {c}")
    result = supp_composition(a, c, rows[-1])
    for lower, upper in reversed(list(zip(rows, rows[1:]))):
        result = result.transpose(lower, upper)
    return result


def k_addable_strips(
    a: WeakComposition | Iterable[int], k: int, m: int
) -> Iterator[tuple[tuple[tuple[int, int], ...], WeakComposition]]:
    """Yield every k-addable horizontal m-strip with its endpoint composition.

    Each step adds a k-addable cell of the current composition in a column not
    used before and replaces the composition by ``supp + e_row``.
    """
    a = WeakComposition.of(a)
    a = a.padded(max(len(a), k))

    def extend(current: WeakComposition, strip: tuple[tuple[int, int], ...]):
        if len(strip) == m:
            yield strip, current
            return
        used = {c for c, _ in strip}
        for cell in k_addable_cells(current, k):
            if cell.column in used:
                continue
            yield from extend(cell.term, strip + ((cell.column, cell.row),))

    yield from extend(a, ())
