"""Kohnert spaces KD(a), key polynomials and the left swap order.

KD(a) is enumerated breadth-first from the key diagram. Internally a diagram
is a tuple of row bitmasks (bit ``c - 1`` of entry ``r - 1`` marks the cell
(c, r)), which keeps the closure cheap to hash; public results are
:class:`~src.core.diagram.Diagram` values in canonical order.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from ..algebra.polynomial import Polynomial
from ..config import CROSSCHECK, resolve_cap
from ..core.composition import WeakComposition
from ..core.diagram import Cell, Diagram, key_diagram
from ..core.matching import thread_weight
from ..errors import CapExceeded

logger = logging.getLogger("keypieri.space")

Masks = tuple[int, ...]


@dataclass(frozen=True)
class KohnertSpace:
    source: WeakComposition
    diagrams: tuple[Diagram, ...]

    @property
    def count(self) -> int:
        return len(self.diagrams)

    def __len__(self) -> int:
        return len(self.diagrams)

    def __contains__(self, diagram: Diagram) -> bool:
        return diagram in self.members

    @property
    def members(self) -> frozenset[Diagram]:
        return frozenset(self.diagrams)

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "count": self.count,
            "diagrams": [d.to_json() for d in self.diagrams],
        }


def _key_masks(a: WeakComposition) -> Masks:
    return tuple((1 << part) - 1 for part in a)


def _moves(masks: Masks) -> Iterable[Masks]:
    for r in range(1, len(masks)):
        row = masks[r]
        if not row:
            continue
        bit = 1 << (row.bit_length() - 1)
        for target in range(r - 1, -1, -1):
            if not masks[target] & bit:
                moved = list(masks)
                moved[r] ^= bit
                moved[target] |= bit
                yield tuple(moved)
                break


@lru_cache(maxsize=4096)
def _kd_masks(parts: tuple[int, ...], cap: int) -> frozenset[Masks]:
    start = _key_masks(WeakComposition(parts))
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for nxt in _moves(current):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(len(seen), cap, what=f"KD{WeakComposition(parts)}")
                queue.append(nxt)
    logger.debug("KD%s has %d diagrams", WeakComposition(parts), len(seen))
    return frozenset(seen)


def _to_diagram(masks: Masks) -> Diagram:
    cells = []
    for r, row in enumerate(masks, start=1):
        c = 1
        while row:
            if row & 1:
                cells.append(Cell(c, r))
            row >>= 1
            c += 1
    return Diagram(frozenset(cells))


def enumerate_kd(a: WeakComposition | Iterable[int], cap: int | None = None) -> KohnertSpace:
    """KD(a): the closure of key_a under Kohnert moves.

    Raises:
        CapExceeded: if the closure grows past ``cap`` diagrams.
    """
    a = WeakComposition.of(a)
    masks = _kd_masks(a.parts, resolve_cap(cap))
    diagrams = sorted((_to_diagram(m) for m in masks), key=lambda d: d.cells)
    return KohnertSpace(a, tuple(diagrams))


@lru_cache(maxsize=4096)
def _key_polynomial(parts: tuple[int, ...], cap: int) -> Polynomial:
    terms: dict[tuple[int, ...], int] = {}
    for masks in _kd_masks(parts, cap):
        exp = tuple(row.bit_count() for row in masks)
        terms[exp] = terms.get(exp, 0) + 1
    return Polynomial(len(parts), terms)


def key_polynomial(a: WeakComposition | Iterable[int], cap: int | None = None) -> Polynomial:
    """kappa_a, the generating polynomial of KD(a) in x_1..x_n with n = len(a)."""
    a = WeakComposition.of(a)
    return _key_polynomial(a.parts, resolve_cap(cap))


def coinversions(a: WeakComposition | Iterable[int]) -> int:
    return WeakComposition.of(a).coinversions()


def left_swaps(a: WeakComposition) -> list[WeakComposition]:
    """Every composition one left swap below ``a``: exchange a_i < a_j with i < j."""
    out = []
    for i in range(1, len(a) + 1):
        for j in range(i + 1, len(a) + 1):
            if a.part(i) < a.part(j):
                out.append(a.transpose(i, j))
    return out


@lru_cache(maxsize=4096)
def _down_set(parts: tuple[int, ...]) -> frozenset[WeakComposition]:
    start = WeakComposition(parts)
    seen = {start}
    queue = deque([start])
    while queue:
        for b in left_swaps(queue.popleft()):
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return frozenset(seen)


def lswap_down_set(a: WeakComposition | Iterable[int]) -> frozenset[WeakComposition]:
    """All b with b below or equal to ``a`` in the left swap order."""
    return _down_set(WeakComposition.of(a).parts)


def lswap_leq(b: WeakComposition | Iterable[int], a: WeakComposition | Iterable[int]) -> bool:
    b, a = WeakComposition.of(b), WeakComposition.of(a)
    n = max(b.length, a.length)
    b, a = b.padded(n), a.padded(n)
    if b.sorted_parts() != a.sorted_parts():
        return False
    result = b in _down_set(a.parts)
    if CROSSCHECK:
        via_space = key_diagram(b) in enumerate_kd(a)
        if via_space != result:
            logger.warning("left swap order disagrees with KD membership for %s <= %s", b, a)
    return result


def kd_membership(diagram: Diagram, a: WeakComposition | Iterable[int]) -> bool:
    """T is in KD(a) iff T is generic and theta(T) lies below ``a``."""
    if not diagram.is_generic:
        return False
    return lswap_leq(thread_weight(diagram), a)
