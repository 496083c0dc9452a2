"""Droppable counts, drop decompositions and stratum maps of higher degree."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable
from dataclasses import dataclass

from ..core.composition import WeakComposition
from ..core.diagram import Cell, Diagram, key_diagram
from ..core.matching import kohnert_labeling, thread_weight
from ..errors import NotMember
from ..pieri.addable import k_addable_strips, supp_composition
from ..space.kohnert_space import kd_membership, lswap_leq
from .strata import added_column_set, stratum_map

logger = logging.getLogger("keypieri.stratify")


def droppable_count(source: Diagram | WeakComposition | Iterable[int], c: int, r: int) -> int:
    """Cells of column ``c`` weakly above row ``r``.

    For a composition this counts rows ``j >= r`` with ``a_j >= c``, which is
    the same number for its key diagram.
    """
    if isinstance(source, Diagram):
        return sum(1 for s in source.column(c) if s >= r)
    a = WeakComposition.of(source)
    return sum(1 for j in range(r, len(a) + 1) if a.part(j) >= c)


@dataclass(frozen=True)
class DropDecomposition:
    host: Diagram
    base: Diagram
    added: frozenset[Cell]

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(sorted(x.column for x in self.added))

    def to_json(self) -> dict:
        return {
            "host": self.host.to_json(),
            "base": self.base.to_json(),
            "added": [x.to_json() for x in sorted(self.added)],
        }


def _is_drop(host: Diagram, base: Diagram, added: frozenset[Cell], a: WeakComposition, k: int) -> bool:
    columns = [x.column for x in added]
    return (
        len(set(columns)) == len(columns)
        and all(x.row <= k for x in added)
        and (base | added) == host
        and not any(x in base for x in added)
        and kd_membership(base, a)
    )


def _peel(host: Diagram, chain: list[WeakComposition], strip) -> tuple[Diagram, frozenset[Cell]] | None:
    """Split off one labeled cell per strip step, last step first."""
    current = host
    added: list[Cell] = []
    for (c, r), g in zip(reversed(strip), reversed(chain[1:])):
        try:
            labeling, _ = kohnert_labeling(current, g)
        except NotMember:
            return None
        cell = next((x for x in labeling.cells_with(r) if x.column == c), None)
        if cell is None:
            return None
        current = current.remove(cell)
        added.append(cell)
    return current, frozenset(added)


def find_drop_decomposition(
    diagram: Diagram, a: WeakComposition | Iterable[int], k: int, m: int
) -> DropDecomposition | None:
    """Split key(theta(U)) into a member of KD(a) and a horizontal m-strip weakly below row ``k``.

    Returns ``None`` when ``diagram`` is outside the degree-m target space
    bounded by row ``k``. For ``m = 0`` the diagram itself is the host.
    """
    a = WeakComposition.of(a)
    if not diagram.is_generic:
        return None
    if m == 0:
        return DropDecomposition(diagram, diagram, frozenset()) if kd_membership(diagram, a) else None

    n = max(len(a), diagram.max_row, k)
    a = a.padded(n)
    theta = thread_weight(diagram, n)
    host = key_diagram(theta)

    for strip, end in k_addable_strips(a, k, m):
        if not lswap_leq(theta, end):
            continue
        chain = [a]
        for c, r in strip:
            chain.append(supp_composition(chain[-1], c, r).plus_unit(r))
        peeled = _peel(host, chain, strip)
        if peeled and _is_drop(host, *peeled, a, k):
            return DropDecomposition(host, *peeled)

    # labeled peeling found nothing; try every choice of one cell per added column
    try:
        columns = added_column_set(host, a, m)
    except NotMember:
        return None
    choices = [[Cell(c, r) for r in host.column(c) if r <= k] for c in columns]
    for picked in itertools.product(*choices):
        added = frozenset(picked)
        base = host - added
        if _is_drop(host, base, added, a, k):
            logger.debug("drop decomposition of %s found by exhaustive choice", theta)
            return DropDecomposition(host, base, added)
    return None


def degree_m_excised_weight(
    diagram: Diagram, a: WeakComposition | Iterable[int], k: int, m: int
) -> tuple[WeakComposition, int]:
    """The excised weight of degree ``m - 1`` together with its column.

    The column is the rightmost added column ``c`` where theta(U) has more
    droppable cells at row ``k`` than ``a``.

    Raises:
        NotMember: if no added column qualifies or key(theta(U)) misses (c, k).
    """
    a = WeakComposition.of(a)
    n = max(len(a), diagram.max_row, k)
    theta = thread_weight(diagram, n)
    columns = added_column_set(diagram, a, m)
    qualifying = [c for c in columns if droppable_count(theta, c, k) > droppable_count(a, c, k)]
    if not qualifying:
        raise NotMember(f"diagram is not in stratum {k} of the degree-{m} target space of {a}")
    c = max(qualifying)
    if theta.part(k) < c:
        raise NotMember(f"key{theta} has no cell at ({c},{k})")
    return thread_weight(key_diagram(theta).remove((c, k)), n), c


def stratum_map_m(diagram: Diagram, a: WeakComposition | Iterable[int], k: int, m: int) -> Diagram:
    """The k-th stratum map of degree ``m``: the ordinary stratum map for the excised weight."""
    b, _ = degree_m_excised_weight(diagram, a, k, m)
    return stratum_map(diagram, b, k)
