"""Bottom insertion: add a cell at the leftmost gap of row 1."""

from __future__ import annotations

from collections.abc import Iterable

from ..core.composition import WeakComposition
from ..core.diagram import Cell, Diagram
from ..errors import NotGenericDiagram, NotMember


def bottom_insert(diagram: Diagram) -> Diagram:
    if not diagram.is_generic:
        raise NotGenericDiagram("bottom insertion needs a generic diagram")
    occupied = set(diagram.row(1))
    c = next(c for c in range(1, len(occupied) + 2) if c not in occupied)
    return diagram.add(Cell(c, 1))


def bottom_remove(diagram: Diagram, a: WeakComposition | Iterable[int]) -> Diagram:
    """Undo :func:`bottom_insert` for a diagram in the row-1 target space of ``a``.

    Raises:
        NotMember: if the result is not in KD(a) or does not insert back to ``diagram``.
    """
    from ..space.kohnert_space import kd_membership
    from ..stratify.strata import added_column

    a = WeakComposition.of(a)
    c = added_column(diagram, a)
    cell = Cell(c, 1)
    if cell not in diagram:
        raise NotMember(f"no cell at {tuple(cell)} to remove")
    base = diagram.remove(cell)
    if not kd_membership(base, a) or bottom_insert(base) != diagram:
        raise NotMember(f"diagram is not a bottom insertion into KD{a}")
    return base
