"""Top insertion and its inverse.

Top insertion appends a cell in row ``j`` one column past the rightmost
occupied column and rectifies. The inverse walks the rectification back:
starting from a tracked cell it repeatedly pushes the highest cell of the
tracked column whose deletion leaves a generic diagram one column right.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

from ..config import CROSSCHECK
from ..core.composition import WeakComposition
from ..core.diagram import Cell, Diagram
from ..core.matching import thread_decomposition
from ..errors import InvalidComposition, NotGenericDiagram, NotMember
from .rectify import RectificationTrace, rectify

logger = logging.getLogger("keypieri.insertion")


def top_insert_trace(diagram: Diagram, j: int) -> RectificationTrace:
    if j < 1:
        raise InvalidComposition(f"row index must be positive, got {j}")
    if not diagram.is_generic:
        raise NotGenericDiagram("top insertion needs a generic diagram")
    return rectify(diagram.add(Cell(diagram.max_column + 1, j)))


def top_insert(diagram: Diagram, j: int) -> Diagram:
    """Rectify ``diagram`` plus a cell at (rightmost column + 1, j)."""
    return top_insert_trace(diagram, j).result


def _un_rectify(diagram: Diagram, tracked: Cell, target_column: int) -> tuple[Diagram, Cell]:
    tracked = Cell(*tracked)
    if tracked not in diagram:
        raise NotMember(f"tracked cell {tuple(tracked)} is not in the diagram")
    if target_column < tracked.column:
        raise NotMember(f"cannot move column {tracked.column} back to column {target_column}")

    current = diagram
    while tracked.column < target_column:
        c = tracked.column
        candidates = [
            r for r in reversed(current.column(c))
            if (c + 1, r) not in current and current.remove((c, r)).is_generic
        ]
        if not candidates:
            raise NotMember(f"no cell of column {c} can be pushed right")
        r = candidates[0]
        current = current.move((c, r), (c + 1, r))
        tracked = Cell(c + 1, r)
    return current, tracked


def un_rectify(diagram: Diagram, tracked: Cell, target_column: int) -> Diagram:
    """Reverse rectification from ``tracked`` until the tracked cell reaches ``target_column``.

    Raises:
        NotMember: if the walk gets stuck or, with cross-checking enabled,
            rectifying the result does not give ``diagram`` back.
    """
    result, _ = _un_rectify(diagram, tracked, target_column)
    if CROSSCHECK and rectify(result).result != diagram:
        raise NotMember("un-rectification does not rectify back to the input")
    return result


def top_remove(diagram: Diagram, a: WeakComposition | Iterable[int]) -> tuple[Diagram, int]:
    """Invert top insertion into KD(a), returning the original diagram and the inserted row.

    Raises:
        NotMember: if ``diagram`` is not a top insertion of a member of KD(a).
    """
    from ..space.kohnert_space import kd_membership
    from ..stratify.strata import added_column

    a = WeakComposition.of(a)
    c = added_column(diagram, a)
    decomposition = thread_decomposition(diagram)
    has_source = set(decomposition.matching.sources())
    ends = [r for r in diagram.column(c) if Cell(c, r) not in has_source]
    if not ends:
        raise NotMember(f"no thread ends in column {c}")
    start = Cell(c, max(ends))

    width = max(a, default=0) + 1
    pushed, arrived = _un_rectify(diagram, start, width)
    base = pushed.remove(arrived)
    j = arrived.row
    if not kd_membership(base, a) or top_insert(base, j) != diagram:
        raise NotMember(f"diagram is not a top insertion into KD{a}")
    logger.debug("top removal recovered row %d via column %d", j, c)
    return base, j
