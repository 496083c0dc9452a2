"""Removable cells of weak Kohnert diagrams."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..config import CROSSCHECK
from ..core.diagram import Cell, Diagram
from ..core.matching import thread_decomposition
from .rectify import offending_position

logger = logging.getLogger("keypieri.insertion")


@dataclass(frozen=True)
class RemovableReport:
    removable_cells: frozenset[Cell]
    removable_column: int | None = None
    highest: Cell | None = None
    lowest: Cell | None = None

    @property
    def is_weak(self) -> bool:
        return bool(self.removable_cells)

    def to_json(self) -> dict:
        return {
            "removable_cells": [c.to_json() for c in sorted(self.removable_cells)],
            "removable_column": self.removable_column,
            "highest": self.highest.to_json() if self.highest else None,
            "lowest": self.lowest.to_json() if self.lowest else None,
        }


def _profiles(diagram: Diagram) -> dict[int, list[int]]:
    """m_T(c, r) for rows 1..max_row, keyed by every column c >= 2 that can be affected."""
    rows = range(1, diagram.max_row + 1)
    return {c: [diagram.deficiency(c, r) for r in rows] for c in range(2, diagram.max_column + 2)}


def _survives(profiles: dict[int, list[int]], cell: Cell) -> bool:
    """Whether deleting ``cell`` leaves every deficiency nonnegative.

    Deleting (c, r) raises m(c, s) and lowers m(c + 1, s) by one for s <= r;
    no other value changes.
    """
    for column, values in profiles.items():
        if column == cell.column:
            shift = 1
        elif column == cell.column + 1:
            shift = -1
        else:
            shift = 0
        if any(v + (shift if s <= cell.row else 0) < 0 for s, v in enumerate(values, start=1)):
            return False
    return True


def removable_cells(diagram: Diagram) -> frozenset[Cell]:
    """Cells whose deletion leaves a generic diagram."""
    return removable_analysis(diagram).removable_cells


def _brute_force(diagram: Diagram) -> frozenset[Cell]:
    return frozenset(x for x in diagram if diagram.remove(x).is_generic)


def removable_analysis(diagram: Diagram) -> RemovableReport:
    """Find the removable cells and, for a weak but non-generic diagram, its removable column.

    A weak but non-generic diagram has exactly one column with a negative
    deficiency, and there the minimum is -1. Its lowest removable cell is the
    one rectification would move next. Its highest is the only cell outside
    column 1 whose thread ends there. The removable cells are the cells of that
    column between the two.
    """
    profiles = _profiles(diagram)
    if diagram.is_generic:
        cells = frozenset(x for x in diagram if _survives(profiles, x))
        report = RemovableReport(cells)
    else:
        report = _weak_report(diagram, profiles)

    if CROSSCHECK:
        brute = _brute_force(diagram)
        if brute != report.removable_cells:
            logger.warning("removable cells %s disagree with the deletion test %s", report, sorted(brute))
    return report


def _weak_report(diagram: Diagram, profiles: dict[int, list[int]]) -> RemovableReport:
    negative = [c for c, values in profiles.items() if min(values, default=0) < 0]
    if len(negative) != 1 or min(profiles[negative[0]]) != -1:
        return RemovableReport(frozenset())
    c = negative[0]
    lowest = offending_position(diagram)
    if lowest is None or lowest.column != c or not _survives(profiles, lowest):
        return RemovableReport(frozenset())

    ends = [t[-1] for t in thread_decomposition(diagram).unanchored()]
    if len(ends) == 1 and ends[0].column == c and ends[0].row >= lowest.row and _survives(profiles, ends[0]):
        highest = ends[0]
    else:
        logger.warning("no single unanchored thread end in column %d of %r", c, diagram)
        highest = max((Cell(c, r) for r in diagram.column(c) if r >= lowest.row and _survives(profiles, Cell(c, r))),
                      key=lambda x: x.row)
    cells = frozenset(Cell(c, r) for r in diagram.column(c) if lowest.row <= r <= highest.row)
    return RemovableReport(cells, c, highest, lowest)
