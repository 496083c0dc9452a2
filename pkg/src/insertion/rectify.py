"""Rectification: push offending cells left until the diagram is generic."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..core.diagram import Cell, Diagram
from ..errors import NotGenericDiagram

logger = logging.getLogger("keypieri.insertion")


@dataclass(frozen=True)
class RectificationTrace:
    steps: tuple[tuple[Cell, Cell], ...]
    result: Diagram

    @property
    def moved_cells(self) -> tuple[Cell, ...]:
        """Destinations of the moves, in order."""
        return tuple(target for _, target in self.steps)

    def to_json(self) -> dict:
        return {
            "steps": [[source.to_json(), target.to_json()] for source, target in self.steps],
            "result": self.result.to_json(),
        }


def offending_position(diagram: Diagram) -> Cell | None:
    """The cell rho would move: leftmost column with a negative deficiency, highest row at its minimum."""
    for c in range(2, diagram.max_column + 1):
        low, r = diagram.min_deficiency(c)
        if low < 0:
            return Cell(c, r)
    return None


def rho_step(diagram: Diagram) -> tuple[Diagram, tuple[Cell, Cell] | None]:
    """Apply one rectification step; generic diagrams are returned unchanged."""
    cell = offending_position(diagram)
    if cell is None:
        return diagram, None
    target = cell.left()
    # the minimum is attained at an occupied row whose left neighbour is empty
    if cell not in diagram or target in diagram:
        raise NotGenericDiagram(f"cannot push {tuple(cell)} left in {diagram!r}")
    return diagram.move(cell, target), (cell, target)


def rectify(diagram: Diagram) -> RectificationTrace:
    steps = []
    current = diagram
    while True:
        current, step = rho_step(current)
        if step is None:
            break
        steps.append(step)
    if steps:
        logger.debug("rectified in %d steps: %s", len(steps), steps)
    return RectificationTrace(tuple(steps), current)
