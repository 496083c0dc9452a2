"""Iterated insertion of a horizontal strip."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Literal

from ..core.diagram import Diagram
from ..errors import InvalidComposition
from .bottom import bottom_insert
from .top import top_insert


def insert_strip(diagram: Diagram, rows: Sequence[int], mode: Literal["bottom", "top"] = "top") -> Diagram:
    """Insert ``len(rows)`` cells one at a time.

    Bottom mode ignores the row values and inserts into row 1 each time. Top
    mode inserts the rows in the given order, which must be weakly decreasing.
    """
    if mode == "bottom":
        for _ in rows:
            diagram = bottom_insert(diagram)
        return diagram
    if mode != "top":
        raise InvalidComposition(f"unknown insertion mode {mode!r}")
    rows = list(rows)
    if any(r < 1 for r in rows):
        raise InvalidComposition(f"row indices must be positive: {rows}")
    if any(x < y for x, y in zip(rows, rows[1:])):
        raise InvalidComposition(f"top insertion rows must be weakly decreasing: {rows}")
    for r in rows:
        diagram = top_insert(diagram, r)
    return diagram
