"""Bottom and top insertion, rectification and removable cells."""

from .bottom import bottom_insert, bottom_remove
from .rectify import RectificationTrace, offending_position, rectify, rho_step
from .removable import RemovableReport, removable_analysis, removable_cells
from .strips import insert_strip
from .top import top_insert, top_insert_trace, top_remove, un_rectify

__all__ = [
    "RectificationTrace",
    "RemovableReport",
    "bottom_insert",
    "bottom_remove",
    "rho_step",
    "rectify",
    "offending_position",
    "top_insert",
    "top_insert_trace",
    "top_remove",
    "un_rectify",
    "removable_analysis",
    "removable_cells",
    "insert_strip",
]
