"""Compositions, diagrams and matchings."""

from .composition import WeakComposition, as_composition
from .diagram import (
    Cell,
    Diagram,
    column_weight,
    deficiency,
    is_generic,
    key_diagram,
    kohnert_successors,
    row_weight,
)
from .matching import (
    Labeling,
    MatchingSequence,
    ThreadDecomposition,
    anchor_weight,
    kohnert_labeling,
    path_length,
    path_lengths,
    thread_decomposition,
    thread_weight,
    validate_matching,
)

__all__ = [
    "WeakComposition",
    "as_composition",
    "Cell",
    "Diagram",
    "key_diagram",
    "row_weight",
    "column_weight",
    "kohnert_successors",
    "deficiency",
    "is_generic",
    "MatchingSequence",
    "ThreadDecomposition",
    "Labeling",
    "thread_decomposition",
    "thread_weight",
    "kohnert_labeling",
    "anchor_weight",
    "path_length",
    "path_lengths",
    "validate_matching",
]
