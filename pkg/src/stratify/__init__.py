"""Stratification of target spaces and the stratum maps."""

from .strata import (
    StratumSplit,
    added_column,
    added_column_set,
    excised_weight,
    recover_rect_path,
    stratum_inverse,
    stratum_map,
    stratum_map_split,
    stratum_split,
)
from .drops import (
    DropDecomposition,
    degree_m_excised_weight,
    droppable_count,
    find_drop_decomposition,
    stratum_map_m,
)

__all__ = [
    "StratumSplit",
    "DropDecomposition",
    "added_column",
    "added_column_set",
    "excised_weight",
    "stratum_split",
    "stratum_map",
    "stratum_map_split",
    "stratum_inverse",
    "recover_rect_path",
    "droppable_count",
    "find_drop_decomposition",
    "degree_m_excised_weight",
    "stratum_map_m",
]
