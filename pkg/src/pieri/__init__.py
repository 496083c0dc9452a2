"""Addable cells, drop compositions and Pieri rules for key polynomials."""

from .addable import (
    AddableCell,
    addable_cells,
    drop_composition,
    is_addable,
    is_k_addable,
    k_addable_cells,
    k_addable_columns,
    k_addable_strips,
    row_set,
    supp_composition,
    support_chain,
)
from .signed import horizontal_strip_expansion, lswap_maximal_terms, pieri_signed_expansion
from .vexillary import (
    is_vexillary,
    is_vexillary_permutation,
    lehmer_code,
    satisfies_vex1,
    satisfies_vex2,
)
from .nonneg import nonneg_pieri, pieri_case

__all__ = [
    "AddableCell",
    "addable_cells",
    "k_addable_cells",
    "k_addable_columns",
    "k_addable_strips",
    "is_addable",
    "is_k_addable",
    "row_set",
    "support_chain",
    "supp_composition",
    "drop_composition",
    "pieri_signed_expansion",
    "horizontal_strip_expansion",
    "lswap_maximal_terms",
    "is_vexillary",
    "is_vexillary_permutation",
    "lehmer_code",
    "satisfies_vex1",
    "satisfies_vex2",
    "nonneg_pieri",
    "pieri_case",
]
