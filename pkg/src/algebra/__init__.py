"""Polynomial arithmetic, tableaux and key-basis expansions."""

from .expansion import SignedKeyExpansion, key_expand
from .polynomial import Polynomial, poly_add, poly_eq, poly_mul
from .tableaux import (
    SSYT,
    check_partition,
    conjugate_partition,
    diagram_of_tableau,
    enumerate_ssyt,
    insertion_cell,
    rsk_insert,
    schur_polynomial,
    tableau_of_diagram,
)

__all__ = [
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_eq",
    "SSYT",
    "check_partition",
    "conjugate_partition",
    "enumerate_ssyt",
    "schur_polynomial",
    "rsk_insert",
    "insertion_cell",
    "diagram_of_tableau",
    "tableau_of_diagram",
    "SignedKeyExpansion",
    "key_expand",
]
