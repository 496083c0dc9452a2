"""Kohnert spaces, key polynomials, left swap order and target spaces."""

from .kohnert_space import (
    KohnertSpace,
    coinversions,
    enumerate_kd,
    kd_membership,
    key_polynomial,
    left_swaps,
    lswap_down_set,
    lswap_leq,
)
from .target_space import (
    TargetSpace,
    enumerate_target_space,
    in_target_space,
    stratum_index,
    target_generators,
)

__all__ = [
    "KohnertSpace",
    "TargetSpace",
    "enumerate_kd",
    "key_polynomial",
    "kd_membership",
    "lswap_leq",
    "lswap_down_set",
    "left_swaps",
    "coinversions",
    "enumerate_target_space",
    "target_generators",
    "in_target_space",
    "stratum_index",
]
