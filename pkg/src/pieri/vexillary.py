"""Vexillary compositions, Lehmer codes and 2143-avoidance."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from ..core.composition import WeakComposition
from ..errors import InvalidComposition


def satisfies_vex1(a: WeakComposition | Iterable[int]) -> bool:
    """For i < k with a_i > a_k, at most a_i - a_k parts strictly between are below a_k."""
    a = WeakComposition.of(a).parts
    for i, k in itertools.combinations(range(len(a)), 2):
        if a[i] > a[k]:
            smaller = sum(1 for j in range(i + 1, k) if a[j] < a[k])
            if smaller > a[i] - a[k]:
                return False
    return True


def satisfies_vex2(a: WeakComposition | Iterable[int]) -> bool:
    """For i < k with a_i <= a_k, no part strictly between is below a_i."""
    a = WeakComposition.of(a).parts
    for i, k in itertools.combinations(range(len(a)), 2):
        if a[i] <= a[k] and any(a[j] < a[i] for j in range(i + 1, k)):
            return False
    return True


def is_vexillary(a: WeakComposition | Iterable[int]) -> bool:
    return satisfies_vex1(a) and satisfies_vex2(a)


def check_permutation(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidComposition(f"{list(w)} is not a permutation of 1..{len(w)}")
    return w


def lehmer_code(w: Sequence[int], n: int | None = None) -> WeakComposition:
    """Le(w)_i = #{j > i : w_i > w_j}, right-padded to ``n`` parts."""
    w = check_permutation(w)
    code = tuple(sum(1 for later in w[i + 1:] if later < value) for i, value in enumerate(w))
    code = WeakComposition(code)
    return code if n is None else code.padded(n)


def is_vexillary_permutation(w: Sequence[int]) -> bool:
    """True when ``w`` contains no pattern 2143."""
    w = check_permutation(w)
    return not any(
        w[j] < w[i] < w[l] < w[k] for i, j, k, l in itertools.combinations(range(len(w)), 4)
    )
