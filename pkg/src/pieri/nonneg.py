"""Nonnegative Pieri rules for bottom, top and vexillary inputs.

Each rule adds ``m`` cells in strictly increasing columns ``c_1 < ... < c_m``
where ``c_i - 1`` is a part of the current composition, and replaces the
composition by its support at the chosen cell plus ``e_row``. The rules differ
only in the row they pick.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable

from ..algebra.expansion import SignedKeyExpansion
from ..core.composition import WeakComposition
from ..errors import InvalidComposition, UnsupportedCase
from .addable import is_addable, supp_composition
from .vexillary import satisfies_vex2

logger = logging.getLogger("keypieri.pieri")

RowChoice = Callable[[WeakComposition, int], "int | None"]


def _bottom_row(current: WeakComposition, c: int) -> int | None:
    return 1


def _top_row(k: int) -> RowChoice:
    def choose(current: WeakComposition, c: int) -> int | None:
        return max((r for r in range(1, k + 1) if current.part(r) == c - 1), default=None)
    return choose


def _vex_row(k: int) -> RowChoice:
    def choose(current: WeakComposition, c: int) -> int | None:
        exact = _top_row(k)(current, c)
        if exact is not None:
            return exact
        return max((r for r in range(1, k + 1) if current.part(r) < c - 1), default=None)
    return choose


def pieri_case(a: WeakComposition | Iterable[int], k: int) -> str:
    """Which nonnegative rule applies: ``"bottom"``, ``"top"`` or ``"vexillary"``.

    Raises:
        UnsupportedCase: if none does.
    """
    a = WeakComposition.of(a)
    if k == 1:
        return "bottom"
    if k >= a.length:
        return "top"
    if satisfies_vex2(a):
        return "vexillary"
    raise UnsupportedCase(f"no nonnegative Pieri rule for {a} with k={k}; use the strip expansion")


def nonneg_pieri(a: WeakComposition | Iterable[int], k: int, m: int) -> SignedKeyExpansion:
    """kappa_a * h_m(x_1..x_k) as a sum of key polynomials with coefficients +1.

    Raises:
        UnsupportedCase: if ``k > 1``, ``k < len(a)`` and ``a`` is not vex(2).
    """
    if k < 1 or m < 0:
        raise InvalidComposition(f"need k >= 1 and m >= 0, got k={k}, m={m}")
    a = WeakComposition.of(a)
    a = a.padded(max(len(a), k))
    case = pieri_case(a, k)
    choose = {"bottom": _bottom_row, "top": _top_row(k), "vexillary": _vex_row(k)}[case]
    floor = min(a.parts[:k]) if case == "vexillary" else 0

    ends: list[WeakComposition] = []

    def extend(current: WeakComposition, last: int, depth: int) -> None:
        if depth == m:
            ends.append(current)
            return
        for c in sorted({p + 1 for p in current if p + 1 > last}):
            r = choose(current, c)
            if r is None or not is_addable(current, c, r):
                continue
            extend(supp_composition(current, c, r).plus_unit(r), c, depth + 1)

    extend(a, floor, 0)
    logger.debug("%s rule for %s (k=%d, m=%d) gave %d terms", case, a, k, m, len(ends))
    return SignedKeyExpansion.from_terms((1, end) for end in ends)
