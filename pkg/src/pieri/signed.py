"""Signed Pieri expansions in the key basis."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable

from ..algebra.expansion import SignedKeyExpansion, key_expand
from ..algebra.polynomial import Polynomial
from ..core.composition import WeakComposition
from ..errors import InvalidComposition
from ..space.kohnert_space import key_polynomial, lswap_down_set
from .addable import drop_composition, k_addable_columns, row_set

logger = logging.getLogger("keypieri.pieri")


def _prepare(a: WeakComposition | Iterable[int], k: int) -> WeakComposition:
    if k < 1:
        raise InvalidComposition(f"k must be positive, got {k}")
    a = WeakComposition.of(a)
    return a.padded(max(len(a), k))


def pieri_signed_expansion(a: WeakComposition | Iterable[int], k: int) -> SignedKeyExpansion:
    """kappa_a * (x_1 + ... + x_k) as a signed sum of key polynomials.

    Each k-addable column ``c`` contributes an inclusion-exclusion over the
    nonempty subsets ``R`` of its row set, with sign ``(-1)^(|R|-1)`` and
    index ``drop(c, R) + e_min(R)``.
    """
    a = _prepare(a, k)
    terms = []
    for c in k_addable_columns(a, k):
        rows = row_set(a, k, c)
        for size in range(1, len(rows) + 1):
            for subset in itertools.combinations(rows, size):
                index = drop_composition(a, c, subset).plus_unit(subset[0])
                terms.append(((-1) ** (size - 1), index))
    expansion = SignedKeyExpansion.from_terms(terms)
    if len(expansion) != len(terms):
        logger.warning("signed expansion of %s (k=%d) produced colliding indices", a, k)
    return expansion


def horizontal_strip_expansion(
    a: WeakComposition | Iterable[int], k: int, m: int, cap: int | None = None
) -> SignedKeyExpansion:
    """Key expansion of kappa_a * h_m(x_1..x_k), peeled from the product polynomial.

    Raises:
        CapExceeded: if a key polynomial along the way is too large.
    """
    if m < 0:
        raise InvalidComposition(f"strip size must be nonnegative, got {m}")
    a = _prepare(a, k)
    product = key_polynomial(a, cap) * Polynomial.complete_homogeneous(m, k, len(a))
    return key_expand(product, cap)


def lswap_maximal_terms(expansion: SignedKeyExpansion) -> SignedKeyExpansion:
    """Keep the terms whose index lies below no other index in the left swap order."""
    indices = expansion.indices
    kept = {
        i: expansion.coefficient(i)
        for i in indices
        if not any(j != i and i in lswap_down_set(j) for j in indices)
    }
    return SignedKeyExpansion(kept)
