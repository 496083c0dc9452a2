"""Target spaces of the key Pieri bijections.

The degree-m target space of ``a`` bounded by row ``k`` is the union of
KD(g) over the endpoints ``g`` of k-addable horizontal m-strips for ``a``.
Membership never needs the union itself: a generic diagram ``U`` belongs to
it iff theta(U) lies below some generator in the left swap order.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from ..config import resolve_cap
from ..core.composition import WeakComposition
from ..core.diagram import Diagram
from ..core.matching import thread_weight
from ..errors import CapExceeded, InvalidComposition, NotMember
from ..pieri.addable import k_addable_strips
from .kohnert_space import enumerate_kd, lswap_down_set, lswap_leq

logger = logging.getLogger("keypieri.space")


@dataclass(frozen=True)
class TargetSpace:
    base: WeakComposition
    k: int
    m: int
    generators: tuple[WeakComposition, ...]
    diagrams: tuple[Diagram, ...]

    @property
    def count(self) -> int:
        return len(self.diagrams)

    def __len__(self) -> int:
        return len(self.diagrams)

    def __contains__(self, diagram: Diagram) -> bool:
        return diagram in frozenset(self.diagrams)

    def to_json(self) -> dict:
        return {
            "source": self.base.to_json(),
            "k": self.k,
            "m": self.m,
            "generators": [g.to_json() for g in self.generators],
            "count": self.count,
            "diagrams": [d.to_json() for d in self.diagrams],
        }


def _check_k(a: WeakComposition, k: int) -> WeakComposition:
    if k < 1:
        raise InvalidComposition(f"k must be positive, got {k}")
    return a.padded(max(len(a), k))


@lru_cache(maxsize=2048)
def _generators(parts: tuple[int, ...], k: int, m: int) -> tuple[WeakComposition, ...]:
    a = WeakComposition(parts)
    if m == 0:
        return (a,)
    endpoints = {end for _, end in k_addable_strips(a, k, m)}
    # drop endpoints already covered by a larger one
    maximal = [g for g in endpoints if not any(g != h and g in lswap_down_set(h) for h in endpoints)]
    return tuple(sorted(maximal))


def target_generators(a: WeakComposition | Iterable[int], k: int, m: int = 1) -> tuple[WeakComposition, ...]:
    """Maximal compositions g whose KD(g) make up the degree-m target space."""
    if m < 0:
        raise InvalidComposition(f"strip size must be nonnegative, got {m}")
    a = _check_k(WeakComposition.of(a), k)
    return _generators(a.parts, k, m)


def enumerate_target_space(
    a: WeakComposition | Iterable[int], k: int, m: int = 1, cap: int | None = None
) -> TargetSpace:
    """Enumerate the union of KD(g) over the target generators.

    Raises:
        CapExceeded: if any KD(g) or the union grows past ``cap``.
    """
    a = _check_k(WeakComposition.of(a), k)
    cap = resolve_cap(cap)
    generators = target_generators(a, k, m)
    seen: set[Diagram] = set()
    for g in generators:
        seen.update(enumerate_kd(g, cap).diagrams)
        if len(seen) > cap:
            raise CapExceeded(len(seen), cap, what="target space")
    logger.debug("target space of %s (k=%d, m=%d) has %d diagrams", a, k, m, len(seen))
    return TargetSpace(a, k, m, generators, tuple(sorted(seen, key=lambda d: d.cells)))


def in_target_space(diagram: Diagram, a: WeakComposition | Iterable[int], k: int, m: int = 1) -> bool:
    if not diagram.is_generic:
        return False
    theta = thread_weight(diagram)
    return any(lswap_leq(theta, g) for g in target_generators(a, k, m))


def stratum_index(diagram: Diagram, a: WeakComposition | Iterable[int], m: int = 1) -> int:
    """The least k with ``diagram`` in the degree-m target space of ``a``.

    Raises:
        NotMember: if no k up to the ambient row count works.
    """
    a = WeakComposition.of(a)
    n = max(len(a), diagram.max_row)
    for k in range(1, n + 1):
        if in_target_space(diagram, a, k, m):
            return k
    raise NotMember(f"diagram lies in no degree-{m} target space of {a}")
