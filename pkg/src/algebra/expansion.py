"""Signed expansions in the key basis and the greedy key-expansion oracle."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from ..core.composition import WeakComposition
from .polynomial import Polynomial

logger = logging.getLogger("keypieri.algebra")


@dataclass(frozen=True)
class SignedKeyExpansion:
    """A formal sum of key polynomials, ``{index: coefficient}`` with nonzero coefficients.

    Indices compare up to trailing zeros, so two expansions are equal exactly
    when they agree as multisets of signed terms.
    """
    coefficients: Mapping[WeakComposition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[WeakComposition, int] = {}
        for index, coeff in dict(self.coefficients).items():
            index = WeakComposition.of(index)
            clean[index] = clean.get(index, 0) + int(coeff)
        object.__setattr__(self, "coefficients", {i: c for i, c in clean.items() if c})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Iterable[int]]]) -> SignedKeyExpansion:
        acc: dict[WeakComposition, int] = {}
        for coeff, index in terms:
            index = WeakComposition.of(index)
            acc[index] = acc.get(index, 0) + coeff
        return cls(acc)

    @property
    def terms(self) -> list[tuple[int, WeakComposition]]:
        """(coefficient, index) pairs in decreasing index order."""
        return [(self.coefficients[i], i) for i in sorted(self.coefficients, reverse=True)]

    @property
    def indices(self) -> list[WeakComposition]:
        return [i for _, i in self.terms]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedKeyExpansion):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self.coefficients.items()))

    def __add__(self, other: SignedKeyExpansion) -> SignedKeyExpansion:
        acc = dict(self.coefficients)
        for index, coeff in other.coefficients.items():
            acc[index] = acc.get(index, 0) + coeff
        return SignedKeyExpansion(acc)

    def __sub__(self, other: SignedKeyExpansion) -> SignedKeyExpansion:
        return self + SignedKeyExpansion({i: -c for i, c in other.coefficients.items()})

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.coefficients.values())

    def coefficient(self, index: Iterable[int]) -> int:
        return self.coefficients.get(WeakComposition.of(index), 0)

    def evaluate(self, n: int | None = None, cap: int | None = None) -> Polynomial:
        """Recombine into the polynomial sum of coeff * kappa_index."""
        from ..space.kohnert_space import key_polynomial

        width = max([len(i) for i in self.coefficients] + [n or 0])
        total = Polynomial.zero(width)
        for coeff, index in self.terms:
            total = total + key_polynomial(index.padded(width), cap) * coeff
        return total

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "index": i.to_json()} for c, i in self.terms]

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        out = []
        for position, (coeff, index) in enumerate(self.terms):
            body = "k[" + ",".join(str(p) for p in index) + "]"
            magnitude = abs(coeff)
            text = body if magnitude == 1 else f"{magnitude}*{body}"
            if position == 0:
                out.append(("-" if coeff < 0 else "") + text)
            else:
                out.append(("- " if coeff < 0 else "+ ") + text)
        return " ".join(out)


def _leading(exp: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return sum(i * e for i, e in enumerate(exp, start=1)), exp


def key_expand(p: Polynomial, cap: int | None = None) -> SignedKeyExpansion:
    """Expand ``p`` in the key basis by peeling leading terms.

    The leading term of kappa_b is x^b and every other monomial of kappa_b has
    a strictly smaller sum of i * b_i, so repeatedly removing
    ``coeff * kappa_b`` for the term maximising that sum (ties broken by the
    lexicographically largest exponent) terminates with the exact expansion.
    """
    from ..space.kohnert_space import key_polynomial

    remainder = p
    found: dict[WeakComposition, int] = {}
    while remainder:
        exp = max(remainder.terms, key=_leading)
        coeff = remainder.terms[exp]
        index = WeakComposition(exp)
        found[index] = found.get(index, 0) + coeff
        remainder = remainder - key_polynomial(index, cap) * coeff
        logger.debug("peeled %d * kappa%s, %d terms left", coeff, index, len(remainder))
    return SignedKeyExpansion(found)
