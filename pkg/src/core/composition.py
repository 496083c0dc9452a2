"""Weak compositions: the row-length vectors that index key polynomials.

A weak composition stores its length ``n`` explicitly, but equality and hashing
ignore trailing zeros, so ``(2,3,4)`` and ``(2,3,4,0)`` are the same value.
Rows are 1-indexed in every public method that takes a row index; plain
``a[i]`` indexing behaves like the underlying tuple.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from ..errors import InvalidComposition


@dataclass(frozen=True, eq=False)
class WeakComposition:
    """A finite sequence of nonnegative integers."""
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise InvalidComposition(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    # --- construction ---

    @classmethod
    def of(cls, value: WeakComposition | Iterable[int], n: int | None = None) -> WeakComposition:
        """Coerce ``value`` to a composition, padding with zeros to length ``n``."""
        comp = value if isinstance(value, WeakComposition) else cls(tuple(value))
        return comp if n is None else comp.padded(n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> WeakComposition:
        """Parse a comma-separated literal such as ``"0,3,2"``."""
        text = text.strip().strip("()[]")
        if not text:
            return cls(()).padded(n or 0)
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise InvalidComposition(f"not a composition literal: {text!r}") from exc
        return cls.of(parts, n)

    @classmethod
    def unit(cls, k: int, n: int | None = None) -> WeakComposition:
        """The unit composition e_k."""
        if k < 1:
            raise InvalidComposition(f"row index must be positive, got {k}")
        n = max(k, n or 0)
        return cls(tuple(1 if i == k else 0 for i in range(1, n + 1)))

    @classmethod
    def zero(cls, n: int) -> WeakComposition:
        return cls((0,) * n)

    # --- sequence protocol ---

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __eq__(self, other) -> bool:
        if isinstance(other, WeakComposition):
            return self.stripped() == other.stripped()
        if isinstance(other, tuple | list):
            return self.stripped() == WeakComposition.of(other).stripped()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.stripped())

    def __lt__(self, other: WeakComposition) -> bool:
        n = max(len(self), len(other))
        return self.padded(n).parts < WeakComposition.of(other).padded(n).parts

    def __repr__(self) -> str:
        return f"WeakComposition({self.parts})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    # --- derived data ---

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        """|a|, the total number of cells."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """l(a) = max{i : a_i > 0}, or 0 for the zero composition."""
        for i in range(len(self.parts), 0, -1):
            if self.parts[i - 1] > 0:
                return i
        return 0

    def part(self, i: int) -> int:
        """a_i with 1-indexed ``i``; zero beyond the stored length."""
        if i < 1:
            raise InvalidComposition(f"row index must be positive, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def stripped(self) -> tuple[int, ...]:
        end = len(self.parts)
        while end and self.parts[end - 1] == 0:
            end -= 1
        return self.parts[:end]

    def padded(self, n: int) -> WeakComposition:
        """Pad with trailing zeros to length ``n``; never truncates nonzero parts."""
        if n < self.length:
            raise InvalidComposition(f"{self} does not fit in {n} rows")
        if n == len(self.parts):
            return self
        if n < len(self.parts):
            return WeakComposition(self.parts[:n])
        return WeakComposition(self.parts + (0,) * (n - len(self.parts)))

    def sorted_parts(self) -> tuple[int, ...]:
        """sort(a): the nonzero parts in weakly decreasing order (a partition)."""
        return tuple(sorted((p for p in self.parts if p), reverse=True))

    def rev(self) -> WeakComposition:
        return WeakComposition(tuple(reversed(self.parts)))

    def is_weakly_increasing(self) -> bool:
        return all(x <= y for x, y in zip(self.parts, self.parts[1:]))

    def column_weight(self) -> tuple[int, ...]:
        """cwt(a): the number of parts that are at least c, for c = 1..max(a)."""
        top = max(self.parts, default=0)
        return tuple(sum(1 for p in self.parts if p >= c) for c in range(1, top + 1))

    def coinversions(self) -> int:
        """Number of pairs i < j with a_i < a_j."""
        p = self.parts
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] < p[j])

    # --- arithmetic ---

    def plus_unit(self, k: int) -> WeakComposition:
        """a + e_k, growing the length when ``k`` exceeds it."""
        comp = self.padded(max(len(self), k))
        parts = list(comp.parts)
        parts[k - 1] += 1
        return WeakComposition(tuple(parts))

    def minus_unit(self, k: int) -> WeakComposition:
        if self.part(k) == 0:
            raise InvalidComposition(f"cannot subtract e_{k} from {self}")
        parts = list(self.parts)
        parts[k - 1] -= 1
        return WeakComposition(tuple(parts))

    def __add__(self, other: WeakComposition | Sequence[int]) -> WeakComposition:
        other = WeakComposition.of(other)
        n = max(len(self), len(other))
        return WeakComposition(tuple(x + y for x, y in zip(self.padded(n), other.padded(n))))

    def transpose(self, i: int, j: int) -> WeakComposition:
        """t_{i,j} . a, exchanging the parts in rows ``i`` and ``j``."""
        comp = self.padded(max(len(self), i, j))
        parts = list(comp.parts)
        parts[i - 1], parts[j - 1] = parts[j - 1], parts[i - 1]
        return WeakComposition(tuple(parts))

    def to_json(self) -> list[int]:
        return list(self.parts)


def as_composition(value, n: int | None = None) -> WeakComposition:
    """Module-level alias of :meth:`WeakComposition.of` for call sites taking tuples."""
    return WeakComposition.of(value, n)
