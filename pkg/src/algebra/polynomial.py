"""Sparse multivariate polynomials with exact, overflow-checked integer coefficients."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from ..config import COEFF_MAX, COEFF_MIN


def _checked(value: int) -> int:
    if not COEFF_MIN <= value <= COEFF_MAX:
        raise OverflowError(f"coefficient {value} does not fit in a signed 64-bit integer")
    return value


def _pad(exp: tuple[int, ...], n: int) -> tuple[int, ...]:
    if len(exp) > n:
        if any(exp[n:]):
            raise ValueError(f"exponent {exp} uses a variable beyond x{n}")
        return exp[:n]
    return exp + (0,) * (n - len(exp))


@dataclass(frozen=True)
class Polynomial:
    """A polynomial in x_1..x_n stored as ``{exponent tuple: coefficient}``.

    Zero coefficients are never stored; all exponent tuples have length ``n``.
    Mixing polynomials with different ``n`` pads the shorter one.
    """
    n: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exp, coeff in dict(self.terms).items():
            if coeff:
                clean[_pad(tuple(int(e) for e in exp), self.n)] = _checked(int(coeff))
        object.__setattr__(self, "terms", clean)

    # --- constructors ---

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls(n, {(0,) * n: 1})

    @classmethod
    def constant(cls, value: int, n: int) -> Polynomial:
        return cls(n, {(0,) * n: value})

    @classmethod
    def variable(cls, i: int, n: int) -> Polynomial:
        """x_i, 1-indexed."""
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        return cls(n, {tuple(1 if j == i else 0 for j in range(1, n + 1)): 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1, n: int | None = None) -> Polynomial:
        exp = tuple(exp)
        return cls(len(exp) if n is None else n, {exp: coeff})

    @classmethod
    def complete_homogeneous(cls, m: int, k: int, n: int | None = None) -> Polynomial:
        """h_m(x_1..x_k) = s_(m)(x_1..x_k), embedded in ``n`` variables."""
        n = k if n is None else n
        terms: dict[tuple[int, ...], int] = {}
        for combo in combinations_with_replacement(range(k), m):
            exp = [0] * n
            for i in combo:
                exp[i] += 1
            terms[tuple(exp)] = 1
        return cls(n, terms)

    @classmethod
    def from_json(cls, data: Iterable[Mapping], n: int | None = None) -> Polynomial:
        data = list(data)
        width = max((len(t["exp"]) for t in data), default=0)
        n = width if n is None else n
        terms: dict[tuple[int, ...], int] = {}
        for term in data:
            exp = _pad(tuple(term["exp"]), n)
            terms[exp] = _checked(terms.get(exp, 0) + int(term["coeff"]))
        return cls(n, terms)

    # --- ring operations ---

    def embed(self, n: int) -> Polynomial:
        return self if n == self.n else Polynomial(n, self.terms)

    def _aligned(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        n = max(self.n, other.n)
        return self.embed(n), other.embed(n)

    def __add__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.n)
        left, right = self._aligned(other)
        terms = dict(left.terms)
        for exp, coeff in right.terms.items():
            terms[exp] = _checked(terms.get(exp, 0) + coeff)
        return Polynomial(left.n, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, {exp: -coeff for exp, coeff in self.terms.items()})

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-other)

    def __rsub__(self, other: int) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.n, {exp: _checked(c * other) for exp, c in self.terms.items()})
        left, right = self._aligned(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in left.terms.items():
            for e2, c2 in right.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                terms[exp] = _checked(terms.get(exp, 0) + _checked(c1 * c2))
        return Polynomial(left.n, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> Polynomial:
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one(self.n)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        left, right = self._aligned(other)
        return left.terms == right.terms

    def __hash__(self) -> int:
        stripped = frozenset((exp[: _last_nonzero(exp)], c) for exp, c in self.terms.items())
        return hash(stripped)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # --- queries ---

    def coefficient(self, exp: Iterable[int]) -> int:
        return self.terms.get(_pad(tuple(exp), self.n), 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms with exponents in decreasing lexicographic order."""
        return sorted(self.terms.items(), reverse=True)

    def total_degree(self) -> int:
        return max((sum(exp) for exp in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(exp) for exp in self.terms}) <= 1

    # --- rendering ---

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exp": list(exp)} for exp, c in self.sorted_terms()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.sorted_terms():
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exp, start=1) if e]
            body = "*".join(factors)
            magnitude = abs(coeff)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {self})"


def _last_nonzero(exp: tuple[int, ...]) -> int:
    end = len(exp)
    while end and exp[end - 1] == 0:
        end -= 1
    return end


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eq(p: Polynomial, q: Polynomial) -> bool:
    return p == q
