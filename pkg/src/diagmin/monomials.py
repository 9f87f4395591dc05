"""Monomials over the n*n variable grid and the two monomial orders.

Variables x[r,c] are totally ordered by their grid position
(r-1)*n + (c-1): row by row, left to right, x[1,1] greatest.  Both orders
are global (1 is the minimum) and multiplicative.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from . import kernel
from .errors import InputError


def var_position(n: int, row: int, col: int) -> int:
    return (row - 1) * n + (col - 1)


def position_var(n: int, p: int) -> tuple[int, int]:
    return p // n + 1, p % n + 1


def _check_var(n: int, row: int, col: int) -> None:
    if not (1 <= row <= n and 1 <= col <= n):
        raise InputError(f"variable x[{row},{col}] outside the {n}x{n} grid")


class Monomial:
    """Immutable sparse monomial; ``pairs`` interleaves ascending positions
    with positive exponents."""

    __slots__ = ("n", "pairs", "degree")

    def __init__(self, n: int, pairs: tuple[int, ...]):
        self.n = n
        self.pairs = pairs
        self.degree = sum(pairs[1::2])

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls(n, ())

    @classmethod
    def variable(cls, n: int, row: int, col: int) -> "Monomial":
        _check_var(n, row, col)
        return cls(n, (var_position(n, row, col), 1))

    @classmethod
    def product_of(cls, n: int, coords: Iterable[tuple[int, int]]) -> "Monomial":
        """Monomial from (row, col) factors; repeats raise the exponent."""
        exps: dict[int, int] = {}
        for row, col in coords:
            _check_var(n, row, col)
            p = var_position(n, row, col)
            exps[p] = exps.get(p, 0) + 1
        pairs = []
        for p in sorted(exps):
            pairs.append(p)
            pairs.append(exps[p])
        return cls(n, tuple(pairs))

    @classmethod
    def from_exponents(cls, n: int, exps: dict[tuple[int, int], int]) -> "Monomial":
        pairs = []
        for (row, col), e in sorted(exps.items(), key=lambda kv: var_position(n, *kv[0])):
            if e < 0:
                raise InputError("negative exponent")
            if e:
                _check_var(n, row, col)
                pairs.append(var_position(n, row, col))
                pairs.append(e)
        return cls(n, tuple(pairs))

    def _same_grid(self, other: "Monomial") -> None:
        if self.n != other.n:
            raise InputError(f"grid size mismatch: {self.n} vs {other.n}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._same_grid(other)
        return Monomial(self.n, kernel.mono_mul(self.pairs, other.pairs))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        self._same_grid(other)
        return Monomial(self.n, kernel.mono_div(self.pairs, other.pairs))

    def divides(self, other: "Monomial") -> bool:
        self._same_grid(other)
        return kernel.mono_divides(self.pairs, other.pairs)

    def lcm(self, other: "Monomial") -> "Monomial":
        self._same_grid(other)
        return Monomial(self.n, kernel.mono_lcm(self.pairs, other.pairs))

    def coprime(self, other: "Monomial") -> bool:
        self._same_grid(other)
        return kernel.mono_coprime(self.pairs, other.pairs)

    @property
    def is_one(self) -> bool:
        return not self.pairs

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self.pairs[1::2])

    def variables(self) -> tuple[tuple[int, int, int], ...]:
        """(row, col, exponent) triples in variable order."""
        return tuple(
            (*position_var(self.n, self.pairs[i]), self.pairs[i + 1])
            for i in range(0, len(self.pairs), 2)
        )

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset((r, c) for r, c, _ in self.variables())

    def render(self) -> str:
        if not self.pairs:
            return "1"
        parts = []
        for r, c, e in self.variables():
            parts.append(f"x[{r},{c}]" if e == 1 else f"x[{r},{c}]^{e}")
        return "*".join(parts)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Monomial)
            and self.n == other.n
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.pairs))

    def __repr__(self) -> str:
        return f"Monomial({self.n}, {self.render()})"


class MonomialOrder(Enum):
    LEX = "lex"
    DEGREVLEX = "degrevlex"

    @classmethod
    def parse(cls, name: str) -> "MonomialOrder":
        try:
            return cls(name.lower())
        except ValueError:
            raise InputError(f"unknown monomial order {name!r} (use lex or degrevlex)") from None

    def raw_cmp(self):
        """The kernel comparison function on flat pair tuples."""
        return kernel.cmp_lex if self is MonomialOrder.LEX else kernel.cmp_degrevlex

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as a is below, equal to or above b."""
        a._same_grid(b)
        return self.raw_cmp()(a.pairs, b.pairs)

    def key(self, m: Monomial):
        """Sort key consistent with compare (bigger key = greater monomial)."""
        return self.raw_key(m.pairs, m.n)

    def raw_key(self, pairs: tuple[int, ...], n: int):
        dense = [0] * (n * n)
        for i in range(0, len(pairs), 2):
            dense[pairs[i]] = pairs[i + 1]
        if self is MonomialOrder.LEX:
            return tuple(dense)
        return (sum(dense), tuple(-e for e in reversed(dense)))

    def sort(self, monos: Iterable[Monomial], reverse: bool = False) -> list[Monomial]:
        return sorted(monos, key=self.key, reverse=reverse)


LEX = MonomialOrder.LEX
DEGREVLEX = MonomialOrder.DEGREVLEX
