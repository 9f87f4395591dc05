"""The closed polynomial class of this ideal family: zero, one monomial, or
a pure difference of two monomials, plus deterministically ordered
generator sets.

Coefficients are never stored: every element is a unit multiple of
``lead - trail`` (or of a single monomial), so the whole engine is valid
over any field.  Normalization keeps lead > trail under the active order
and absorbs the overall sign.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import InputError
from .monomials import Monomial, MonomialOrder


class TwoTermPoly:
    """Zero (lead is None), Mono (trail is None) or Binom (lead > trail)."""

    __slots__ = ("lead", "trail")

    def __init__(self, lead: Optional[Monomial], trail: Optional[Monomial]):
        self.lead = lead
        self.trail = trail

    @classmethod
    def zero(cls) -> "TwoTermPoly":
        return cls(None, None)

    @classmethod
    def mono(cls, m: Monomial) -> "TwoTermPoly":
        return cls(m, None)

    @classmethod
    def difference(cls, u: Monomial, v: Monomial, order: MonomialOrder) -> "TwoTermPoly":
        """Normalized u - v: Zero when u == v, else the greater term leads."""
        c = order.compare(u, v)
        if c == 0:
            return cls(None, None)
        return cls(u, v) if c > 0 else cls(v, u)

    @property
    def is_zero(self) -> bool:
        return self.lead is None

    @property
    def is_mono(self) -> bool:
        return self.lead is not None and self.trail is None

    @property
    def is_binom(self) -> bool:
        return self.trail is not None

    @property
    def degree(self) -> int:
        if self.lead is None:
            raise ValueError("zero polynomial has no degree")
        return self.lead.degree

    @property
    def n(self) -> int:
        if self.lead is None:
            raise ValueError("zero polynomial has no grid")
        return self.lead.n

    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        """(monomial, sign) pairs, lead first."""
        if self.lead is None:
            return ()
        if self.trail is None:
            return ((self.lead, 1),)
        return ((self.lead, 1), (self.trail, -1))

    def render(self) -> str:
        if self.lead is None:
            return "0"
        if self.trail is None:
            return self.lead.render()
        return f"{self.lead.render()} - {self.trail.render()}"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TwoTermPoly)
            and self.lead == other.lead
            and self.trail == other.trail
        )

    def __hash__(self) -> int:
        return hash((self.lead, self.trail))

    def __repr__(self) -> str:
        return f"TwoTermPoly({self.render()})"


class GeneratorSet:
    """Nonzero two-term polynomials under one order, deduplicated and sorted
    descending by (lead, trail)."""

    __slots__ = ("polys", "order", "n")

    def __init__(self, polys: Iterable[TwoTermPoly], order: MonomialOrder, n: int):
        seen = set()
        unique = []
        for p in polys:
            if p.is_zero:
                raise InputError("generator sets hold nonzero polynomials only")
            if p.n != n:
                raise InputError(f"grid size mismatch: {p.n} vs {n}")
            if p not in seen:
                seen.add(p)
                unique.append(p)
        one_key = order.key(Monomial.one(n))

        def sort_key(p: TwoTermPoly):
            trail_key = order.key(p.trail) if p.trail is not None else one_key
            return (order.key(p.lead), trail_key, p.trail is not None)

        unique.sort(key=sort_key, reverse=True)
        self.polys = tuple(unique)
        self.order = order
        self.n = n

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i: int) -> TwoTermPoly:
        return self.polys[i]

    def leads(self) -> tuple[Monomial, ...]:
        return tuple(p.lead for p in self.polys)

    def render_lines(self) -> list[str]:
        return [p.render() for p in self.polys]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GeneratorSet)
            and self.n == other.n
            and self.order is other.order
            and self.polys == other.polys
        )

    def __hash__(self) -> int:
        return hash((self.n, self.order, self.polys))

    def __repr__(self) -> str:
        body = ", ".join(self.render_lines())
        return f"GeneratorSet[{self.order.value}, n={self.n}]({body})"
