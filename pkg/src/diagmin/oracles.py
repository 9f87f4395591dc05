"""Deliberately naive cross-validation oracles, independent of the engine.

The generic Buchberger works on dense exponent tuples with exact rational
coefficients, processes pairs in plain insertion order and applies no
criteria.  The vertex-cover oracle enumerates subsets.  Agreement with the
engine is asserted by the test suite and the `verify` CLI, never assumed.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, ResourceGuardError
from .monomials import Monomial, MonomialOrder
from .polynomials import GeneratorSet, TwoTermPoly

Dense = tuple[int, ...]


class GenericPoly:
    """Sparse polynomial {dense exponent tuple: Fraction} over an n*n grid."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Dense, Fraction]):
        self.n = n
        self.terms = {m: c for m, c in terms.items() if c != 0}

    @classmethod
    def from_twoterm(cls, p: TwoTermPoly) -> "GenericPoly":
        if p.is_zero:
            raise InputError("zero polynomial")
        terms = {_dense(p.lead): Fraction(1)}
        if p.trail is not None:
            terms[_dense(p.trail)] = Fraction(-1)
        return cls(p.n, terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GenericPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def frozen(self) -> frozenset[tuple[Dense, Fraction]]:
        return frozenset(self.terms.items())


def _dense(m: Monomial) -> Dense:
    out = [0] * (m.n * m.n)
    for i in range(0, len(m.pairs), 2):
        out[m.pairs[i]] = m.pairs[i + 1]
    return tuple(out)


def _key(order: MonomialOrder, t: Dense):
    if order is MonomialOrder.LEX:
        return t
    return (sum(t), tuple(-e for e in reversed(t)))


def _mul(a: Dense, b: Dense) -> Dense:
    return tuple(x + y for x, y in zip(a, b))


def _div(a: Dense, b: Dense) -> Dense | None:
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def _lcm(a: Dense, b: Dense) -> Dense:
    return tuple(max(x, y) for x, y in zip(a, b))


def _lead(p: GenericPoly, order: MonomialOrder) -> tuple[Dense, Fraction]:
    m = max(p.terms, key=lambda t: _key(order, t))
    return m, p.terms[m]


def _sub_scaled(p: GenericPoly, q: GenericPoly, mono: Dense, coeff: Fraction) -> GenericPoly:
    """p - coeff * x^mono * q."""
    terms = dict(p.terms)
    for t, c in q.terms.items():
        u = _mul(t, mono)
        terms[u] = terms.get(u, Fraction(0)) - coeff * c
    return GenericPoly(p.n, terms)


def oracle_spoly(f: GenericPoly, g: GenericPoly, order: MonomialOrder) -> GenericPoly:
    mf, cf = _lead(f, order)
    mg, cg = _lead(g, order)
    lcm = _lcm(mf, mg)
    r = _sub_scaled(GenericPoly(f.n, {}), f, _div(lcm, mf), Fraction(-1) / cf)
    return _sub_scaled(r, g, _div(lcm, mg), Fraction(1) / cg)


def oracle_normal_form(p: GenericPoly, basis: Sequence[GenericPoly], order: MonomialOrder) -> GenericPoly:
    """Textbook division: reduce the lead if possible, else emit it."""
    leads = [_lead(g, order) for g in basis]
    remainder: dict[Dense, Fraction] = {}
    work = GenericPoly(p.n, dict(p.terms))
    while work:
        m, c = _lead(work, order)
        for g, (mg, cg) in zip(basis, leads):
            quot = _div(m, mg)
            if quot is not None:
                work = _sub_scaled(work, g, quot, c / cg)
                break
        else:
            remainder[m] = c
            del work.terms[m]
    return GenericPoly(p.n, remainder)


def generic_buchberger(gens: Iterable[GenericPoly], order: MonomialOrder) -> list[GenericPoly]:
    """Reduced Groebner basis over the rationals, naive pair processing."""
    basis = [g for g in gens if g]
    if not basis:
        return []
    n = basis[0].n
    pairs = deque(itertools.combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.popleft()
        r = oracle_normal_form(oracle_spoly(basis[i], basis[j], order), basis, order)
        if r:
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))

    # minimal leads
    leads = [_lead(g, order)[0] for g in basis]
    kept = []
    for i, g in enumerate(basis):
        mi = leads[i]
        redundant = any(
            j != i and _div(mi, leads[j]) is not None and (leads[j] != mi or j < i)
            for j in range(len(basis))
        )
        if not redundant:
            kept.append(g)
    # full tail reduction, then monic
    out = []
    for idx, g in enumerate(kept):
        others = [h for k, h in enumerate(kept) if k != idx]
        r = oracle_normal_form(g, others, order) if others else g
        m, c = _lead(r, order)
        out.append(GenericPoly(n, {t: coeff / c for t, coeff in r.terms.items()}))
    out.sort(key=lambda g: _key(order, _lead(g, order)[0]), reverse=True)
    return out


def reduced_gb_via_oracle(gens: GeneratorSet) -> list[GenericPoly]:
    return generic_buchberger(
        (GenericPoly.from_twoterm(p) for p in gens), gens.order
    )


def twoterm_gb_as_generic(gb: GeneratorSet) -> list[GenericPoly]:
    return [GenericPoly.from_twoterm(p) for p in gb]


def gb_sets_equal(a: Iterable[GenericPoly], b: Iterable[GenericPoly]) -> bool:
    return {p.frozen() for p in a} == {p.frozen() for p in b}


def exhaustive_vertex_cover(supports: Sequence[Iterable]) -> int:
    """Minimum hitting-set size by subset enumeration (<= 20 variables)."""
    sets = [frozenset(s) for s in supports]
    universe = sorted(set().union(*sets)) if sets else []
    if len(universe) > 20:
        raise ResourceGuardError(f"{len(universe)} variables exceeds the 20-variable oracle guard")
    if not sets:
        return 0
    for size in range(len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            chosen = set(combo)
            if all(chosen & s for s in sets):
                return size
    raise AssertionError("unreachable: the full universe is always a cover")


def evaluate(p, point: dict[tuple[int, int], int], q: int):
    """Value of a two-term or generic polynomial at a point mod q."""
    if isinstance(p, TwoTermPoly):
        if p.is_zero:
            return 0
        total = _eval_monomial(p.lead, point, q)
        if p.trail is not None:
            total -= _eval_monomial(p.trail, point, q)
        return total % q
    if isinstance(p, GenericPoly):
        total = 0
        for t, c in p.terms.items():
            if c.denominator % q == 0:
                raise InputError("coefficient denominator vanishes mod q")
            term = c.numerator * pow(c.denominator, -1, q)
            for pos, e in enumerate(t):
                if e:
                    r, c2 = pos // p.n + 1, pos % p.n + 1
                    term *= pow(_lookup(point, r, c2), e, q)
            total += term
        return total % q
    raise InputError(f"cannot evaluate {type(p).__name__}")


def _lookup(point: dict[tuple[int, int], int], r: int, c: int) -> int:
    try:
        return point[(r, c)]
    except KeyError:
        raise InputError(f"point assigns no value to x[{r},{c}]") from None


def _eval_monomial(m: Monomial, point: dict[tuple[int, int], int], q: int) -> int:
    v = 1
    for r, c, e in m.variables():
        v = v * pow(_lookup(point, r, c), e, q) % q
    return v
