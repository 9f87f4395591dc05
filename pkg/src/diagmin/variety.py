"""Finite-field evidence for the minimal-prime decomposition: over small
prime fields, points killing the augmented ideal are exactly the points
killing some witness ideal.

This is a point-set equality check over the variables that actually occur,
not a symbolic radical/unmixedness proof; reports label it as such.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .errors import InputError, ResourceGuardError
from .graphs import Graph
from .ideals import augment_with_antidiagonal, witness_ideal
from .monomials import DEGREVLEX, Monomial
from .polynomials import GeneratorSet, TwoTermPoly
from .structure import minimal_primes

ALLOWED_FIELDS = (2, 3, 5)
POINT_GUARD = 10**6

Var = tuple[int, int]


@dataclass(frozen=True)
class VarietyReport:
    q: int
    num_vars: int
    lhs_points: int
    rhs_points: int
    equal: bool


def _used_vars(ideals: list[GeneratorSet]) -> list[Var]:
    used: set[Var] = set()
    for gs in ideals:
        for p in gs:
            used.update(v[:2] for v in p.lead.variables())
            if p.trail is not None:
                used.update(v[:2] for v in p.trail.variables())
    return sorted(used)


def _encode(polys: list[TwoTermPoly], index: dict[Var, int]):
    """Polynomials as index tuples, cheap-to-refute ones first."""

    def idxs(m: Monomial):
        out = []
        for r, c, e in m.variables():
            out.extend([index[(r, c)]] * e)
        return tuple(out)

    encoded = [
        (idxs(p.lead), idxs(p.trail) if p.trail is not None else None) for p in polys
    ]
    encoded.sort(key=lambda it: (it[1] is not None, len(it[0]), it))
    return encoded


def variety_check(g: Graph, edge: Var, q: int) -> VarietyReport:
    """Exhaustively compare the vanishing set of the augmented ideal with the
    union over all witness ideals, over the field with q elements."""
    if q not in ALLOWED_FIELDS:
        raise InputError(f"field size must be one of {ALLOWED_FIELDS}, got {q}")
    lhs = augment_with_antidiagonal(g, edge, DEGREVLEX)
    witnesses = [witness_ideal(w, DEGREVLEX) for w in minimal_primes(g, edge)]
    universe = _used_vars([lhs, *witnesses])
    k = len(universe)
    if q**k > POINT_GUARD:
        raise ResourceGuardError(
            f"{q}^{k} points exceeds the {POINT_GUARD} point guard"
        )
    index = {v: i for i, v in enumerate(universe)}

    common_polys = [p for p in lhs if all(p in w.polys for w in witnesses)]
    common_set = set(common_polys)
    enc_common = _encode(common_polys, index)
    enc_lhs = _encode([p for p in lhs if p not in common_set], index)
    enc_wits = [_encode([p for p in w if p not in common_set], index) for w in witnesses]

    lhs_count, rhs_count, mismatches = kernel.variety_compare(
        enc_common, enc_lhs, enc_wits, k, q
    )
    return VarietyReport(q, k, lhs_count, rhs_count, mismatches == 0)
