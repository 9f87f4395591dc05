"""Shared test helpers."""

from __future__ import annotations

import itertools

from diagmin import Graph, Monomial, TwoTermPoly
from diagmin.monomials import MonomialOrder


def mono(n: int, *coords: tuple[int, int]) -> Monomial:
    return Monomial.product_of(n, coords)


def binom(n: int, lead, trail, order: MonomialOrder) -> TwoTermPoly:
    return TwoTermPoly.difference(mono(n, *lead), mono(n, *trail), order)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search independent of the canonical-labeling kernel."""
    if g.n != h.n or g.m != h.m:
        return False
    ge = set(g.edges)
    for perm in itertools.permutations(range(1, g.n + 1)):
        relab = {v: perm[v - 1] for v in range(1, g.n + 1)}
        if {(min(relab[a], relab[b]), max(relab[a], relab[b])) for a, b in h.edges} == ge:
            return True
    return False


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges) + [(a + g.n, b + g.n) for a, b in h.edges]
    return Graph(g.n + h.n, tuple(edges))
