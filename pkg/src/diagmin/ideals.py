"""Ideal builders: the diagonal 2-minor ideal of a graph and the augmented
ideals used by the minimal-prime analysis.

The diagonal 2-minor of an edge {i,j} is x[i,i]*x[j,j] - x[i,j]*x[j,i]; the
graph's ideal collects one such minor per edge over the n*n grid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph
from .monomials import Monomial, MonomialOrder
from .polynomials import GeneratorSet, TwoTermPoly

Var = tuple[int, int]


def diagonal_minor(n: int, i: int, j: int, order: MonomialOrder) -> TwoTermPoly:
    """The 2-minor on rows/columns {i,j} taken at their diagonal crossings."""
    if i == j:
        raise InputError("diagonal minor needs two distinct indices")
    diag = Monomial.product_of(n, [(i, i), (j, j)])
    anti = Monomial.product_of(n, [(i, j), (j, i)])
    return TwoTermPoly.difference(diag, anti, order)


def minor_ideal(g: Graph, order: MonomialOrder) -> GeneratorSet:
    """Generators of the graph's diagonal 2-minor ideal, one per edge."""
    return GeneratorSet(
        (diagonal_minor(g.n, i, j, order) for i, j in g.edges), order, g.n
    )


def _require_edge(g: Graph, edge: Var) -> Var:
    e = (min(edge), max(edge))
    if e not in g.edges:
        raise InputError(f"edge ({e[0]},{e[1]}) is not in the graph")
    return e


def augment_with_antidiagonal(g: Graph, edge: Var, order: MonomialOrder) -> GeneratorSet:
    """Adjoining x[j,i] to the ideal equals dropping the edge and adjoining
    the diagonal product x[i,i]*x[j,j] together with x[j,i]."""
    i, j = _require_edge(g, edge)
    polys = list(minor_ideal(g.without_edge(i, j), order))
    polys.append(TwoTermPoly.mono(Monomial.product_of(g.n, [(i, i), (j, j)])))
    polys.append(TwoTermPoly.mono(Monomial.variable(g.n, j, i)))
    return GeneratorSet(polys, order, g.n)


@dataclass(frozen=True)
class MinimalPrimeWitness:
    """Combinatorial description of one minimal prime over (ideal, x[j,i]).

    The pivot is the endpoint whose diagonal variable enters the prime (i for
    class C1, j for C2); the selection picks one variable out of
    {x[a,pivot], x[pivot,a]} for every neighbor a of the pivot besides the
    other endpoint.
    """

    graph: Graph
    class_tag: str  # "C1" | "C2"
    edge: Var
    pivot: int
    selection: tuple[tuple[int, Var], ...]  # (neighbor, chosen variable), sorted

    def selection_map(self) -> dict[int, Var]:
        return dict(self.selection)

    def validate(self) -> None:
        i, j = self.edge
        if (min(self.edge), max(self.edge)) != self.edge or not self.graph.has_edge(i, j):
            raise InputError(f"witness edge {self.edge} is not a graph edge")
        if self.class_tag not in ("C1", "C2"):
            raise InputError(f"unknown witness class {self.class_tag!r}")
        expected_pivot = i if self.class_tag == "C1" else j
        if self.pivot != expected_pivot:
            raise InputError("witness pivot does not match its class")
        other = j if self.pivot == i else i
        wanted = tuple(a for a in self.graph.neighbors(self.pivot) if a != other)
        if tuple(a for a, _ in self.selection) != wanted:
            raise InputError("witness selection must cover exactly the pivot's other neighbors")
        for a, var in self.selection:
            if var not in ((a, self.pivot), (self.pivot, a)):
                raise InputError(f"selected variable {var} is not incident to neighbor {a}")

    def full_selection(self) -> tuple[tuple[int, Var], ...]:
        """Selection extended over all pivot neighbors: the other endpoint
        always contributes the anti-diagonal variable x[j,i]."""
        i, j = self.edge
        other = j if self.pivot == i else i
        items = dict(self.selection)
        items[other] = (j, i)
        return tuple(sorted(items.items()))

    def render(self) -> str:
        sel = ", ".join(f"{a}->x[{r},{c}]" for a, (r, c) in self.selection)
        return f"{self.class_tag} edge=({self.edge[0]},{self.edge[1]}) pivot={self.pivot} selection=[{sel}]"


def witness_ideal(w: MinimalPrimeWitness, order: MonomialOrder) -> GeneratorSet:
    """Expand a witness to generators: the minor ideal of the graph without
    the pivot, the pivot's diagonal variable, x[j,i], and the selection."""
    w.validate()
    g = w.graph
    i, j = w.edge
    polys = list(minor_ideal(g.without_vertex(w.pivot), order))
    monos = {(w.pivot, w.pivot), (j, i)}
    monos.update(var for _, var in w.selection)
    for r, c in sorted(monos):
        polys.append(TwoTermPoly.mono(Monomial.variable(g.n, r, c)))
    return GeneratorSet(polys, order, g.n)
