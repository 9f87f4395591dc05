"""Desk-scale verification of the structural results and the class-group
invariants: Groebner behaviour under both orders, classification of lex
basis elements, minimal-prime witnesses, selection counting, ranks, bounds
and surveys.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, VerificationError
from .graphs import Graph, enumerate_connected, family, is_connected, iso_key
from .groebner import (
    buchberger,
    initial_ideal,
    is_reduced,
    monomial_ideal_height,
    reduce_basis,
)
from .ideals import MinimalPrimeWitness, minor_ideal
from .monomials import DEGREVLEX, LEX
from .polynomials import GeneratorSet, TwoTermPoly

Var = tuple[int, int]


# ---------------------------------------------------------------------------
# Groebner basis behaviour under the two orders


@dataclass(frozen=True)
class RevlexReport:
    is_reduced_gb: bool
    additions: int
    height: int
    complete_intersection: bool


def verify_revlex_gb(g: Graph) -> RevlexReport:
    """Under degrevlex the edge minors should already be the reduced basis:
    zero additions, initial supports pairwise disjoint, height = edge count."""
    gens = minor_ideal(g, DEGREVLEX)
    gb = buchberger(gens)
    additions = len(gb) - len(gens)
    mins = initial_ideal(gb) if len(gb) else []
    supports = [m.support() for m in mins]
    disjoint = len(set().union(*supports)) == sum(len(s) for s in supports) if supports else True
    return RevlexReport(
        is_reduced_gb=is_reduced(gb) and reduce_basis(gb) == gb,
        additions=additions,
        height=monomial_ideal_height(mins),
        complete_intersection=disjoint,
    )


# ---------------------------------------------------------------------------
# Classification of reduced lex basis elements

TAG_GENERATOR = "generator"
TAG_DEG3_I = "deg3-case-i"
TAG_DEG3_II = "deg3-case-ii"
TAG_DEG3_III = "deg3-case-iii"
TAG_DEG4_1 = "deg4-case-1"
TAG_DEG4_2 = "deg4-case-2"
TAG_DEG4_3 = "deg4-case-3"
TAG_UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class LexGBClassification:
    basis: GeneratorSet
    tagged: tuple[tuple[TwoTermPoly, str], ...]

    def by_degree(self) -> dict[int, list[TwoTermPoly]]:
        out: dict[int, list[TwoTermPoly]] = {}
        for p, _ in self.tagged:
            out.setdefault(p.degree, []).append(p)
        return out

    def tags(self) -> list[str]:
        return [t for _, t in self.tagged]

    @property
    def unclassified_count(self) -> int:
        return sum(1 for _, t in self.tagged if t == TAG_UNCLASSIFIED)


def _mono_shape(m) -> tuple[list[int], list[frozenset[int]]] | None:
    """Split a squarefree monomial into diagonal indices and transpose pairs
    {x[a,b], x[b,a]}; None when some off-diagonal variable lacks its mirror."""
    if not m.is_squarefree:
        return None
    diags = []
    offs = set()
    for r, c, _ in m.variables():
        if r == c:
            diags.append(r)
        else:
            offs.add((r, c))
    pairs = []
    while offs:
        r, c = min(offs)
        if (c, r) not in offs:
            return None
        offs.discard((r, c))
        offs.discard((c, r))
        pairs.append(frozenset((r, c)))
    return sorted(diags), pairs


def _classify_deg3(lead_shape, trail_shape) -> str:
    (ld, lp), (td, tp) = lead_shape, trail_shape
    if len(ld) != 1 or len(lp) != 1 or len(td) != 1 or len(tp) != 1:
        return TAG_UNCLASSIFIED
    u, w = ld[0], td[0]
    p1, p2 = lp[0], tp[0]
    shared = p1 & p2
    if len(shared) != 1 or u not in p2 or w not in p1:
        return TAG_UNCLASSIFIED
    s = next(iter(shared))
    if len({u, s, w}) != 3:
        return TAG_UNCLASSIFIED
    if u < s < w:
        return TAG_DEG3_I
    if s < w < u:
        return TAG_DEG3_II
    if u < w < s:
        return TAG_DEG3_III
    return TAG_UNCLASSIFIED


def _classify_deg4(lead_shape, trail_shape) -> str:
    # one side is two transpose pairs, the other two diagonals and a pair;
    # orientation varies with the free index, so accept both
    for (sd, sp), (od, op) in ((lead_shape, trail_shape), (trail_shape, lead_shape)):
        if len(sd) == 0 and len(sp) == 2 and len(od) == 2 and len(op) == 1:
            tag = _match_deg4(sp, od, op[0])
            if tag != TAG_UNCLASSIFIED:
                return tag
    return TAG_UNCLASSIFIED


def _match_deg4(pair_side: list[frozenset[int]], diags: list[int], base: frozenset[int]) -> str:
    if len(base) != 2:
        return TAG_UNCLASSIFIED
    a, b = sorted(base)
    d1, d2 = diags
    pairs = set(pair_side)
    for da, db in ((d1, d2), (d2, d1)):
        if {frozenset((a, da)), frozenset((b, db))} != pairs:
            continue
        if len({a, b, da, db}) != 4:
            continue
        if a < da < b < db:
            return TAG_DEG4_1
        if a < da < b and a < db < b:
            return TAG_DEG4_3
        if a < da < b:
            return TAG_DEG4_2
    return TAG_UNCLASSIFIED


def classify_element(p: TwoTermPoly) -> str:
    if not p.is_binom or not p.lead.is_squarefree:
        return TAG_UNCLASSIFIED
    lead_shape = _mono_shape(p.lead)
    trail_shape = _mono_shape(p.trail)
    if lead_shape is None or trail_shape is None:
        return TAG_UNCLASSIFIED
    d = p.degree
    if d == 2:
        (ld, lp), (td, tp) = lead_shape, trail_shape
        if len(ld) == 2 and not lp and not td and len(tp) == 1 and set(ld) == set(tp[0]):
            return TAG_GENERATOR
        return TAG_UNCLASSIFIED
    if d == 3:
        return _classify_deg3(lead_shape, trail_shape)
    if d == 4:
        return _classify_deg4(lead_shape, trail_shape)
    return TAG_UNCLASSIFIED


def lex_gb_classify(g: Graph) -> LexGBClassification:
    """Reduced lex basis with every element tagged by its recurring shape."""
    gb = reduce_basis(buchberger(minor_ideal(g, LEX)))
    return LexGBClassification(gb, tuple((p, classify_element(p)) for p in gb))


# ---------------------------------------------------------------------------
# Minimal primes and selection counting


def minimal_primes(g: Graph, edge: Var) -> list[MinimalPrimeWitness]:
    """All witnesses over the edge: 2^(deg i - 1) in class C1 and
    2^(deg j - 1) in class C2, deterministically ordered."""
    e = (min(edge), max(edge))
    if not g.has_edge(*e):
        raise InputError(f"edge ({e[0]},{e[1]}) is not in the graph")
    i, j = e
    out = []
    for class_tag, pivot, other in (("C1", i, j), ("C2", j, i)):
        nbrs = [a for a in g.neighbors(pivot) if a != other]
        for bits in range(1 << len(nbrs)):
            sel = []
            for k, a in enumerate(nbrs):
                lo, hi = min(a, pivot), max(a, pivot)
                var = (hi, lo) if bits >> k & 1 else (lo, hi)
                sel.append((a, var))
            out.append(MinimalPrimeWitness(g, class_tag, e, pivot, tuple(sel)))
    return out


@dataclass(frozen=True)
class VertexSelection:
    """One variable chosen from {x[a,v], x[v,a]} for every neighbor a of v,
    with at least one choice below the diagonal."""

    vertex: int
    selection: tuple[tuple[int, Var], ...]

    @property
    def has_lower_choice(self) -> bool:
        return any(r > c for _, (r, c) in self.selection)


def enumerate_vertex_selections(g: Graph) -> list[VertexSelection]:
    """Per-vertex neighbor selections with a below-diagonal choice; there are
    2^deg(v) - 1 of them at each vertex."""
    out = []
    for v in range(1, g.n + 1):
        nbrs = g.neighbors(v)
        if not nbrs:
            continue
        for bits in range(1 << len(nbrs)):
            sel = []
            for k, a in enumerate(nbrs):
                lo, hi = min(a, v), max(a, v)
                var = (hi, lo) if bits >> k & 1 else (lo, hi)
                sel.append((a, var))
            vs = VertexSelection(v, tuple(sel))
            if vs.has_lower_choice:
                out.append(vs)
    return out


def selection_count_formula(g: Graph) -> int:
    return sum((1 << d) - 1 for d in g.degrees())


# ---------------------------------------------------------------------------
# Divisor class group rank

BELOW_MIN = "belowMin"
AT_MIN = "atMin"
INTERIOR = "interior"
AT_MAX = "atMax"
ABOVE_MAX = "aboveMax"


@dataclass(frozen=True)
class ClassGroupReport:
    n: int
    m: int
    degrees: tuple[int, ...]
    min_y_count: int
    rank: int
    is_connected: bool
    bound_status: str


def class_group_rank(g: Graph) -> ClassGroupReport:
    """Rank of the divisor class group: sum over vertices of (2^deg - 1)
    minus the edge count."""
    degs = g.degrees()
    min_y = sum((1 << d) - 1 for d in degs)
    m = g.m
    rank = min_y - m
    lo, hi = 2 * m - 1, (1 << m) - 1
    if rank < lo:
        status = BELOW_MIN
    elif rank == lo:
        status = AT_MIN
    elif rank == hi:
        status = AT_MAX
    elif rank > hi:
        status = ABOVE_MAX
    else:
        status = INTERIOR
    return ClassGroupReport(g.n, m, degs, min_y, rank, is_connected(g), status)


@dataclass(frozen=True)
class SurveyResult:
    m: int
    rows: tuple[tuple[Graph, ClassGroupReport], ...]
    ranks: tuple[int, ...]

    @property
    def lower(self) -> int:
        return 2 * self.m - 1

    @property
    def upper(self) -> int:
        return (1 << self.m) - 1


def survey(m: int, force: bool = False) -> SurveyResult:
    """Rank of every connected graph with m edges (up to isomorphism), with
    the sharp-bounds and extremal-graph assertions enforced."""
    graphs = enumerate_connected(m, force=force)
    rows = tuple((g, class_group_rank(g)) for g in graphs)
    lo, hi = 2 * m - 1, (1 << m) - 1
    path_key = iso_key(family("path", m))
    star_key = iso_key(family("star", m))
    for g, rep in rows:
        if not lo <= rep.rank <= hi:
            raise VerificationError(f"rank {rep.rank} outside [{lo},{hi}] for {g.render()}")
        key = iso_key(g)
        if (rep.rank == lo) != (key == path_key):
            raise VerificationError(f"lower bound attained off the path: {g.render()}")
        if (rep.rank == hi) != (key == star_key):
            raise VerificationError(f"upper bound attained off the star: {g.render()}")
    ranks = tuple(sorted({rep.rank for _, rep in rows}))
    return SurveyResult(m, rows, ranks)


def find_graph_with_rank(r: int) -> Graph:
    """A graph whose class group rank is exactly r: paths for odd ranks,
    cycles for even ranks >= 6, and small disjoint unions for 2 and 4
    (no connected graph attains those)."""
    if r < 1:
        raise InputError(f"rank must be positive, got {r}")
    if r % 2 == 1:
        g = family("path", (r + 1) // 2)
    elif r == 2:
        g = Graph(4, ((1, 2), (3, 4)))
    elif r == 4:
        g = Graph(5, ((1, 2), (2, 3), (4, 5)))
    else:
        g = family("cycle", r // 2)
    got = class_group_rank(g).rank
    if got != r:
        raise VerificationError(f"constructed graph has rank {got}, wanted {r}")
    return g
