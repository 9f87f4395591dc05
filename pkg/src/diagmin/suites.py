"""Named verification suites behind `diagmin verify` and the acceptance
tests.  Each suite returns Check records in a deterministic order; a failed
check names the offending graph/edge in its detail.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._util import pmap
from .errors import InputError, VerificationError
from .graphs import Graph, enumerate_connected, family, from_edges, standard_relabelings
from .groebner import (
    buchberger,
    initial_ideal,
    monomial_ideal_height,
    normal_form,
    reduce_basis,
    spoly,
)
from .ideals import augment_with_antidiagonal, minor_ideal, witness_ideal
from .monomials import DEGREVLEX, LEX, Monomial
from .oracles import (
    exhaustive_vertex_cover,
    gb_sets_equal,
    reduced_gb_via_oracle,
    twoterm_gb_as_generic,
)
from .polynomials import TwoTermPoly
from .structure import (
    class_group_rank,
    enumerate_vertex_selections,
    find_graph_with_rank,
    lex_gb_classify,
    minimal_primes,
    selection_count_formula,
    survey,
    verify_revlex_gb,
)
from .variety import variety_check

SUITES = ("gb", "minprimes", "variety", "bounds", "oracle")

DEFAULT_MAX_EDGES = {"gb": 5, "minprimes": 5, "oracle": 4, "bounds": 6}


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str


def corpus(max_edges: int, force: bool = False) -> list[Graph]:
    """Connected iso-class representatives with <= max_edges edges plus two
    fixed relabelings each (lex structure depends on the labeling)."""
    out = []
    for m in range(1, max_edges + 1):
        for rep in enumerate_connected(m, force=force):
            out.append(rep)
            out.extend(standard_relabelings(rep))
    return out


def _pin_path2_lex_gb() -> Check:
    g = family("path", 2)
    gb = reduce_basis(buchberger(minor_ideal(g, LEX)))
    expect = {
        TwoTermPoly.difference(
            Monomial.product_of(3, [(1, 1), (2, 2)]),
            Monomial.product_of(3, [(1, 2), (2, 1)]),
            LEX,
        ),
        TwoTermPoly.difference(
            Monomial.product_of(3, [(2, 2), (3, 3)]),
            Monomial.product_of(3, [(2, 3), (3, 2)]),
            LEX,
        ),
        TwoTermPoly.difference(
            Monomial.product_of(3, [(1, 1), (2, 3), (3, 2)]),
            Monomial.product_of(3, [(3, 3), (1, 2), (2, 1)]),
            LEX,
        ),
    }
    ok = set(gb.polys) == expect
    return Check("gb", "lex basis of the 2-edge path is pinned", ok, gb.render_lines().__repr__())


def suite_gb(max_edges: int = 5, force: bool = False) -> list[Check]:
    checks: list[Check] = []
    graphs = corpus(max_edges, force)
    bad_rev = []
    for g in graphs:
        r = verify_revlex_gb(g)
        if not (r.additions == 0 and r.is_reduced_gb and r.height == g.m and r.complete_intersection):
            bad_rev.append(f"{g.render()} -> {r}")
    checks.append(
        Check(
            "gb",
            "degrevlex: generators are already the reduced basis (0 additions, height = edge count)",
            not bad_rev,
            bad_rev[0] if bad_rev else f"{len(graphs)} graphs",
        )
    )
    bad_lex = []
    unclassified = 0
    elements = 0
    for g in graphs:
        cls = lex_gb_classify(g)
        unclassified += cls.unclassified_count
        elements += len(cls.tagged)
        for p, _ in cls.tagged:
            if not (p.is_binom and 2 <= p.degree <= 4 and p.lead.is_squarefree):
                bad_lex.append(f"{g.render()} -> {p.render()}")
    checks.append(
        Check(
            "gb",
            "lex: reduced basis elements are binomials of degree <= 4 with squarefree lead",
            not bad_lex,
            bad_lex[0] if bad_lex else f"{elements} elements over {len(graphs)} graphs",
        )
    )
    checks.append(
        Check(
            "gb",
            "lex: template classification coverage (informational count)",
            True,
            f"{unclassified} of {elements} elements match no template",
        )
    )
    checks.append(_pin_path2_lex_gb())

    bad_post = []
    for g in graphs:
        if g.m > 4:
            continue  # exhaustive pair recheck is quadratic; the small corpus suffices
        for order in (LEX, DEGREVLEX):
            gb = buchberger(minor_ideal(g, order))
            for f, h in itertools.combinations(gb.polys, 2):
                if not normal_form(spoly(f, h, order), gb).is_zero:
                    bad_post.append(f"{g.render()} [{order.value}]")
    checks.append(
        Check(
            "gb",
            "every pair's S-polynomial reduces to zero against the completed basis",
            not bad_post,
            bad_post[0] if bad_post else "exhaustive pair recheck, both orders, <= 4 edges",
        )
    )
    return checks


def suite_oracle(max_edges: int = 4, force: bool = False) -> list[Check]:
    checks: list[Check] = []
    graphs = corpus(max_edges, force)
    bad = []
    for g in graphs:
        for order in (LEX, DEGREVLEX):
            gens = minor_ideal(g, order)
            engine = twoterm_gb_as_generic(reduce_basis(buchberger(gens)))
            oracle = reduced_gb_via_oracle(gens)
            if not gb_sets_equal(engine, oracle):
                bad.append(f"{g.render()} [{order.value}]")
    checks.append(
        Check(
            "oracle",
            "reduced basis equals the rational-coefficient oracle basis (both orders)",
            not bad,
            bad[0] if bad else f"{len(graphs)} graphs x 2 orders",
        )
    )
    bad_h = []
    for g in graphs:
        for order in (LEX, DEGREVLEX):
            mins = initial_ideal(reduce_basis(buchberger(minor_ideal(g, order))))
            fast = monomial_ideal_height(mins)
            slow = exhaustive_vertex_cover([m.support() for m in mins])
            if fast != slow:
                bad_h.append(f"{g.render()} [{order.value}]: {fast} vs {slow}")
    checks.append(
        Check(
            "oracle",
            "initial-ideal height equals the exhaustive vertex-cover oracle",
            not bad_h,
            bad_h[0] if bad_h else f"{len(graphs)} graphs x 2 orders",
        )
    )
    return checks


def suite_minprimes(max_edges: int = 5, force: bool = False) -> list[Check]:
    checks: list[Check] = []
    graphs = corpus(max_edges, force)
    bad_count = []
    bad_height = []
    bad_contain = []
    bad_nest = []
    bad_union = []
    for g in graphs:
        union = set()
        for e in g.edges:
            i, j = e
            wits = minimal_primes(g, e)
            want = (1 << (g.degree(i) - 1)) + (1 << (g.degree(j) - 1))
            if len(wits) != want:
                bad_count.append(f"{g.render()} edge {e}: {len(wits)} != {want}")
            ideals = [witness_ideal(w, DEGREVLEX) for w in wits]
            aug = augment_with_antidiagonal(g, e, DEGREVLEX)
            for w, wi in zip(wits, ideals):
                gb = buchberger(wi)
                if monomial_ideal_height(initial_ideal(gb)) != g.m + 1:
                    bad_height.append(f"{g.render()} {w.render()}")
                if not all(normal_form(p, gb).is_zero for p in aug):
                    bad_contain.append(f"{g.render()} {w.render()}")
            gen_sets = [frozenset(wi.polys) for wi in ideals]
            for a, b in itertools.combinations(gen_sets, 2):
                if a <= b or b <= a:
                    bad_nest.append(f"{g.render()} edge {e}")
            union.update((w.pivot, w.full_selection()) for w in wits)
        sels = {(s.vertex, s.selection) for s in enumerate_vertex_selections(g)}
        if union != sels or len(union) != selection_count_formula(g):
            bad_union.append(g.render())
    checks.append(
        Check(
            "minprimes",
            "witness count per edge is 2^(deg i - 1) + 2^(deg j - 1)",
            not bad_count,
            bad_count[0] if bad_count else f"{len(graphs)} graphs, every edge",
        )
    )
    checks.append(
        Check(
            "minprimes",
            "every witness ideal has height (edge count + 1)",
            not bad_height,
            bad_height[0] if bad_height else "heights via Groebner initial ideals",
        )
    )
    checks.append(
        Check(
            "minprimes",
            "the augmented ideal reduces to zero inside every witness",
            not bad_contain,
            bad_contain[0] if bad_contain else "all normal forms zero",
        )
    )
    checks.append(
        Check(
            "minprimes",
            "witness generator sets are pairwise non-contained",
            not bad_nest,
            bad_nest[0] if bad_nest else "pairwise set comparison",
        )
    )
    checks.append(
        Check(
            "minprimes",
            "per-edge witnesses, deduplicated, match the vertex-selection enumeration",
            not bad_union,
            bad_union[0] if bad_union else "count and content; count = sum of (2^deg - 1)",
        )
    )
    return checks


def _all_labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for r in range(1, len(pairs) + 1):
        for combo in itertools.combinations(pairs, r):
            yield from_edges(n, combo)


def _variety_unit(args):
    g, edge, q = args
    rep = variety_check(g, edge, q)
    return (g.render(), edge, q, rep.equal, rep.lhs_points, rep.rhs_points)


def variety_cases() -> list[tuple[Graph, tuple[int, int], int]]:
    """Every labeled graph with at least one edge: on 2 and 3 vertices over
    F_2 and F_3, on 4 vertices over F_2; one case per edge."""
    cases = []
    for n in (2, 3):
        for g in _all_labeled_graphs(n):
            for q in (2, 3):
                cases.extend((g, e, q) for e in g.edges)
    for g in _all_labeled_graphs(4):
        cases.extend((g, e, 2) for e in g.edges)
    return cases


def suite_variety() -> list[Check]:
    cases = variety_cases()
    results = pmap(_variety_unit, cases)
    groups: dict[tuple[int, int], list] = {}
    for (g, _, q), res in zip(cases, results):
        groups.setdefault((g.n, q), []).append(res)
    checks = []
    for (n, q), rows in sorted(groups.items()):
        bad = [r for r in rows if not r[3]]
        detail = (
            f"failing: {bad[0][0]} edge {bad[0][1]}"
            if bad
            else f"{len(rows)} edge checks, point sets equal"
        )
        checks.append(
            Check(
                "variety",
                f"vanishing set of the augmented ideal equals the witness union (n={n}, q={q})",
                not bad,
                detail,
            )
        )
    return checks


def suite_bounds(max_m: int = 6, force: bool = False) -> list[Check]:
    checks: list[Check] = []
    bad_fam = []
    for m in range(1, 11):
        if class_group_rank(family("path", m)).rank != 2 * m - 1:
            bad_fam.append(f"path {m}")
        if class_group_rank(family("star", m)).rank != (1 << m) - 1:
            bad_fam.append(f"star {m}")
    for m in range(3, 11):
        if class_group_rank(family("cycle", m)).rank != 2 * m:
            bad_fam.append(f"cycle {m}")
    checks.append(
        Check(
            "bounds",
            "family ranks: path 2m-1, star 2^m-1 (m=1..10), cycle 2m (m=3..10)",
            not bad_fam,
            bad_fam[0] if bad_fam else "26 family instances",
        )
    )
    survey_fail = None
    achieved = {}
    for m in range(1, max_m + 1):
        try:
            achieved[m] = survey(m, force=force).ranks
        except VerificationError as exc:
            survey_fail = f"m={m}: {exc}"
            break
    checks.append(
        Check(
            "bounds",
            f"survey m=1..{max_m}: ranks within [2m-1, 2^m-1], extremes only at path/star",
            survey_fail is None,
            survey_fail or ", ".join(f"m={m}: {list(r)}" for m, r in achieved.items()),
        )
    )
    pinned = achieved.get(4)
    checks.append(
        Check(
            "bounds",
            "survey(4) achievable rank set is {7, 8, 9, 10, 15}",
            pinned == (7, 8, 9, 10, 15),
            str(list(pinned)) if pinned else "survey(4) unavailable",
        )
    )
    bad_rank = []
    for r in range(1, 31):
        g = find_graph_with_rank(r)
        if class_group_rank(g).rank != r:
            bad_rank.append(str(r))
    checks.append(
        Check(
            "bounds",
            "find-rank constructions hit every rank 1..30",
            not bad_rank,
            bad_rank[0] if bad_rank else "paths, cycles and two disjoint unions",
        )
    )
    return checks


def run_suites(
    names: list[str],
    max_edges: int | None = None,
    force: bool = False,
) -> list[Check]:
    checks: list[Check] = []
    for name in names:
        if name == "gb":
            checks.extend(suite_gb(max_edges or DEFAULT_MAX_EDGES["gb"], force))
        elif name == "minprimes":
            checks.extend(suite_minprimes(max_edges or DEFAULT_MAX_EDGES["minprimes"], force))
        elif name == "variety":
            checks.extend(suite_variety())
        elif name == "bounds":
            checks.extend(suite_bounds(max_edges or DEFAULT_MAX_EDGES["bounds"], force))
        elif name == "oracle":
            checks.extend(suite_oracle(max_edges or DEFAULT_MAX_EDGES["oracle"], force))
        else:
            raise InputError(f"unknown suite {name!r}")
    return checks
