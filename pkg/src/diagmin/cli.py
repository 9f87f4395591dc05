"""Command-line front end.

Subcommands: analyze, rank, min-primes, survey, verify, find-rank.
Graph sources are edge-list files or family specs like path:4.  Exit codes:
0 success, 1 failed verification, 2 input error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__, reports
from .errors import InputError, ResourceGuardError, VerificationError
from .graphs import load_graph
from .groebner import buchberger, initial_ideal, monomial_ideal_height, reduce_basis
from .ideals import minor_ideal, witness_ideal
from .monomials import DEGREVLEX, MonomialOrder
from .reports import dumps
from .structure import class_group_rank, find_graph_with_rank, lex_gb_classify, minimal_primes, survey
from .suites import DEFAULT_MAX_EDGES, SUITES, run_suites


def _parse_edge(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"--edge expects i,j, got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"--edge expects integers, got {text!r}") from None
    return (min(a, b), max(a, b))


def _emit(args, doc: dict, human: list[str]) -> None:
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        for line in human:
            print(line)


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    order = MonomialOrder.parse(args.order)
    t0 = time.monotonic()
    gens = minor_ideal(g, order)
    gb = reduce_basis(buchberger(gens))
    mins = initial_ideal(gb)
    height = monomial_ideal_height(mins)
    histogram: dict[str, int] = {}
    for p in gb:
        histogram[str(p.degree)] = histogram.get(str(p.degree), 0) + 1
    results = {
        "order": order.value,
        "generators": reports.basis_json(gens),
        "reducedBasis": reports.basis_json(gb),
        "initialIdeal": [reports.mono_json(m) for m in mins],
        "height": height,
        "degreeHistogram": histogram,
    }
    if order.value == "lex":
        results["classification"] = reports.classification_json(lex_gb_classify(g))
    timings = {"seconds": round(time.monotonic() - t0, 3)} if args.timings else None
    human = [f"graph: {g.render()}", f"order: {order.value}", f"generators ({len(gens)}):"]
    human += [f"  {line}" for line in gens.render_lines()]
    human.append(f"reduced groebner basis ({len(gb)}):")
    human += [f"  {line}" for line in gb.render_lines()]
    human.append(f"initial ideal ({len(mins)}):")
    human += [f"  {m.render()}" for m in mins]
    human.append(f"height: {height}")
    human.append(
        "degree histogram: "
        + ", ".join(f"{d}: {c}" for d, c in sorted(histogram.items()))
    )
    _emit(args, reports.document("analyze", g, results, timings), human)
    return 0


def cmd_rank(args) -> int:
    g = load_graph(args.graph)
    rep = class_group_rank(g)
    human = [
        f"graph: {g.render()}",
        f"degrees: {list(rep.degrees)}",
        f"minimal primes of the anti-diagonal product: {rep.min_y_count}",
        f"class group rank: {rep.rank}",
        f"connected: {rep.is_connected}",
        f"bound status: {rep.bound_status}",
    ]
    _emit(args, reports.document("rank", g, reports.class_group_json(rep)), human)
    return 0


def cmd_min_primes(args) -> int:
    g = load_graph(args.graph)
    edge = _parse_edge(args.edge)
    wits = minimal_primes(g, edge)
    results = {"edge": list(edge), "count": len(wits), "witnesses": []}
    human = [f"graph: {g.render()}", f"edge: {edge}", f"witnesses: {len(wits)}"]
    for w in wits:
        wi = witness_ideal(w, DEGREVLEX)
        height = monomial_ideal_height(initial_ideal(buchberger(wi)))
        results["witnesses"].append(
            {
                "class": w.class_tag,
                "pivot": w.pivot,
                "selection": [
                    {"neighbor": a, "var": [r, c]} for a, (r, c) in w.selection
                ],
                "generators": reports.basis_json(wi),
                "height": height,
            }
        )
        human.append(f"  {w.render()} height={height}")
        human += [f"    {line}" for line in wi.render_lines()]
    _emit(args, reports.document("min-primes", g, results), human)
    return 0


def cmd_survey(args) -> int:
    res = survey(args.edges, force=args.force)
    human = [
        f"connected graphs with {res.m} edges: {len(res.rows)} classes",
        f"rank bounds: [{res.lower}, {res.upper}]",
    ]
    for g, rep in res.rows:
        human.append(f"  rank {rep.rank:3d}  [{rep.bound_status:8s}]  {g.render()}")
    human.append(f"achievable ranks: {list(res.ranks)}")
    _emit(args, reports.document("survey", None, reports.survey_json(res)), human)
    return 0


def cmd_find_rank(args) -> int:
    g = find_graph_with_rank(args.rank)
    rep = class_group_rank(g)
    results = {"rank": args.rank, "graph": reports.graph_json(g), "verifiedRank": rep.rank}
    human = [f"rank {args.rank}: {g.render()}", f"verified rank: {rep.rank}"]
    _emit(args, reports.document("find-rank", g, results), human)
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    t0 = time.monotonic()
    checks = run_suites(names, max_edges=args.max_edges, force=args.force)
    failed = [c for c in checks if not c.passed]
    results = {
        "suites": names,
        "maxEdges": args.max_edges or {n: DEFAULT_MAX_EDGES.get(n) for n in names},
        "checks": reports.checks_json(checks),
        "passed": len(checks) - len(failed),
        "failed": len(failed),
    }
    timings = {"seconds": round(time.monotonic() - t0, 3)} if args.timings else None
    human = []
    for c in checks:
        mark = "PASS" if c.passed else "FAIL"
        human.append(f"[{mark}] {c.suite}: {c.name} ({c.detail})")
    human.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    _emit(args, reports.document("verify", None, results, timings), human)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagmin",
        description="Diagonal 2-minor ideals of graphs: Groebner bases, minimal primes, class group ranks.",
    )
    parser.add_argument("--version", action="version", version=f"diagmin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--timings", action="store_true", help="include timings in JSON output")

    p = sub.add_parser("analyze", help="generators, reduced basis, initial ideal, height")
    p.add_argument("--graph", required=True, help="edge-list file or family spec (path:4)")
    p.add_argument("--order", default="degrevlex", help="lex or degrevlex (default)")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rank", help="divisor class group rank and bound status")
    p.add_argument("--graph", required=True)
    add_common(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("min-primes", help="minimal-prime witnesses over one edge")
    p.add_argument("--graph", required=True)
    p.add_argument("--edge", required=True, help="edge as i,j")
    add_common(p)
    p.set_defaults(func=cmd_min_primes)

    p = sub.add_parser("survey", help="ranks of all connected graphs with m edges")
    p.add_argument("--edges", type=int, required=True, metavar="M")
    p.add_argument("--force", action="store_true", help="override the enumeration guard")
    add_common(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--force", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("find-rank", help="construct a graph with a given class group rank")
    p.add_argument("--rank", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_find_rank)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
