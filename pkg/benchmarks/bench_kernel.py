"""Compare the pure-Python and compiled kernels on the hot paths.

Run:  python3 benchmarks/bench_kernel.py [--repeat N]

Covers the monomial primitives (microbenchmark), full lex Groebner runs
over the small-graph corpus, the finite-field vanishing-set comparison on
the worst 4-vertex case, and canonical labeling over the 6-edge
enumeration workload.
"""

from __future__ import annotations

import argparse
import random
import time

from diagmin import kernel
from diagmin.graphs import enumerate_connected, family, from_edges
from diagmin.groebner import buchberger, reduce_basis
from diagmin.ideals import minor_ideal
from diagmin.monomials import LEX
from diagmin.variety import variety_check


def random_mono(rng: random.Random, n: int = 6, max_vars: int = 4) -> tuple:
    positions = sorted(rng.sample(range(n * n), rng.randint(1, max_vars)))
    out = []
    for p in positions:
        out.append(p)
        out.append(rng.randint(1, 2))
    return tuple(out)


def bench_mono_ops() -> float:
    rng = random.Random(20240)
    monos = [random_mono(rng) for _ in range(400)]
    t0 = time.perf_counter()
    for _ in range(12):
        for a in monos[::4]:
            for b in monos[::4]:
                kernel.mono_mul(a, b)
                kernel.mono_lcm(a, b)
                kernel.mono_divides(a, b)
                kernel.mono_coprime(a, b)
                kernel.cmp_lex(a, b)
                kernel.cmp_degrevlex(a, b)
    return time.perf_counter() - t0


def bench_groebner() -> float:
    graphs = [g for m in range(1, 6) for g in enumerate_connected(m)]
    t0 = time.perf_counter()
    for g in graphs:
        reduce_basis(buchberger(minor_ideal(g, LEX)))
    return time.perf_counter() - t0


def bench_variety() -> float:
    g = family("complete", 4)
    t0 = time.perf_counter()
    for edge in g.edges:
        variety_check(g, edge, 2)
    return time.perf_counter() - t0


def bench_canonical() -> float:
    t0 = time.perf_counter()
    enumerate_connected.cache_clear()
    enumerate_connected(6)
    return time.perf_counter() - t0


BENCHES = [
    ("monomial primitives", bench_mono_ops),
    ("lex groebner, corpus <= 5 edges", bench_groebner),
    ("variety compare, K4 over F_2", bench_variety),
    ("canonical labeling, 6-edge enumeration", bench_canonical),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args()

    impls = kernel.available()
    if "c" not in impls:
        print("compiled kernel unavailable; showing pure timings only")
    results: dict[str, dict[str, float]] = {}
    for impl in impls:
        kernel.set_implementation(impl)
        enumerate_connected.cache_clear()
        for name, fn in BENCHES:
            best = min(fn() for _ in range(args.repeat))
            results.setdefault(name, {})[impl] = best
    kernel.set_implementation("auto")

    width = max(len(name) for name, _ in BENCHES)
    header = f"{'benchmark':{width}}  " + "".join(f"{impl:>12}" for impl in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, _ in BENCHES:
        row = f"{name:{width}}  "
        for impl in impls:
            row += f"{results[name][impl] * 1e3:>10.1f}ms"
        if len(impls) == 2:
            row += f"{results[name]['python'] / results[name]['c']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
