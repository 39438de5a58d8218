#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Runs BFS + the full cover search on representative instances through both
backends, asserts they return identical answers, and prints the timings.

    python3 benchmarks/bench_core.py [--repeat N]
"""

import argparse
import time

import numpy as np

from functidim._core import get_backend
from functidim.functi import build_functigraph, constant_function, identity_function
from functidim.graphs import complete_graph, cycle_graph, wheel_graph, _csr
from functidim.harness import random_connected_graph
from functidim.resolve import twin_partition

import random


def instances():
    yield "C(C_10, const)", build_functigraph(cycle_graph(10), constant_function(10)).composed
    yield "C(C_14, const)", build_functigraph(cycle_graph(14), constant_function(14)).composed
    yield "C(C_12, id)", build_functigraph(cycle_graph(12), identity_function(12)).composed
    yield "C(K_6, const)", build_functigraph(complete_graph(6), constant_function(6)).composed
    yield "wheel rim 10", wheel_graph(10)
    rng = random.Random(99)
    yield "random n=16", random_connected_graph(16, rng)
    yield "random n=20", random_connected_graph(20, rng)


def solve_with(backend, graph, budget=10_000_000):
    indptr, indices = _csr(graph)
    dist = backend.bfs_all_pairs(graph.order, indptr, indices)
    forced = sorted(
        v for c in twin_partition(graph).classes for v in sorted(c)[1:]
    )
    return backend.min_cover_search(
        np.ascontiguousarray(dist), np.asarray(forced, dtype=np.int32), budget
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    pure = get_backend("pure")
    try:
        compiled = get_backend("cython")
    except ImportError:
        print("compiled backend unavailable; build the extension first")
        return 1

    header = f"{'instance':18} {'dim':>3} {'nodes':>7} {'pure':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, graph in instances():
        results = {}
        timings = {}
        for label, backend in (("pure", pure), ("cython", compiled)):
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[label] = solve_with(backend, graph)
                best = min(best, time.perf_counter() - t0)
            timings[label] = best
        assert results["pure"] == results["cython"], f"backend mismatch on {name}"
        status, dim, _, nodes = results["cython"]
        assert status == 0, f"budget exhausted on {name}"
        speedup = timings["pure"] / timings["cython"]
        print(
            f"{name:18} {dim:>3} {nodes:>7} "
            f"{timings['pure'] * 1e3:>8.2f}ms {timings['cython'] * 1e3:>8.2f}ms {speedup:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
