#!/usr/bin/env python3
"""Compare the compiled and pure-Python search kernels on the hot workloads.

Usage: python3 benchmarks/bench_backends.py [--repeat N]

Workloads:
* sharpness: prove the one-below-threshold extremal graph of order 9
  (31 edges) has no diameter-2 orientation,
* petersen: exact oriented diameter of the Petersen graph (levels 2..6),
* naive: brute-force enumeration of all 2^18 orientations of a fixed
  18-edge graph on 7 vertices.
"""

from __future__ import annotations

import argparse
import random
import time

from orient2 import _pysearch
from orient2._backend import ordered_edges
from orient2.graphs import Graph
from orient2.oracle import extremal_graph

try:
    from orient2 import _speedups
except ImportError:
    _speedups = None


def petersen() -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
             (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    return Graph.from_edges(10, edges)


def dense_seven() -> Graph:
    rng = random.Random(18)
    while True:
        edges = [(u, v) for u in range(7) for v in range(u + 1, 7) if rng.random() < 0.9]
        if len(edges) == 18:
            return Graph.from_edges(7, edges)


def bench(label: str, fn, repeat: int) -> float:
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<24} {best * 1000:10.2f} ms   result={result}")
    return best


def workloads(impl):
    g9 = extremal_graph(9)
    e9 = ordered_edges(g9)
    pet = petersen()
    epet = ordered_edges(pet)
    d7 = dense_seven()

    def sharpness():
        status, _, nodes = impl.solve(g9.n, e9, 2, 10**8, None)
        return ("NO" if status == 0 else "?", nodes)

    def petersen_exact():
        for d in range(2, 10):
            status, _, _ = impl.solve(pet.n, epet, d, 10**8, None)
            if status == 1:
                return d
        return None

    def naive():
        return impl.naive_min_diameter(d7.n, d7.edges())

    return [("sharpness n=9 (m=31)", sharpness), ("petersen exact", petersen_exact), ("naive 2^18", naive)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    timings: dict[str, dict[str, float]] = {}
    for name, impl in [("python", _pysearch)] + ([("cython", _speedups)] if _speedups else []):
        print(f"backend: {name}")
        timings[name] = {}
        for label, fn in workloads(impl):
            timings[name][label] = bench(label, fn, args.repeat)
        print()
    if "cython" in timings:
        print("speedups (pure / compiled):")
        for label in timings["python"]:
            ratio = timings["python"][label] / max(timings["cython"][label], 1e-9)
            print(f"  {label:<24} {ratio:8.1f}x")
    else:
        print("compiled backend unavailable; only the pure kernel was timed")


if __name__ == "__main__":
    main()
