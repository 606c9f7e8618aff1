import random

import pytest

from orient2.graphs import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def petersen() -> Graph:
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    return Graph.from_edges(10, outer + inner + spokes)


def dumbbell(k: int, l: int) -> Graph:
    """Two complete graphs joined by one edge; vertices 0..k-1 and k..k+l-1."""
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(k + u, k + v) for u in range(l) for v in range(u + 1, l)]
    edges.append((0, k))
    return Graph.from_edges(k + l, edges)


def short_dumbbell(k: int, l: int) -> Graph:
    """Two complete graphs sharing vertex 0; k + l - 1 vertices."""
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    second = [0] + list(range(k, k + l - 1))
    edges += [(second[u], second[v]) for u in range(l) for v in range(u + 1, l)]
    return Graph.from_edges(k + l - 1, edges)


def paths_union(sizes: list[int], n: int | None = None) -> Graph:
    """Disjoint paths of the given orders, laid out consecutively."""
    total = sum(sizes)
    if n is None:
        n = total
    edges = []
    start = 0
    for size in sizes:
        edges.extend((v, v + 1) for v in range(start, start + size - 1))
        start += size
    return Graph.from_edges(n, edges)


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    """Rejection-sample a connected G(n, p)."""
    from orient2.graphs import is_connected

    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


@pytest.fixture(scope="session")
def theorem_reports():
    """Shared full verification sweep for the acceptance criteria."""
    from orient2.oracle import verify_theorem

    return {n: verify_theorem(n) for n in range(5, 11)}
