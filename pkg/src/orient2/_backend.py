"""Kernel backend selection and the shared branching order.

The compiled extension is preferred when importable; ORIENT2_PURE=1
forces the pure-Python kernel.  Both backends implement identical
semantics (same pruning, same propagation, same node counting), so the
choice only affects speed.
"""

from __future__ import annotations

import os

from .graphs import Edge, Graph

if os.environ.get("ORIENT2_PURE") == "1":
    from . import _pysearch as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _pysearch as _impl

        BACKEND = "python"

STATUS_NO = 0
STATUS_YES = 1
STATUS_BUDGET = 2


def backend_name() -> str:
    return BACKEND


def ordered_edges(g: Graph) -> list[Edge]:
    """Branching order: edges around low-degree vertices first.

    Vertices are ranked by (degree, label); each edge is stored with its
    lower-ranked endpoint first and edges are sorted by their endpoint
    ranks.  Both backends and the witness decoding rely on this order.
    """
    rank = {v: i for i, v in enumerate(sorted(range(g.n), key=lambda v: (g.degree(v), v)))}
    oriented = []
    for u, v in g.edges():
        p, q = (u, v) if rank[u] < rank[v] else (v, u)
        oriented.append((p, q))
    oriented.sort(key=lambda e: (rank[e[0]], rank[e[1]]))
    return oriented


def solve_bounded_diameter(
    n: int,
    edges: list[Edge],
    d: int,
    max_nodes: int,
    time_limit: float | None = None,
) -> tuple[int, list[int] | None, int]:
    if n > 62 and BACKEND == "cython":  # compiled rows are single machine words
        from . import _pysearch

        return _pysearch.solve(n, edges, d, max_nodes, time_limit)
    return _impl.solve(n, edges, d, max_nodes, time_limit)


def naive_min_diameter(n: int, edges: list[Edge]) -> int:
    if n > 62 and BACKEND == "cython":
        from . import _pysearch

        return _pysearch.naive_min_diameter(n, edges)
    return _impl.naive_min_diameter(n, edges)
