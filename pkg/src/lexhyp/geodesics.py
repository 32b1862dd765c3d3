"""Shortest-path structure on unit graphs and subdivision grids.

All functions work on a neighbor table plus a precomputed hop matrix, so the
same code serves vertex-level graphs and S_k grids.  Geodesics between two
points form a DAG (the union of all shortest paths); enumeration backtracks
over that DAG in deterministic lexicographic order.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import GeodesicCapError
from .subdivision import SubdividedGraph


def interval(hops: np.ndarray, a: int, b: int) -> np.ndarray:
    """Sorted ids of every vertex lying on some geodesic from a to b."""
    return np.flatnonzero(hops[a] + hops[b] == hops[a, b])


def _topo_interval(neighbors: Sequence[Sequence[int]], hops: np.ndarray,
                   a: int, b: int) -> tuple[np.ndarray, list[list[int]]]:
    """Interval vertices in topological order from a, with predecessor lists."""
    nodes = interval(hops, a, b)
    order = nodes[np.lexsort((nodes, hops[a][nodes]))]
    pos = {int(q): i for i, q in enumerate(order)}
    da, db = hops[a], hops[b]
    preds: list[list[int]] = []
    for q in order:
        q = int(q)
        ps = [w for w in neighbors[q]
              if w in pos and da[w] == da[q] - 1 and db[w] == db[q] + 1]
        preds.append(ps)
    return order, preds


def geodesic_count(neighbors: Sequence[Sequence[int]], hops: np.ndarray,
                   a: int, b: int) -> int:
    """Number of distinct geodesics from a to b (exact, arbitrary precision)."""
    if a == b:
        return 1
    order, preds = _topo_interval(neighbors, hops, a, b)
    pos = {int(q): i for i, q in enumerate(order)}
    count = [0] * len(order)
    count[pos[a]] = 1
    for i, q in enumerate(order):
        if int(q) == a:
            continue
        count[i] = sum(count[pos[w]] for w in preds[i])
    return count[pos[b]]


def enumerate_paths(neighbors: Sequence[Sequence[int]], hops: np.ndarray,
                    a: int, b: int, cap: int) -> list[tuple[int, ...]]:
    """All geodesic vertex sequences a..b, lexicographic by vertex ids.

    Raises GeodesicCapError if the pair has more than `cap` geodesics; the
    count is checked up front so no partial enumeration escapes.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if a == b:
        return [(a,)]
    total = geodesic_count(neighbors, hops, a, b)
    if total > cap:
        raise GeodesicCapError((a, b), cap)
    da, db = hops[a], hops[b]
    target = int(hops[a, b])
    out: list[tuple[int, ...]] = []
    path = [a]

    def extend(q: int, depth: int):
        if depth == target:
            out.append(tuple(path))
            return
        for w in neighbors[q]:
            if da[w] == depth + 1 and db[w] == target - depth - 1:
                path.append(w)
                extend(w, depth + 1)
                path.pop()

    extend(a, 0)
    return out


def enumerate_geodesics(s: SubdividedGraph, a: int, b: int,
                        cap: int = 10**6) -> list[tuple[int, ...]]:
    """All distinct shortest a-b paths on the grid of `s` (deterministic order)."""
    hops = s.metrics().hops
    return enumerate_paths(s._neighbors, hops, a, b, cap)


def farthest_geodesic_profile(neighbors: Sequence[Sequence[int]], hops: np.ndarray,
                              a: int, b: int) -> np.ndarray:
    """For every vertex p: the largest distance from p to any single a-b geodesic.

    d(p, geodesic) is the minimum of hops[p, q] over the path's vertices, so
    this is a maximin (bottleneck) path value over the geodesic DAG, computed
    by one vectorized pass in topological order.
    """
    if a == b:
        return hops[:, a].copy()
    order, preds = _topo_interval(neighbors, hops, a, b)
    pos = {int(q): i for i, q in enumerate(order)}
    w = np.empty((hops.shape[0], len(order)), dtype=hops.dtype)
    w[:, pos[a]] = hops[:, a]
    for i, q in enumerate(order):
        q = int(q)
        if q == a:
            continue
        best = w[:, pos[preds[i][0]]]
        for p2 in preds[i][1:]:
            best = np.maximum(best, w[:, pos[p2]])
        w[:, i] = np.minimum(hops[:, q], best)
    return w[:, pos[b]].copy()
