"""Edge-subdivision grids and exact metric computations.

`subdivide(g, k)` realises the interior points of each edge as a finite grid:
original vertices keep their ids, and each edge gains k-1 equally spaced
points.  Hop counts on the S_k grid are k times the metric distance, so every
quarter-integer quantity of interest is an exact integer here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import SizeCapError, ValidationError
from .graph import Graph, _bfs_apsp
from .qdist import QDist

SUBDIVISION_FACTORS = (2, 4, 8)
DEFAULT_GRID_CAP = 4096


class SubdividedGraph:
    """The S_k subdivision of a base graph, with origin tracking and J(G).

    Grid ids: 0..n-1 are the original vertices; interior points of edge i
    (edges in sorted order) occupy n + i*(k-1) .. n + (i+1)*(k-1) - 1,
    ordered from the smaller endpoint to the larger one.
    """

    __slots__ = ("base", "k", "grid_n", "origin", "j_set", "edge_points",
                 "_neighbors", "_metrics")

    def __init__(self, base: Graph, k: int, cap: int):
        if k not in SUBDIVISION_FACTORS:
            raise ValidationError(f"subdivision factor must be one of {SUBDIVISION_FACTORS}, got {k}")
        n, m = base.vertex_count, base.m
        grid_n = n + (k - 1) * m
        if grid_n > cap:
            raise SizeCapError(f"S_{k} grid needs {grid_n} vertices, cap is {cap}")
        self.base = base
        self.k = k
        self.grid_n = grid_n
        origin = [("v", v) for v in range(n)]
        edge_points = {}
        nbrs = [[] for _ in range(grid_n)]

        def link(a, b):
            nbrs[a].append(b)
            nbrs[b].append(a)

        next_id = n
        for ei, (u, v) in enumerate(base.edges):
            chain = [u]
            for off in range(1, k):
                origin.append(("e", ei, off))
                chain.append(next_id)
                next_id += 1
            chain.append(v)
            for a, b in zip(chain, chain[1:]):
                link(a, b)
            edge_points[(u, v)] = tuple(chain)
        self.origin = tuple(origin)
        self.edge_points = edge_points
        self._neighbors = tuple(tuple(sorted(a)) for a in nbrs)
        half = k // 2
        j = list(range(n)) + [pts[half] for pts in edge_points.values()]
        self.j_set = tuple(sorted(j))
        self._metrics: Optional[GraphMetrics] = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def point_on_edge(self, edge: tuple[int, int], offset: int) -> int:
        """Grid id of the point at `offset`/k along `edge` (from its smaller end)."""
        u, v = edge
        key = (u, v) if u < v else (v, u)
        pts = self.edge_points[key]
        if key != (u, v):
            pts = pts[::-1]
        return pts[offset]

    def midpoint(self, edge: tuple[int, int]) -> int:
        return self.point_on_edge(edge, self.k // 2)

    def metrics(self) -> "GraphMetrics":
        if self._metrics is None:
            self._metrics = all_pairs_distances(self)
        return self._metrics

    def __repr__(self) -> str:
        return f"SubdividedGraph(k={self.k}, grid_n={self.grid_n}, base={self.base!r})"


def subdivide(g: Graph, k: int, cap: int = DEFAULT_GRID_CAP) -> SubdividedGraph:
    """Build S_k(g) for k in {2, 4, 8}; fails fast above the grid-vertex cap."""
    return SubdividedGraph(g, k, cap)


@dataclass
class GraphMetrics:
    """Dense exact metric data for one subdivision grid.

    `hops` is the symmetric hop-count matrix over grid vertices; divide by k
    (via `distance`) for values in edge lengths.
    """

    grid: SubdividedGraph
    hops: np.ndarray
    diam_v: QDist
    diam_g: QDist

    def distance(self, a: int, b: int) -> QDist:
        return QDist.from_hops(int(self.hops[a, b]), self.grid.k)


def all_pairs_distances(s: SubdividedGraph) -> GraphMetrics:
    """BFS from every grid vertex; diameters over vertices and over J(G)."""
    edges = []
    for v in range(s.grid_n):
        for w in s.neighbors(v):
            if v < w:
                edges.append((v, w))
    hops = _bfs_apsp(s.grid_n, edges)
    hops.setflags(write=False)
    n = s.base.vertex_count
    diam_v = QDist.from_hops(int(hops[:n, :n].max()), s.k)
    j = np.asarray(s.j_set)
    diam_g = QDist.from_hops(int(hops[np.ix_(j, j)].max()), s.k)
    return GraphMetrics(grid=s, hops=hops, diam_v=diam_v, diam_g=diam_g)


def diam_v(g: Graph) -> QDist:
    """Diameter over vertices only."""
    return QDist.from_edges(int(g.vertex_distances().max()))


def diam_g(g: Graph) -> QDist:
    """Diameter over all points of the metric graph.

    Point-to-point distance restricted to a pair of edges is a lower envelope
    of linear functions with slopes +-1 and integer offsets; its maximum over
    the two edges is attained with both endpoints at vertices or midpoints,
    so the J(G) x J(G) maximum on the S_2 grid is exact.
    """
    if g.m == 0:
        return QDist(0)
    return subdivide(g, 2).metrics().diam_g
