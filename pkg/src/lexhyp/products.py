"""Lexicographic, Cartesian and strong graph products.

The lexicographic product G1 o G2 joins (u1,v1) and (u2,v2) when [u1,u2] is
an edge of G1, or u1 = u2 and [v1,v2] is an edge of G2.  Its vertex metric
has a closed form in terms of the factor metrics (`lex_distance`), which the
verification suite checks against breadth-first search on the product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeCapError, ValidationError
from .graph import Graph
from .qdist import QDist

LEXICOGRAPHIC = "lexicographic"
CARTESIAN = "cartesian"
STRONG = "strong"
PRODUCT_KINDS = (LEXICOGRAPHIC, CARTESIAN, STRONG)

DEFAULT_PRODUCT_CAP = 4096


@dataclass(frozen=True)
class ProductGraph:
    """A product graph plus its factors and the (u, v) <-> id bijection."""

    graph: Graph
    factor1: Graph
    factor2: Graph
    kind: str

    def vertex_id(self, u: int, v: int) -> int:
        n2 = self.factor2.vertex_count
        if not (0 <= u < self.factor1.vertex_count and 0 <= v < n2):
            raise ValidationError(f"({u},{v}) is not a vertex of the product")
        return u * n2 + v

    def coords(self, vid: int) -> tuple[int, int]:
        n2 = self.factor2.vertex_count
        if not (0 <= vid < self.graph.vertex_count):
            raise ValidationError(f"{vid} is not a product vertex id")
        return divmod(vid, n2)


def product(g1: Graph, g2: Graph, kind: str = LEXICOGRAPHIC,
            cap: int = DEFAULT_PRODUCT_CAP) -> ProductGraph:
    """Materialize the full adjacency of the chosen product of g1 and g2."""
    if kind not in PRODUCT_KINDS:
        raise ValidationError(f"unknown product kind {kind!r}")
    n1, n2 = g1.vertex_count, g2.vertex_count
    if n1 * n2 > cap:
        raise SizeCapError(f"product needs {n1 * n2} vertices, cap is {cap}")

    def vid(u, v):
        return u * n2 + v

    edges = []
    if kind == LEXICOGRAPHIC:
        for u1, u2 in g1.edges:
            for v1 in range(n2):
                for v2 in range(n2):
                    edges.append((vid(u1, v1), vid(u2, v2)))
        for u in range(n1):
            for v1, v2 in g2.edges:
                edges.append((vid(u, v1), vid(u, v2)))
    elif kind == CARTESIAN:
        for u1, u2 in g1.edges:
            for v in range(n2):
                edges.append((vid(u1, v), vid(u2, v)))
        for u in range(n1):
            for v1, v2 in g2.edges:
                edges.append((vid(u, v1), vid(u, v2)))
    else:  # strong = cartesian plus both-coordinate steps
        for u1, u2 in g1.edges:
            for v in range(n2):
                edges.append((vid(u1, v), vid(u2, v)))
            for v1, v2 in g2.edges:
                edges.append((vid(u1, v1), vid(u2, v2)))
                edges.append((vid(u1, v2), vid(u2, v1)))
        for u in range(n1):
            for v1, v2 in g2.edges:
                edges.append((vid(u, v1), vid(u, v2)))
    graph = Graph(n1 * n2, edges)
    return ProductGraph(graph=graph, factor1=g1, factor2=g2, kind=kind)


def lex_distance(g1: Graph, g2: Graph, a: tuple[int, int], b: tuple[int, int]) -> QDist:
    """Closed-form vertex distance in g1 o g2, computed from factor metrics only.

    Requires non-trivial g1; for trivial g1 the product is isomorphic to g2
    and the caller must use g2's own metric.
    """
    if g1.is_trivial():
        raise ValidationError("closed-form lex distance needs a non-trivial first factor")
    u, v = a
    u2, v2 = b
    for (x, y, g) in ((u, u2, g1), (v, v2, g2)):
        if not (0 <= x < g.vertex_count and 0 <= y < g.vertex_count):
            raise ValidationError(f"vertex pair {(x, y)} outside factor range")
    if u == u2:
        d2 = int(g2.vertex_distances()[v, v2])
        return QDist.from_edges(min(2, d2))
    return QDist.from_edges(int(g1.vertex_distances()[u, u2]))


def project(p: ProductGraph, vid: int) -> int:
    """First coordinate of a product vertex."""
    return p.coords(vid)[0]
