"""Graph construction, parsing, subdivision grids and exact metrics."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lexhyp import (Graph, ParseError, QDist, SizeCapError, ValidationError,
                    all_pairs_distances, cycle_graph, complete_graph, diam_g, diam_v,
                    induced_subgraph, is_isometric_embedding, parse_graph, path_graph,
                    star_graph, subdivide, trivial_graph)


# ---------------------------------------------------------------------------
# parsing and validation
# ---------------------------------------------------------------------------

def test_parse_edge_list():
    g = parse_graph("0 1\n1 2")
    assert (g.vertex_count, g.m) == (3, 2)
    assert g == path_graph(3)


def test_parse_comments_and_blanks():
    g = parse_graph("# a triangle\n\n0 1\n 1 2 \n2 0\n")
    assert g == cycle_graph(3)


def test_parse_generators():
    assert parse_graph("cycle:5") == cycle_graph(5)
    assert parse_graph("path:4") == path_graph(4)
    assert parse_graph("complete:4") == complete_graph(4)
    assert parse_graph("trivial") == trivial_graph()
    s = parse_graph("star:3")
    assert (s.vertex_count, s.m) == (4, 3)
    assert diam_v(s) == QDist.from_edges(2)


def test_parse_errors():
    with pytest.raises(ValidationError, match="disconnected"):
        parse_graph("0 1\n2 3")
    with pytest.raises(ValidationError, match="loop"):
        parse_graph("0 0")
    with pytest.raises(ValidationError, match="duplicate"):
        parse_graph("0 1\n1 0")
    with pytest.raises(ParseError):
        parse_graph("0 1 2")
    with pytest.raises(ParseError):
        parse_graph("a b")
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ValidationError):
        parse_graph("cycle:2")


def test_vertex_distances_hand_oracle():
    # C5 distances computed by hand
    g = cycle_graph(5)
    want = np.array([
        [0, 1, 2, 2, 1],
        [1, 0, 1, 2, 2],
        [2, 1, 0, 1, 2],
        [2, 2, 1, 0, 1],
        [1, 2, 2, 1, 0],
    ])
    assert (g.vertex_distances() == want).all()


# ---------------------------------------------------------------------------
# induced subgraphs and isometric embeddings
# ---------------------------------------------------------------------------

def test_induced_subgraph_examples():
    assert induced_subgraph(cycle_graph(4), [0, 1, 2]) == path_graph(3)
    assert induced_subgraph(complete_graph(4), [1, 2, 3]) == complete_graph(3)
    iso = induced_subgraph(cycle_graph(6), [0, 2, 4])
    assert (iso.vertex_count, iso.m) == (3, 0)  # independent set
    with pytest.raises(ValidationError):
        induced_subgraph(cycle_graph(4), [])


def test_isometric_embedding_examples():
    c6 = cycle_graph(6)
    assert is_isometric_embedding(path_graph(3), c6, [0, 1, 2])
    # P4 around C4 shortcuts: endpoints at distance 3 vs 1
    assert not is_isometric_embedding(path_graph(4), cycle_graph(4), [0, 1, 2, 3])
    assert is_isometric_embedding(path_graph(2), c6, [2, 3])
    with pytest.raises(ValidationError, match="injective"):
        is_isometric_embedding(path_graph(2), c6, [1, 1])
    with pytest.raises(ValidationError, match="no image edge"):
        is_isometric_embedding(path_graph(2), c6, [0, 2])


# ---------------------------------------------------------------------------
# subdivision grids
# ---------------------------------------------------------------------------

def test_subdivide_p2_by_4():
    s = subdivide(path_graph(2), 4)
    assert s.grid_n == 5
    assert sum(len(s.neighbors(v)) for v in range(5)) // 2 == 4


def test_subdivide_c3_by_2_is_c6():
    s = subdivide(cycle_graph(3), 2)
    assert s.grid_n == 6
    assert set(s.j_set) == set(range(6))
    assert all(len(s.neighbors(v)) == 2 for v in range(6))


def test_subdivide_c5_distance_scaling():
    s = subdivide(cycle_graph(5), 4)
    m = all_pairs_distances(s)
    assert m.hops[1, 3] == 8
    assert m.distance(1, 3) == QDist.from_edges(2)


def test_grid_size_and_jset_counts():
    g = cycle_graph(5)
    for k in (2, 4, 8):
        s = subdivide(g, k)
        assert s.grid_n == g.vertex_count + (k - 1) * g.m
        assert len(s.j_set) == g.vertex_count + g.m


def test_grid_cap_fails_fast():
    with pytest.raises(SizeCapError):
        subdivide(complete_graph(10), 8, cap=100)


def test_subdivision_restriction_reproduces_vertex_apsp():
    for g in (cycle_graph(6), star_graph(4), complete_graph(4)):
        base = g.vertex_distances()
        for k in (2, 4, 8):
            hops = all_pairs_distances(subdivide(g, k)).hops
            n = g.vertex_count
            assert (hops[:n, :n] == k * base).all()


# ---------------------------------------------------------------------------
# diameters
# ---------------------------------------------------------------------------

def _diam_oracle_s8(g: Graph) -> QDist:
    """Independent oracle: brute-force max over the full S_8 grid."""
    hops = all_pairs_distances(subdivide(g, 8)).hops
    return QDist((4 * int(hops.max())) // 8)


def test_diam_c5():
    g = cycle_graph(5)
    assert diam_v(g) == QDist.from_edges(2)
    assert diam_g(g) == QDist(10) == _diam_oracle_s8(g)  # 5/2


def test_diam_c3():
    g = cycle_graph(3)
    assert diam_g(g) == QDist(6) == _diam_oracle_s8(g)  # 3/2 at vertex-midpoint


def test_diam_k4():
    g = complete_graph(4)
    assert diam_v(g) == QDist.from_edges(1)
    assert diam_g(g) == QDist.from_edges(2) == _diam_oracle_s8(g)


def test_diam_trivial():
    assert diam_g(trivial_graph()) == QDist(0)


# ---------------------------------------------------------------------------
# metric properties over random graphs
# ---------------------------------------------------------------------------

def _random_connected(seed: int, n: int) -> Graph:
    import random
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    extra = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in set(edges)]
    rng.shuffle(extra)
    return Graph(n, edges + sorted(extra[: rng.randint(0, n)]))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 9))
def test_metric_axioms_and_diam_sandwich(seed, n):
    g = _random_connected(seed, n)
    m = all_pairs_distances(subdivide(g, 2))
    h = m.hops
    assert (h == h.T).all()
    assert (np.diag(h) == 0).all()
    assert (h[:, :, None] + h[None, :, :] >= h[:, None, :]).all()
    assert m.diam_v <= m.diam_g <= m.diam_v + QDist.from_edges(1)
    assert m.diam_g.quarters % 2 == 0


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 8))
def test_subdivision_metric_scaling(seed, n):
    g = _random_connected(seed, n)
    base = g.vertex_distances()
    nb = g.vertex_count
    for k in (2, 4):
        hops = all_pairs_distances(subdivide(g, k)).hops
        assert (hops[:nb, :nb] == k * base).all()
