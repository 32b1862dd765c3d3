"""Geodesic enumeration: counts, order, caps, bottleneck profiles."""

import numpy as np
import pytest

from lexhyp import GeodesicCapError, complete_graph, cycle_graph, enumerate_geodesics, path_graph, subdivide
from lexhyp.geodesics import enumerate_paths, farthest_geodesic_profile, geodesic_count, interval


def test_c4_opposite_vertices_two_geodesics():
    s = subdivide(cycle_graph(4), 4)
    geos = enumerate_geodesics(s, 0, 2)
    assert len(geos) == 2
    assert all(len(p) == 9 for p in geos)  # 2 edges = 8 hops


def test_tree_unique_geodesic():
    s = subdivide(path_graph(3), 4)
    assert len(enumerate_geodesics(s, 0, 2)) == 1


def test_adjacent_vertices_unique_geodesic_k4():
    s = subdivide(complete_graph(4), 4)
    for a in range(4):
        for b in range(a + 1, 4):
            assert len(enumerate_geodesics(s, a, b)) == 1


def test_lexicographic_order_and_determinism():
    s = subdivide(cycle_graph(4), 2)
    geos = enumerate_geodesics(s, 0, 2)
    assert geos == sorted(geos)
    assert geos == enumerate_geodesics(s, 0, 2)


def test_cap_error_carries_pair():
    s = subdivide(cycle_graph(4), 4)
    with pytest.raises(GeodesicCapError) as err:
        enumerate_geodesics(s, 0, 2, cap=1)
    assert err.value.pair == (0, 2)
    assert err.value.cap == 1


def test_counts_match_enumeration():
    s = subdivide(complete_graph(5), 2)
    hops = s.metrics().hops
    snbrs = [s.neighbors(v) for v in range(s.grid_n)]
    for a in range(s.grid_n):
        for b in range(a + 1, s.grid_n):
            n_paths = geodesic_count(snbrs, hops, a, b)
            assert n_paths == len(enumerate_paths(snbrs, hops, a, b, cap=10_000))


def test_interval_is_union_of_geodesics():
    s = subdivide(cycle_graph(6), 2)
    hops = s.metrics().hops
    nbrs = [s.neighbors(v) for v in range(s.grid_n)]
    a, b = 0, 3  # antipodal on C6: both arcs are geodesics
    iv = set(interval(hops, a, b).tolist())
    union = set()
    for p in enumerate_paths(nbrs, hops, a, b, cap=100):
        union |= set(p)
    assert iv == union


def test_farthest_geodesic_profile_against_enumeration():
    s = subdivide(cycle_graph(5), 4)
    hops = s.metrics().hops
    nbrs = [s.neighbors(v) for v in range(s.grid_n)]
    for a, b in [(0, 2), (1, 3), (0, 1)]:
        prof = farthest_geodesic_profile(nbrs, hops, a, b)
        paths = [np.asarray(p) for p in enumerate_paths(nbrs, hops, a, b, cap=1000)]
        for p in range(s.grid_n):
            want = max(int(hops[p, path].min()) for path in paths)
            assert prof[p] == want
