"""Exact hyperbolicity constants with witness geodesic triangles.

The sharp constant is computed on the S_4 quarter grid: corner triples range
over J(G) (vertices and edge midpoints), sides over all geodesics between the
corners, and thinness is sampled at grid vertices.  Quarter sampling is
exact: along a side the distance-to-the-other-sides profile is 1-Lipschitz
and piecewise linear, any strict peak between adjacent quarter points has a
value that is not a multiple of 1/4, and the sharp constant is a multiple of
1/4 — so the peak realizing it sits on the quarter lattice.  The S_8
stability check in the verification suite guards the implementation, not the
argument.

Two sweeps cooperate:

* a value sweep that processes corner triples in decreasing order of the
  half-longest-side bound, pruning with corner bounds and closing each
  surviving triple with interval lower bounds and bottleneck ("farthest
  geodesic") profiles — no geodesic enumeration at all;
* a witness sweep that walks triples in lexicographic corner order and
  enumerates geodesic side combinations (restricted to cycle triangles by
  default) until one attains the value.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from threading import Lock
from typing import Optional

import numpy as np

from .errors import GeodesicCapError, ValidationError
from .geodesics import enumerate_paths, farthest_geodesic_profile, geodesic_count, interval
from .graph import Graph
from .qdist import QDist
from .subdivision import DEFAULT_GRID_CAP, SubdividedGraph, subdivide


@dataclass(frozen=True)
class DeltaConfig:
    """Knobs for the exact sweep; defaults match the library contract."""

    geodesic_cap: int = 1_000_000
    cycle_only: bool = True
    grid_factor: int = 4
    parallel: bool = False
    grid_cap: int = DEFAULT_GRID_CAP

    def __post_init__(self):
        if self.geodesic_cap < 1:
            raise ValidationError("geodesic_cap must be >= 1")
        if self.grid_factor not in (4, 8):
            raise ValidationError("grid_factor must be 4 or 8")


@dataclass
class GeodesicTriangle:
    """Three corners in J(G) plus explicit geodesic sides on the grid.

    Sides run x->y, y->z and z->x; `is_cycle` records whether the sides
    pairwise intersect only at their shared corners.
    """

    corners: tuple[int, int, int]
    sides: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    is_cycle: bool


@dataclass
class DeltaStats:
    triples_examined: int = 0
    geodesics_enumerated: int = 0
    wall_time_s: float = 0.0


@dataclass
class DeltaResult:
    value: QDist
    witness: GeodesicTriangle
    witness_point: int
    witness_side: int
    stats: DeltaStats
    grid: SubdividedGraph

    def to_json_dict(self) -> dict:
        """Stable JSON form; volatile wall time is deliberately excluded."""
        return {
            "quarters": self.value.quarters,
            "value": str(self.value),
            "grid_factor": self.grid.k,
            "witness": {
                "corners": list(self.witness.corners),
                "sides": [list(s) for s in self.witness.sides],
                "is_cycle": self.witness.is_cycle,
                "witness_side": self.witness_side,
                "witness_point": self.witness_point,
            },
            "stats": {
                "triples_examined": self.stats.triples_examined,
                "geodesics_enumerated": self.stats.geodesics_enumerated,
            },
        }


def _is_cycle_triangle(fs0: frozenset, fs1: frozenset, fs2: frozenset,
                       x: int, y: int, z: int) -> bool:
    return (fs0 & fs1 == {y}) and (fs1 & fs2 == {z}) and (fs2 & fs0 == {x})


class _Sweep:
    """Shared state for one graph: grid, hop matrix, per-pair caches."""

    def __init__(self, s: SubdividedGraph, cfg: DeltaConfig):
        self.s = s
        self.cfg = cfg
        self.D = s.metrics().hops
        self.j = np.asarray(s.j_set, dtype=np.int64)
        self.nj = len(self.j)
        self.jD = self.D[np.ix_(self.j, self.j)]
        self.nbrs = s._neighbors
        self._ivals: dict[tuple[int, int], np.ndarray] = {}
        self._profiles: dict[tuple[int, int], np.ndarray] = {}
        self._geos: dict[tuple[int, int], tuple] = {}
        self._ceilings: dict[tuple[int, int], np.ndarray] = {}
        self.stats = DeltaStats()
        self._lock = Lock()

    # -- per-pair caches (grid-id keys, smaller id first) -------------------

    def ival(self, a: int, b: int) -> np.ndarray:
        key = (a, b)
        got = self._ivals.get(key)
        if got is None:
            with self._lock:
                got = self._ivals.get(key)
                if got is None:
                    got = interval(self.D, a, b)
                    self._ivals[key] = got
        return got

    def profile(self, a: int, b: int) -> np.ndarray:
        key = (a, b)
        got = self._profiles.get(key)
        if got is None:
            with self._lock:
                got = self._profiles.get(key)
                if got is None:
                    got = farthest_geodesic_profile(self.nbrs, self.D, a, b)
                    self._profiles[key] = got
        return got

    def corner_ceiling(self, a: int, b: int) -> np.ndarray:
        """For every possible third corner c (as a J index): an upper bound on
        the whole triple value of {a, b, c}.

        Every role value is at most max over grid points p of the min distance
        from p to the three corners (sample points lie on geodesics, geodesics
        contain the corners, and widening p's range to the full grid only
        raises the max), and that quantity vectorizes over c.
        """
        key = (a, b)
        got = self._ceilings.get(key)
        if got is None:
            with self._lock:
                got = self._ceilings.get(key)
                if got is None:
                    near = np.minimum(self.D[:, a], self.D[:, b])
                    got = np.minimum(near[:, None], self.D[:, self.j]).max(axis=0)
                    self._ceilings[key] = got
        return got

    def geos(self, a: int, b: int):
        """(paths, arrays, frozensets) for the pair, enumerated a -> b."""
        key = (a, b)
        got = self._geos.get(key)
        if got is None:
            paths = enumerate_paths(self.nbrs, self.D, a, b, self.cfg.geodesic_cap)
            self.stats.geodesics_enumerated += len(paths)
            got = (paths,
                   [np.asarray(p, dtype=np.int64) for p in paths],
                   [frozenset(p) for p in paths])
            self._geos[key] = got
        return got

    # -- per-triple machinery ------------------------------------------------

    def role_exact(self, side: tuple[int, int], o1: tuple[int, int],
                   o2: tuple[int, int]) -> int:
        """Largest thinness any side-geodesic choice can realize for this role."""
        i1 = self.ival(*side)
        p1 = self.profile(*o1)[i1]
        p2 = self.profile(*o2)[i1]
        return int(np.minimum(p1, p2).max())

    def triple_can_reach(self, x: int, y: int, z: int, target: int) -> bool:
        """Whether some geodesic combination of this triple attains `target`."""
        corners = (x, y, z)
        roles = (((x, y), (y, z), (x, z)),
                 ((x, z), (x, y), (y, z)),
                 ((y, z), (x, y), (x, z)))
        for side, o1, o2 in roles:
            i1 = self.ival(*side)
            rb = int(self.D[np.ix_(i1, corners)].min(axis=1).max())
            if rb < target:
                continue
            if self.role_exact(side, o1, o2) >= target:
                return True
        return False

    # -- value sweep ---------------------------------------------------------

    def value_sweep(self) -> int:
        """Max sampled thinness over all corner triples, in grid hops.

        Each (triangle, distinguished side) pair is visited exactly once as a
        (side, third corner) combination: sides are processed in decreasing
        length (a side of length d contributes at most d/2), third corners are
        filtered by the vectorized corner ceiling, and survivors get their
        exact role value from the bottleneck profiles in one batched min/max.
        """
        nj = self.nj
        if nj < 3:
            return 0
        iu = np.triu_indices(nj, 1)
        dvals = self.jD[iu]
        cur = 0
        for d in np.unique(dvals)[::-1].tolist():
            if d // 2 <= cur:
                break
            mask = dvals == d
            pairs = list(zip(iu[0][mask].tolist(), iu[1][mask].tolist()))
            if self.cfg.parallel and len(pairs) > 8:
                cur = self._level_parallel(pairs, cur)
            else:
                for ii, jj in pairs:
                    cur = self._process_side(ii, jj, cur)
                    if d // 2 <= cur:
                        break
        return cur

    def _process_side(self, ii: int, jj: int, cur: int) -> int:
        """Fold all roles distinguished at side (ii, jj) into the running max."""
        a, b = int(self.j[ii]), int(self.j[jj])
        ceil = self.corner_ceiling(a, b).copy()
        ceil[ii] = ceil[jj] = 0  # corners must be distinct
        cs = np.flatnonzero(ceil > cur)
        if cs.size == 0:
            return cur
        self.stats.triples_examined += int(cs.size)
        iv = self.ival(a, b)
        pa = np.empty((cs.size, iv.size), dtype=self.D.dtype)
        pb = np.empty_like(pa)
        for row, cc in enumerate(cs.tolist()):
            c = int(self.j[cc])
            pa[row] = self.profile(min(a, c), max(a, c))[iv]
            pb[row] = self.profile(min(b, c), max(b, c))[iv]
        val = int(np.minimum(pa, pb).max())
        return max(cur, val)

    def _level_parallel(self, pairs, cur: int) -> int:
        """One level with a frozen pruning threshold, split across threads.

        The reduction is a plain max, so the result does not depend on the
        schedule; pruning against the level-start snapshot keeps the examined
        set deterministic as well.
        """
        snapshot = cur
        chunks = [pairs[i::8] for i in range(8)]

        def work(chunk):
            local = snapshot
            for ii, jj in chunk:
                local = self._process_side(ii, jj, local)
            return local

        with ThreadPoolExecutor(max_workers=8) as pool:
            for got in pool.map(work, chunks):
                cur = max(cur, got)
        return cur

    # -- witness sweep ---------------------------------------------------------

    def combo_thinness(self, arrs) -> tuple[int, int, int]:
        """(max thinness, first attaining side, first attaining position)."""
        per_side = []
        for i in range(3):
            union = np.concatenate([arrs[(i + 1) % 3], arrs[(i + 2) % 3]])
            per_side.append(self.D[np.ix_(arrs[i], union)].min(axis=1))
        total = max(int(v.max()) for v in per_side)
        for i, vals in enumerate(per_side):
            hit = np.flatnonzero(vals == total)
            if hit.size:
                return total, i, int(hit[0])
        raise AssertionError("unreachable")

    def _triangle_from(self, x: int, y: int, z: int, s0, s1r, s2r,
                       fs0, fs1, fs2) -> GeodesicTriangle:
        side0 = tuple(int(v) for v in s0)
        side1 = tuple(int(v) for v in s1r)
        side2 = tuple(int(v) for v in reversed(s2r))
        return GeodesicTriangle(
            corners=(x, y, z),
            sides=(side0, side1, side2),
            is_cycle=_is_cycle_triangle(fs0, fs1, fs2, x, y, z),
        )

    def witness_search(self, target: int, cycle_only: bool):
        """First triangle attaining `target`, in lexicographic corner order.

        Returns (triangle, side, position, point) or None.  With cycle_only,
        non-cycle combinations are skipped; a cycle witness always exists for
        a correctly computed positive target because extremal triangles can
        be chosen to be cycles.
        """
        nj = self.nj
        need = 2 * target
        for ii in range(nj):
            row_i = self.jD[ii]
            for jj in range(ii + 1, nj):
                d_ij = int(row_i[jj])
                tail = np.maximum(np.maximum(row_i[jj + 1:], self.jD[jj, jj + 1:]), d_ij)
                hits = np.flatnonzero(tail >= need)
                if hits.size and target > 0:
                    x, y = int(self.j[ii]), int(self.j[jj])
                    ceil = self.corner_ceiling(x, y)[jj + 1:]
                    hits = hits[ceil[hits] >= target]
                for off in hits.tolist():
                    kk = jj + 1 + off
                    x, y, z = int(self.j[ii]), int(self.j[jj]), int(self.j[kk])
                    got = self._witness_in_triple(x, y, z, target, cycle_only)
                    if got is not None:
                        return got
        return None

    def _tight_vertex_point_in_triple(self, x: int, y: int, z: int, target: int,
                                      n_base: int) -> bool:
        """Whether a cycle combination of this triple has a side point that is
        an original vertex at distance exactly `target` from the other sides."""
        if not self.triple_can_reach(x, y, z, target):
            return False
        _, arr_xy, fs_xy = self.geos(x, y)
        _, arr_yz, fs_yz = self.geos(y, z)
        _, arr_xz, fs_xz = self.geos(x, z)
        for a0, f0 in zip(arr_xy, fs_xy):
            for a1, f1 in zip(arr_yz, fs_yz):
                for a2, f2 in zip(arr_xz, fs_xz):
                    if not _is_cycle_triangle(f0, f1, f2, x, y, z):
                        continue
                    arrs = (a0, a1, a2)
                    for i in range(3):
                        union = np.concatenate([arrs[(i + 1) % 3], arrs[(i + 2) % 3]])
                        vals = self.D[np.ix_(arrs[i], union)].min(axis=1)
                        hit = (vals == target) & (arrs[i] < n_base)
                        if hit.any():
                            return True
        return False

    def _witness_in_triple(self, x: int, y: int, z: int, target: int,
                           cycle_only: bool):
        if target > 0 and not self.triple_can_reach(x, y, z, target):
            return None
        self.stats.triples_examined += 1
        _, arr_xy, fs_xy = self.geos(x, y)
        _, arr_yz, fs_yz = self.geos(y, z)
        _, arr_xz, fs_xz = self.geos(x, z)
        for a0, f0 in zip(arr_xy, fs_xy):
            for a1, f1 in zip(arr_yz, fs_yz):
                for a2, f2 in zip(arr_xz, fs_xz):
                    if cycle_only and not _is_cycle_triangle(f0, f1, f2, x, y, z):
                        continue
                    val, side, pos = self.combo_thinness((a0, a1, a2))
                    if val == target:
                        tri = self._triangle_from(x, y, z, a0, a1, a2, f0, f1, f2)
                        point = int((a0, a1, a2)[side][pos])
                        if side == 2:
                            pos = len(a2) - 1 - pos  # side 2 is stored z -> x
                        return tri, side, pos, point
        return None


def _degenerate_result(s: SubdividedGraph, stats: DeltaStats) -> DeltaResult:
    p = int(s.j_set[0])
    tri = GeodesicTriangle(corners=(p, p, p), sides=((p,), (p,), (p,)),
                           is_cycle=_is_cycle_triangle(frozenset((p,)), frozenset((p,)),
                                                       frozenset((p,)), p, p, p))
    return DeltaResult(value=QDist(0), witness=tri, witness_point=p,
                       witness_side=0, stats=stats, grid=s)


def delta_exact(g: Graph, cfg: Optional[DeltaConfig] = None) -> DeltaResult:
    """Sharp hyperbolicity constant of `g`, with a witness triangle.

    The returned value is exact (integer quarter-units); the witness is the
    first attaining triangle in lexicographic (x, y, z, geodesic) order and,
    unless `cfg.cycle_only` is off or the value is 0, a cycle triangle.
    """
    cfg = cfg or DeltaConfig()
    t0 = time.perf_counter()
    s = subdivide(g, cfg.grid_factor, cfg.grid_cap)
    sweep = _Sweep(s, cfg)
    if sweep.nj < 3:
        result = _degenerate_result(s, sweep.stats)
        sweep.stats.wall_time_s = time.perf_counter() - t0
        return result
    hops = sweep.value_sweep()
    value = QDist.from_hops(hops, s.k)
    # delta = 0 admits no cycle triangle (the graph is a tree), so the cycle
    # restriction is waived for the witness there; any triangle attains 0.
    cycle_only = cfg.cycle_only and hops > 0
    try:
        got = sweep.witness_search(hops, cycle_only)
    except GeodesicCapError as e:
        raise GeodesicCapError(e.pair, e.cap, partial_lower_bound=value) from None
    if got is None:
        raise AssertionError(
            f"no {'cycle ' if cycle_only else ''}triangle attains {value}; "
            "this contradicts the extremal-triangle reduction — please report")
    tri, side, pos, point = got
    sweep.stats.wall_time_s = time.perf_counter() - t0
    return DeltaResult(value=value, witness=tri, witness_point=point,
                       witness_side=side, stats=sweep.stats, grid=s)


def delta_bigon_lower_bound(g: Graph, cfg: Optional[DeltaConfig] = None) -> QDist:
    """Max thinness over bigons (pairs of distinct geodesics between J-points).

    Always a lower bound for delta(g); on S_8 grids the hop maximum is
    floored to the nearest quarter, which keeps it a valid bound.
    """
    cfg = cfg or DeltaConfig()
    s = subdivide(g, cfg.grid_factor, cfg.grid_cap)
    sweep = _Sweep(s, cfg)
    nj = sweep.nj
    if nj < 2:
        return QDist(0)
    iu = np.triu_indices(nj, 1)
    dvals = sweep.jD[iu]
    cur = 0
    for d in np.unique(dvals)[::-1].tolist():
        if d // 2 <= cur:
            break
        for ii, jj in zip(iu[0][dvals == d].tolist(), iu[1][dvals == d].tolist()):
            a, b = int(sweep.j[ii]), int(sweep.j[jj])
            if geodesic_count(sweep.nbrs, sweep.D, a, b) < 2:
                continue
            val = int(sweep.profile(a, b)[sweep.ival(a, b)].max())
            if val > cur:
                cur = val
    return QDist((4 * cur) // s.k)


def thinness(s: SubdividedGraph, t: GeodesicTriangle) -> tuple[QDist, int]:
    """Sharp thinness of one triangle on its grid, with the witness point.

    Validates that each side is a geodesic between its endpoints before
    evaluating.
    """
    D = s.metrics().hops
    corners = t.corners
    ends = ((corners[0], corners[1]), (corners[1], corners[2]), (corners[2], corners[0]))
    for side, (a, b) in zip(t.sides, ends):
        if side[0] != a or side[-1] != b:
            raise ValidationError("side endpoints do not match corners")
        if len(side) - 1 != D[a, b]:
            raise ValidationError("side is not a geodesic (wrong length)")
        for u, v in zip(side, side[1:]):
            if v not in s.neighbors(u):
                raise ValidationError("side is not a grid path")
    arrs = [np.asarray(side, dtype=np.int64) for side in t.sides]
    best = -1
    best_point = t.corners[0]
    for i in range(3):
        union = np.concatenate([arrs[(i + 1) % 3], arrs[(i + 2) % 3]])
        vals = D[np.ix_(arrs[i], union)].min(axis=1)
        pos = int(vals.argmax())
        if int(vals[pos]) > best:
            best = int(vals[pos])
            best_point = int(arrs[i][pos])
    return QDist.from_hops(best, s.k), best_point


def has_tight_short_triangle(g: Graph, cfg: Optional[DeltaConfig] = None) -> bool:
    """Whether some cycle triangle with corners in J(G) and all sides of
    length at most 3 realizes thinness 3/2 at a vertex of G.

    The tight point sits 3/2 from both ends of a length-3 side, so requiring
    it to be a vertex forces those two corners to be edge midpoints.  That is
    the configuration the forbidden-family characterization describes (a
    length-3 side between two vertices realizes 3/2 only at an edge midpoint,
    and such triangles occur in graphs outside the family).  The classifier's
    induced-subgraph search must agree with this predicate.
    """
    cfg = cfg or DeltaConfig(grid_factor=4)
    s = subdivide(g, 4, cfg.grid_cap)
    sweep = _Sweep(s, cfg)
    target = 6  # 3/2 in quarter hops
    limit = 12  # sides of length <= 3
    n_base = g.vertex_count
    nj = sweep.nj
    for ii in range(nj):
        row_i = sweep.jD[ii]
        for jj in range(ii + 1, nj):
            if row_i[jj] > limit:
                continue
            d_ij = int(row_i[jj])
            tail_i = row_i[jj + 1:]
            tail_j = sweep.jD[jj, jj + 1:]
            hi = np.maximum(np.maximum(tail_i, tail_j), d_ij)
            ok = (tail_i <= limit) & (tail_j <= limit) & (hi == limit)
            for off in np.flatnonzero(ok).tolist():
                kk = jj + 1 + off
                x, y, z = int(sweep.j[ii]), int(sweep.j[jj]), int(sweep.j[kk])
                if sweep._tight_vertex_point_in_triple(x, y, z, target, n_base):
                    return True
    return False
