"""Verification suite: every computable claim as a falsifiable check.

Each check compares two independently computed quantities (closed form vs
breadth-first search, table vs exact engine, ...) or a computed quantity
against a fixed constant, over a deterministic corpus.  A failing check never
aborts the run; failures become replayable report entries.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .catalog import get_catalog, in_family_F
from .corpus import Corpus, CorpusSpec, generate_corpus
from .delta import DeltaConfig, delta_bigon_lower_bound, delta_exact, has_tight_short_triangle, thinness
from .errors import LexhypError
from .geodesics import enumerate_paths
from .graph import Graph, complete_graph, cycle_graph, induced_subgraph, is_isometric_embedding, path_graph
from .products import LEXICOGRAPHIC, ProductGraph, lex_distance, product
from .qdist import FIVE_FOURTHS, ONE, THREE_HALVES, QDist
from .subdivision import diam_g, diam_v, subdivide
from .treeformula import bound_check, tree_lex_delta


@dataclass
class CheckResult:
    check_id: str
    status: str  # "pass" | "fail"
    instances: int
    failures: list
    millis: int


@dataclass
class SuiteReport:
    results: dict[str, CheckResult]

    @property
    def all_pass(self) -> bool:
        return all(r.status == "pass" for r in self.results.values())

    def to_json_dict(self) -> dict:
        return {
            cid: {
                "status": r.status,
                "instances": r.instances,
                "failures": r.failures,
                "millis": r.millis,
            }
            for cid, r in sorted(self.results.items())
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


class SuiteContext:
    """Shared memoization across checks (exact deltas are the hot item)."""

    def __init__(self, product_cap: int):
        self.product_cap = product_cap
        self._delta: dict[Graph, QDist] = {}
        self._products: dict[tuple[Graph, Graph], ProductGraph] = {}
        self.catalog = get_catalog()

    def delta(self, g: Graph) -> QDist:
        if g not in self._delta:
            self._delta[g] = delta_exact(g).value
        return self._delta[g]

    def lex(self, g1: Graph, g2: Graph) -> ProductGraph:
        key = (g1, g2)
        if key not in self._products:
            self._products[key] = product(g1, g2, LEXICOGRAPHIC)
        return self._products[key]

    def delta_pairs(self, corpus: Corpus):
        """Pairs whose lexicographic product fits the engine budget."""
        for g1, g2 in corpus.pairs:
            if g1.vertex_count * g2.vertex_count <= self.product_cap:
                yield g1, g2


CHECKS: dict[str, Callable] = {}


def _register(check_id: str):
    def deco(fn):
        CHECKS[check_id] = fn
        return fn
    return deco


def _fail(failures, inputs, expected, actual):
    failures.append({"inputs": inputs, "expected": str(expected), "actual": str(actual)})


def _pair_tag(g1: Graph, g2: Graph) -> str:
    return f"G1(n={g1.vertex_count},m={g1.m}) o G2(n={g2.vertex_count},m={g2.m})"


# ---------------------------------------------------------------------------
# Product structure checks
# ---------------------------------------------------------------------------

@_register("dist_formula")
def _check_dist_formula(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g1, g2 in corpus.pairs:
        if g1.is_trivial() or g1.vertex_count * g2.vertex_count > 400:
            continue
        p = ctx.lex(g1, g2)
        dist = p.graph.vertex_distances()
        n = p.graph.vertex_count
        for a in range(n):
            ua, va = p.coords(a)
            for b in range(a + 1, n):
                ub, vb = p.coords(b)
                closed = lex_distance(g1, g2, (ua, va), (ub, vb))
                bfs = QDist.from_edges(int(dist[a, b]))
                if closed != bfs:
                    _fail(failures, {"pair": _pair_tag(g1, g2), "a": (ua, va), "b": (ub, vb)},
                          bfs, closed)
        instances += 1
    return instances, failures


@_register("edge_containment")
def _check_edge_containment(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g1, g2 in corpus.pairs:
        if g1.vertex_count * g2.vertex_count > 400:
            continue
        cart = set(product(g1, g2, "cartesian").graph.edges)
        strong = set(product(g1, g2, "strong").graph.edges)
        lex = set(ctx.lex(g1, g2).graph.edges)
        if not (cart <= strong and strong <= lex):
            _fail(failures, {"pair": _pair_tag(g1, g2)},
                  "E(cartesian) <= E(strong) <= E(lexicographic)",
                  f"|cart\\strong|={len(cart - strong)}, |strong\\lex|={len(strong - lex)}")
        instances += 1
    return instances, failures


@_register("copy_isometry")
def _check_copy_isometry(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g1, g2 in corpus.pairs:
        if g1.vertex_count * g2.vertex_count > 400:
            continue
        p = ctx.lex(g1, g2)
        for w in range(g2.vertex_count):
            emb = [p.vertex_id(u, w) for u in range(g1.vertex_count)]
            if not is_isometric_embedding(g1, p.graph, emb):
                _fail(failures, {"pair": _pair_tag(g1, g2), "w": w},
                      "copy G1 o {w} isometric", "distance mismatch")
            instances += 1
    return instances, failures


@_register("neighborhood_3_2")
def _check_neighborhood(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g1, g2 in corpus.pairs:
        if g1.is_trivial():
            continue
        p = ctx.lex(g1, g2)
        g = p.graph
        if g.vertex_count + 3 * g.m > 2000:
            continue
        s = subdivide(g, 4)
        hops = s.metrics().hops
        copy_edges = set(g1.edges)
        for w in range(g2.vertex_count):
            members = [p.vertex_id(u, w) for u in range(g1.vertex_count)]
            for u1, u2 in copy_edges:
                a, b = p.vertex_id(u1, w), p.vertex_id(u2, w)
                members.extend(s.edge_points[(min(a, b), max(a, b))])
            worst = int(hops[:, sorted(set(members))].min(axis=1).max())
            if worst > 6:
                _fail(failures, {"pair": _pair_tag(g1, g2), "w": w},
                      "every point within 3/2 of the copy", f"{worst}/4")
            instances += 1
    return instances, failures


def _j_points_of_copy(p: ProductGraph, s, g2, x0: int):
    """Grid ids in the product S_4 grid for J(G2) lifted into copy x0."""
    pts = {}
    for v in range(g2.vertex_count):
        pts[("v", v)] = p.vertex_id(x0, v)
    for (a, b) in g2.edges:
        pa, pb = p.vertex_id(x0, a), p.vertex_id(x0, b)
        pts[("m", (a, b))] = s.midpoint((pa, pb))
    return pts


@_register("geodesic_copy_5_2")
def _check_geodesic_copy(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g1, g2 in corpus.pairs:
        if g1.is_trivial():
            continue
        p = ctx.lex(g1, g2)
        if p.graph.vertex_count + 3 * p.graph.m > 2000:
            continue
        s = subdivide(p.graph, 4)
        hops = s.metrics().hops
        s2 = subdivide(g2, 4) if g2.m else None
        h2 = s2.metrics().hops if s2 else None
        for x0 in range(g1.vertex_count):
            pts = _j_points_of_copy(p, s, g2, x0)
            if s2 is None:
                continue
            keys = sorted(pts, key=str)
            for i, k1 in enumerate(keys):
                for k2 in keys[i + 1:]:
                    a2 = k1[1] if k1[0] == "v" else s2.midpoint(k1[1])
                    b2 = k2[1] if k2[0] == "v" else s2.midpoint(k2[1])
                    d2 = int(h2[a2, b2])
                    dprod = int(hops[pts[k1], pts[k2]])
                    both_mid = k1[0] == "m" and k2[0] == "m"
                    if d2 <= 10 or (both_mid and d2 == 12):
                        instances += 1
                        if dprod != d2:
                            _fail(failures, {"pair": _pair_tag(g1, g2), "x0": x0,
                                             "y1": k1, "y2": k2},
                                  f"{d2}/4", f"{dprod}/4")
    return instances, failures


@_register("geodesic_copy_gt3")
def _check_geodesic_copy_far(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g1, g2 in corpus.pairs:
        if g1.is_trivial():
            continue
        p = ctx.lex(g1, g2)
        if p.graph.vertex_count + 3 * p.graph.m > 2000:
            continue
        s = subdivide(p.graph, 4)
        hops = s.metrics().hops
        s2 = subdivide(g2, 4) if g2.m else None
        if s2 is None:
            continue
        h2 = s2.metrics().hops
        for x0 in range(g1.vertex_count):
            pts = _j_points_of_copy(p, s, g2, x0)
            keys = sorted(pts, key=str)
            for i, k1 in enumerate(keys):
                for k2 in keys[i + 1:]:
                    a2 = k1[1] if k1[0] == "v" else s2.midpoint(k1[1])
                    b2 = k2[1] if k2[0] == "v" else s2.midpoint(k2[1])
                    d2 = int(h2[a2, b2])
                    if d2 > 12:
                        instances += 1
                        dprod = int(hops[pts[k1], pts[k2]])
                        if not dprod < d2:
                            _fail(failures, {"pair": _pair_tag(g1, g2), "x0": x0,
                                             "y1": k1, "y2": k2},
                                  f"< {d2}/4", f"{dprod}/4")
    return instances, failures


@_register("projection_geodesic")
def _check_projection(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g1, g2 in corpus.pairs:
        if g1.is_trivial() or g1.vertex_count * g2.vertex_count > 400:
            continue
        p = ctx.lex(g1, g2)
        g = p.graph
        dist = g.vertex_distances()
        d1 = g1.vertex_distances()
        far = np.argwhere(dist > 3)
        nbrs = [g.neighbors(v) for v in range(g.vertex_count)]
        for a, b in far[: 40].tolist():
            if a >= b:
                continue
            try:
                paths = enumerate_paths(nbrs, dist, a, b, cap=20000)
            except LexhypError:
                continue
            for path in paths:
                coords = [p.coords(v) for v in path]
                firsts = [c[0] for c in coords]
                intra = any(u1 == u2 for u1, u2 in zip(firsts, firsts[1:]))
                collapsed = [firsts[0]]
                for u in firsts[1:]:
                    if u != collapsed[-1]:
                        collapsed.append(u)
                is_geo = (len(collapsed) - 1 == d1[firsts[0], firsts[-1]]
                          and all(g1.has_edge(u, v) for u, v in zip(collapsed, collapsed[1:])))
                instances += 1
                if intra or not is_geo or len(set(firsts)) < 3:
                    _fail(failures, {"pair": _pair_tag(g1, g2), "path": list(path)},
                          "projection geodesic, no intra-copy edge, >= 3 vertices",
                          f"intra={intra}, geodesic={is_geo}")
    return instances, failures


def _isometric_subgraphs(g: Graph, rng_seed: int, want: int):
    """A few connected induced subgraphs of g that embed isometrically."""
    import random as _random
    rng = _random.Random(rng_seed)
    out = []
    dist = g.vertex_distances()
    tries = 0
    while len(out) < want and tries < 30:
        tries += 1
        size = rng.randint(1, g.vertex_count)
        root = rng.randrange(g.vertex_count)
        verts = sorted(v for v in range(g.vertex_count) if dist[root, v] <= 1 + size // 2)[:size]
        if not verts:
            continue
        sub = induced_subgraph(g, verts)
        if not sub.is_connected():
            continue
        try:
            if is_isometric_embedding(sub, g, verts):
                out.append((sub, verts))
        except LexhypError:
            continue
    return out


@_register("isometric_subproduct")
def _check_isometric_subproduct(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for idx, (g1, g2) in enumerate(corpus.pairs):
        if g1.is_trivial() or g1.vertex_count * g2.vertex_count > 200:
            continue
        p = ctx.lex(g1, g2)
        subs1 = [(s, v) for s, v in _isometric_subgraphs(g1, 1000 + idx, 2) if not s.is_trivial()]
        subs2 = _isometric_subgraphs(g2, 2000 + idx, 2)
        for s1, v1 in subs1:
            for s2, v2 in subs2:
                small = product(s1, s2, LEXICOGRAPHIC)
                emb = [p.vertex_id(v1[u], v2[v])
                       for u in range(s1.vertex_count) for v in range(s2.vertex_count)]
                assert [small.vertex_id(u, v) for u in range(s1.vertex_count)
                        for v in range(s2.vertex_count)] == list(range(small.graph.vertex_count))
                instances += 1
                if not is_isometric_embedding(small.graph, p.graph, emb):
                    _fail(failures, {"pair": _pair_tag(g1, g2), "v1": v1, "v2": v2},
                          "sub-product isometric", "distance mismatch")
    return instances, failures


# ---------------------------------------------------------------------------
# Bound checks (exact engine on capped pairs)
# ---------------------------------------------------------------------------

def _bound_entries(corpus: Corpus, ctx: SuiteContext, names: tuple[str, ...]):
    instances, failures = 0, []
    for g1, g2 in ctx.delta_pairs(corpus):
        if g1.is_trivial():
            continue
        report = bound_check(g1, g2, ctx.delta(ctx.lex(g1, g2).graph), ctx.delta(g1))
        hit = [e for e in report.entries if e.name in names]
        for e in hit:
            instances += 1
            if not e.ok:
                _fail(failures, {"pair": _pair_tag(g1, g2), "bound": e.name},
                      "bound holds", e.detail)
    return instances, failures


@_register("sandwich_bounds")
def _check_sandwich(corpus, ctx):
    return _bound_entries(corpus, ctx, ("sandwich_lower", "sandwich_upper"))


@_register("lower_bound_1")
def _check_lb1(corpus, ctx):
    return _bound_entries(corpus, ctx, ("both_nontrivial_ge_1",))


@_register("lower_bound_5_4_diamV2")
def _check_lb54v(corpus, ctx):
    return _bound_entries(corpus, ctx, ("diam_v_g1_2_ge_5_4",))


@_register("lower_bound_3_2_diamV3")
def _check_lb32(corpus, ctx):
    return _bound_entries(corpus, ctx, ("diam_v_g1_ge_3_ge_3_2",))


@_register("lower_bound_5_4_diamG2")
def _check_lb54g2(corpus, ctx):
    return _bound_entries(corpus, ctx, ("diam_g2_gt_2_ge_5_4",))


@_register("upper_bound_tightness")
def _check_tightness(corpus: Corpus, ctx: SuiteContext):
    # contrapositive: a non-tree first factor keeps the product strictly
    # below delta(G1) + 3/2
    instances, failures = 0, []
    for g1, g2 in ctx.delta_pairs(corpus):
        if g1.is_trivial() or g1.is_tree():
            continue
        dprod = ctx.delta(ctx.lex(g1, g2).graph)
        dg1 = ctx.delta(g1)
        instances += 1
        if not dprod < dg1 + THREE_HALVES:
            _fail(failures, {"pair": _pair_tag(g1, g2)},
                  f"< {dg1 + THREE_HALVES}", dprod)
    return instances, failures


# ---------------------------------------------------------------------------
# Engine self-consistency on singles
# ---------------------------------------------------------------------------

def _delta_subjects(corpus: Corpus, ctx: SuiteContext):
    seen = set()
    for g in corpus.graphs:
        if g not in seen:
            seen.add(g)
            yield g
    for g1, g2 in ctx.delta_pairs(corpus):
        p = ctx.lex(g1, g2).graph
        if p not in seen:
            seen.add(p)
            yield p


@_register("quarter_multiple")
def _check_quarter(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in _delta_subjects(corpus, ctx):
        val = ctx.delta(g)
        instances += 1
        if (4 * val.as_fraction).denominator != 1:
            _fail(failures, {"graph": repr(g)}, "multiple of 1/4", val)
    return instances, failures


@_register("delta_diam_half")
def _check_diam_half(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in _delta_subjects(corpus, ctx):
        val = ctx.delta(g)
        bound = diam_g(g)
        instances += 1
        if 2 * val.quarters > bound.quarters:
            _fail(failures, {"graph": repr(g)}, f"delta <= {bound}/2", val)
    return instances, failures


@_register("witness_validity")
def _check_witness(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in corpus.graphs:
        res = delta_exact(g)
        re_val, _ = thinness(res.grid, res.witness)
        instances += 1
        if re_val != res.value:
            _fail(failures, {"graph": repr(g)}, res.value, re_val)
    return instances, failures


@_register("tree_delta_zero")
def _check_tree_zero(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in corpus.graphs:
        if not g.is_tree():
            continue
        val = ctx.delta(g)
        instances += 1
        if val.quarters != 0:
            _fail(failures, {"graph": repr(g)}, "0", val)
    return instances, failures


@_register("cycle_delta_n_4")
def _check_cycles(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in corpus.graphs:
        n = g.vertex_count
        if n < 3 or g != cycle_graph(n):
            continue
        val = ctx.delta(g)
        instances += 1
        if val != QDist(n):
            _fail(failures, {"graph": f"cycle:{n}"}, QDist(n), val)
    return instances, failures


@_register("grid_stability_S8")
def _check_grid_stability(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in corpus.graphs:
        if g.vertex_count + 7 * g.m > 1000:
            continue
        v4 = ctx.delta(g)
        v8 = delta_exact(g, DeltaConfig(grid_factor=8)).value
        instances += 1
        if v4 != v8:
            _fail(failures, {"graph": repr(g)}, f"S4 value {v4}", f"S8 value {v8}")
    return instances, failures


@_register("cycle_only_equivalence")
def _check_cycle_only(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in corpus.graphs:
        vt = delta_exact(g, DeltaConfig(cycle_only=True)).value
        vf = delta_exact(g, DeltaConfig(cycle_only=False)).value
        instances += 1
        if vt != vf:
            _fail(failures, {"graph": repr(g)}, f"cycle_only {vt}", f"unrestricted {vf}")
    return instances, failures


@_register("bigon_lower_bound")
def _check_bigon(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in corpus.graphs:
        lo = delta_bigon_lower_bound(g)
        hi = ctx.delta(g)
        instances += 1
        if not lo <= hi:
            _fail(failures, {"graph": repr(g)}, f"bigon <= {hi}", lo)
    return instances, failures


@_register("isometric_monotonicity")
def _check_monotonicity(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for idx, g in enumerate(corpus.graphs):
        if g.vertex_count < 2:
            continue
        for sub, verts in _isometric_subgraphs(g, 3000 + idx, 2):
            instances += 1
            if not ctx.delta(sub) <= ctx.delta(g):
                _fail(failures, {"graph": repr(g), "subset": verts},
                      f"delta(sub) <= {ctx.delta(g)}", ctx.delta(sub))
    return instances, failures


# ---------------------------------------------------------------------------
# Fixed-value examples
# ---------------------------------------------------------------------------

@_register("examples_Pn_P2")
def _check_pn_p2(corpus: Corpus, ctx: SuiteContext):
    table = {2: QDist(4), 3: QDist(5), 4: QDist(6), 5: QDist(6)}
    instances, failures = 0, []
    for n, want in table.items():
        got = ctx.delta(product(path_graph(n), path_graph(2), LEXICOGRAPHIC).graph)
        instances += 1
        if got != want:
            _fail(failures, {"product": f"path:{n} o path:2"}, want, got)
    return instances, failures


@_register("examples_Cn_P2")
def _check_cn_p2(corpus: Corpus, ctx: SuiteContext):
    table = {3: QDist(4), 4: QDist(5), 5: QDist(5), 6: QDist(6)}
    instances, failures = 0, []
    for n, want in table.items():
        got = ctx.delta(product(cycle_graph(n), path_graph(2), LEXICOGRAPHIC).graph)
        instances += 1
        if got != want:
            _fail(failures, {"product": f"cycle:{n} o path:2"}, want, got)
    return instances, failures


@_register("example_complete")
def _check_complete(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for m, n in ((2, 2), (2, 3), (3, 3)):
        p = product(complete_graph(m), complete_graph(n), LEXICOGRAPHIC).graph
        if p != complete_graph(m * n):
            _fail(failures, {"product": f"complete:{m} o complete:{n}"},
                  f"K_{m * n}", repr(p))
        got = ctx.delta(p)
        instances += 1
        if got != ONE:
            _fail(failures, {"product": f"complete:{m} o complete:{n}"}, ONE, got)
    return instances, failures


# ---------------------------------------------------------------------------
# Classifier checks
# ---------------------------------------------------------------------------

@_register("tree_lex_oracle")
def _check_tree_oracle(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g1, g2 in ctx.delta_pairs(corpus):
        if not g1.is_tree():
            continue
        table = tree_lex_delta(g1, g2)
        engine = ctx.delta(ctx.lex(g1, g2).graph)
        instances += 1
        if table.value != engine:
            _fail(failures, {"pair": _pair_tag(g1, g2), "case": table.case_id},
                  engine, table.value)
    return instances, failures


@_register("F_characterization")
def _check_f_char(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    TWO = QDist.from_edges(2)
    for g1, g2 in ctx.delta_pairs(corpus):
        if not g1.is_tree() or g1.is_trivial() or g2.is_trivial():
            continue
        d1 = diam_v(g1)
        if not ONE <= d1 <= TWO:
            continue
        member, _ = in_family_F(g2, ctx.catalog)
        val = ctx.delta(ctx.lex(g1, g2).graph)
        instances += 1
        if (val == THREE_HALVES) != member:
            _fail(failures, {"pair": _pair_tag(g1, g2)},
                  f"delta=3/2 iff member (member={member})", val)
    return instances, failures


@_register("f_triangle_lemma")
def _check_f_triangle(corpus: Corpus, ctx: SuiteContext):
    instances, failures = 0, []
    for g in corpus.graphs:
        if g.vertex_count + 3 * g.m > 2000:
            continue
        member, _ = in_family_F(g, ctx.catalog)
        triangle = has_tight_short_triangle(g)
        instances += 1
        if member != triangle:
            _fail(failures, {"graph": repr(g)},
                  f"membership {member}", f"short-triangle sweep {triangle}")
    return instances, failures


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def run_suite(corpus: Corpus, checks: Optional[list[str]] = None) -> SuiteReport:
    """Run the selected checks (all by default) and aggregate a report."""
    selected = sorted(CHECKS) if checks is None else list(checks)
    unknown = [c for c in selected if c not in CHECKS]
    if unknown:
        raise LexhypError(f"unknown check ids: {unknown}")
    ctx = SuiteContext(product_cap=corpus.spec.product_cap)
    results = {}
    for cid in selected:
        t0 = time.perf_counter()
        try:
            instances, failures = CHECKS[cid](corpus, ctx)
        except Exception as exc:  # a crash is a failing check, not a crash of the suite
            instances, failures = 0, [{"inputs": "check raised", "expected": "no exception",
                                       "actual": repr(exc)}]
        millis = int(1000 * (time.perf_counter() - t0))
        results[cid] = CheckResult(
            check_id=cid,
            status="pass" if not failures else "fail",
            instances=instances,
            failures=failures,
            millis=millis,
        )
    return SuiteReport(results=results)
