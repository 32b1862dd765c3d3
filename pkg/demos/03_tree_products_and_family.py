"""The closed form for tree o graph and the forbidden family.

For a tree first factor the constant of the product is decided by a short
case table over the factor diameters and one structural question: does the
second factor contain an induced chord-augmented cycle of length 6 to 9 from
a fixed catalog?  Exactly those second factors push the constant to 3/2 when
the tree has diameter 1 or 2.
"""

from lexhyp import (Graph, build_catalog, cycle_graph, delta_exact, get_catalog,
                    in_family_F, parse_graph, path_graph, product, star_graph,
                    tree_lex_delta, trivial_graph)

# The catalog: 68 raw chord-augmented cycles, 40 up to isomorphism.
raw = build_catalog(dedup=False)
cat = get_catalog()
print(f"catalog: {len(raw)} raw members, {len(cat)} after deduplication")
tags = {}
for t in cat.family_tags:
    tags[t] = tags.get(t, 0) + 1
print("members per variant:", tags)

# Membership is an induced-subgraph question.
print("\nC6 in family:", in_family_F(cycle_graph(6))[0])
print("C5 in family:", in_family_F(cycle_graph(5))[0])
c9 = Graph(9, list(cycle_graph(9).edges) + [(1, 5)])  # C9 plus chord v2-v6
ok, witness = in_family_F(c9)
print("C9 + chord v2-v6 in family:", ok, "witness subset:", witness.subset)

# The case table, row by row.
rows = [
    (trivial_graph(), cycle_graph(6)),   # trivial tree: inherits delta(G2)
    (path_graph(2), path_graph(3)),      # diam 1, small G2: 1
    (path_graph(2), cycle_graph(5)),     # diam 1, G2 spread out, not in family: 5/4
    (path_graph(3), path_graph(4)),      # diam 2, not in family: 5/4
    (star_graph(3), cycle_graph(6)),     # diam 2, in family: 3/2
    (path_graph(5), path_graph(2)),      # diam >= 3: always 3/2
]
print("\ntree o graph case table:")
for g1, g2 in rows:
    case = tree_lex_delta(g1, g2)
    print(f"  {case.value:>4}  <- {case.description}")

# Every row agrees with the exact engine.
for g1, g2 in rows:
    table = tree_lex_delta(g1, g2).value
    engine = delta_exact(product(g1, g2).graph).value
    assert table == engine, (repr(g1), repr(g2))
print("\nall rows confirmed by the exact engine")

# The characterization at diameter 1: K2 o G2 reaches 3/2 exactly when G2
# is in the family.
for g2 in (cycle_graph(6), cycle_graph(5)):
    val = delta_exact(product(path_graph(2), g2).graph).value
    member = in_family_F(g2)[0]
    print(f"delta(K2 o C{g2.vertex_count}) = {val}, member = {member}")
