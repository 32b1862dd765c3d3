"""Exact hyperbolicity constants with witnesses.

The sharp constant delta(G) is the smallest delta such that every side of
every geodesic triangle stays within delta of the other two sides.  It is
always a multiple of 1/4, so the library returns exact quarter-integer
values and a witness triangle that attains them.
"""

import json

from lexhyp import DeltaConfig, cycle_graph, delta_bigon_lower_bound, delta_exact, parse_graph, thinness

# Trees are exactly the graphs with delta = 0.
for spec in ("path:6", "star:4", "trivial"):
    print(f"delta({spec}) = {delta_exact(parse_graph(spec)).value}")

# Cycles scale linearly: delta(C_n) = n/4.
for n in range(3, 9):
    print(f"delta(C_{n}) = {delta_exact(cycle_graph(n)).value}")

# The witness is a concrete geodesic triangle on the quarter grid.
res = delta_exact(cycle_graph(6))
print("\ndelta(C_6) =", res.value)
print("witness corners (grid ids):", res.witness.corners)
print("witness is a cycle triangle:", res.witness.is_cycle)
print("side lengths (grid hops):", [len(s) - 1 for s in res.witness.sides])
print("attained at grid point", res.witness_point, "on side", res.witness_side)

# Re-evaluating the witness reproduces the constant exactly.
value, point = thinness(res.grid, res.witness)
print("thinness(witness) =", value, "at point", point)

# Bigons (two distinct geodesics between the same endpoints) give a cheap
# lower bound; on C_6 it is already sharp.
print("\nbigon bound on C_6:", delta_bigon_lower_bound(cycle_graph(6)))

# The engine answers identically on the finer S_8 grid and without the
# cycle-triangle restriction; both are cross-checked by the suite.
cfg8 = DeltaConfig(grid_factor=8)
print("S_8 grid agrees:", delta_exact(cycle_graph(6), cfg8).value == res.value)

# Results serialize to a stable JSON document.
print("\n" + json.dumps(delta_exact(cycle_graph(5)).to_json_dict(), indent=2, sort_keys=True))
