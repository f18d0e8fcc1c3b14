"""Cop numbers of small graphs under the four movement rules.

Run: python3 demos/compare_rules.py
"""

from plab import graphs as G
from plab.rules import ALL_RULES
from plab.solver import cop_number

graphs = [
    G.path(6),
    G.cycle(4),
    G.cycle(7),
    G.complete_bipartite(3, 3),
    G.vab_graph(2, 3),
    G.petersen(),
    G.hypercube(3),
    G.hypercube(4),
    G.cartesian_product([G.complete(2), G.cycle(4)]),
]

print(f"{'graph':<12}" + "".join(f"{r.name:>14}" for r in ALL_RULES))
for g in graphs:
    row = [str(cop_number(g, rule, 4)) for rule in ALL_RULES]
    print(f"{g.name or g.digest[:8]:<12}" + "".join(f"{c:>14}" for c in row))

# vAB is the small separating example: two passive cops are needed, yet one
# fully-active cop suffices, since the robber can no longer sit still.
