"""Two fully-active cops shrinking the robber's territory on an outerplanar graph.

Plays the explicit outerplanar strategy against an optimal robber, prints the
game, then verifies the strategy against every robber.

Run: python3 demos/outerplanar_chase.py [n] [seed]
"""

import sys

from plab.arena import exhaustive_verify_cop, play
from plab.generators import random_maximal_outerplanar
from plab.rules import FULLY_ACTIVE
from plab.solver import solve
from plab.strategies import OptimalRobber, OuterplanarCop

n = int(sys.argv[1]) if len(sys.argv) > 1 else 12
seed = int(sys.argv[2]) if len(sys.argv) > 2 else 7
g, emb = random_maximal_outerplanar(n, seed)
print(f"outer cycle {list(emb.outer_cycle)}, chords {sorted(emb.chords)}")

robber = OptimalRobber(solve(g, 2, FULLY_ACTIVE))
tr = play(g, FULLY_ACTIVE, OuterplanarCop(g, emb), robber, 20 * n * n)
print(f"cops start {tr.cop_placement}, robber starts {tr.robber_placement}")
for i, (cops, r) in enumerate(tr.rounds, 1):
    print(f"  round {i:2d}: cops {cops}  robber {'-' if r is None else r}")
print(tr.outcome)

res = exhaustive_verify_cop(g, FULLY_ACTIVE, lambda: OuterplanarCop(g, emb), check_determinism=True)
print("exhaustive check:", res)
