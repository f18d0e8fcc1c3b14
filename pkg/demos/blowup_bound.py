"""The 2k bound is tight: the 4-blowup of Q3.

Its passive cop number is 2.  The doubling adapter turns two passive cops
into four fully-active ones, and the blowup robber escapes any three.
Takes about a minute.

Run: python3 demos/blowup_bound.py
"""

import time

from plab import graphs as G
from plab.arena import exhaustive_verify_cop, exhaustive_verify_robber
from plab.rules import FULLY_ACTIVE, PASSIVE
from plab.solver import cop_number, solve
from plab.strategies import BlowupRobber, DoublingAdapter, OptimalCop
from plab.strategies.blowup import counting_bound

K2 = G.complete(2)
g = G.blowup(G.hypercube(3), 4)
print(f"blowup: {g.n} vertices, {g.num_edges} edges")
print("passive cop number:", cop_number(g, PASSIVE, 3))
y, crowded = counting_bound((K2, K2, K2), 4)
print(f"robber start: |Y| >= {y} > {crowded} vertices that three cops can occupy or watch")

t0 = time.perf_counter()
passive = solve(g, 2, PASSIVE)
print("4 cops (doubling adapter):",
      exhaustive_verify_cop(g, FULLY_ACTIVE, lambda: DoublingAdapter(OptimalCop(passive))))
print("3 cops vs blowup robber:",
      exhaustive_verify_robber(g, FULLY_ACTIVE, 3, lambda: BlowupRobber((K2, K2, K2), 4)))
print(f"{time.perf_counter() - t0:.0f}s")
