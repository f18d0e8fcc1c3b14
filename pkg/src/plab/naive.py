"""Direct joint-move solver, used as an independent oracle for small instances.

No micro-move decomposition and no predecessor bookkeeping: a cop turn is a
tuple of simultaneous per-cop moves, and winning sets are grown by plain
fixed-point iteration over explicit successor lists.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .graphs import Graph
from .rules import MovementRule


def joint_solve(g: Graph, k: int, rule: MovementRule) -> tuple[dict, dict]:
    """Cop-win sets keyed by ``(sorted cops, robber)``.

    Returns ``(cop_turn, robber_turn)`` dictionaries mapping each state to
    True when the cops can force capture.
    """
    configs = list(combinations_with_replacement(range(g.n), k))
    cop_succ = {}
    for cops in configs:
        outs = {tuple(sorted(c)) for c in rule.cop_rounds(g, cops)}
        cop_succ[cops] = sorted(outs)
    cop_turn = {}
    robber_turn = {}
    for cops in configs:
        for r in range(g.n):
            cop_turn[cops, r] = r in cops
            robber_turn[cops, r] = r in cops
    changed = True
    while changed:
        changed = False
        for cops in configs:
            for r in range(g.n):
                if not cop_turn[cops, r]:
                    if any(r in c or robber_turn[c, r] for c in cop_succ[cops]):
                        cop_turn[cops, r] = True
                        changed = True
                if not robber_turn[cops, r]:
                    if all(cop_turn[cops, r2] for r2 in rule.robber_moves(g, r)):
                        robber_turn[cops, r] = True
                        changed = True
    return cop_turn, robber_turn
