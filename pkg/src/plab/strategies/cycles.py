"""k+1 fully-active cops on a product of k cycles, at least one of them odd.

The cops imagine the game on the doubled product H (every cycle length
doubled), which covers the real graph and is bipartite.  All real cops start
on the all-zeros vertex; in H they start on all-zeros or on n_j in the first
odd coordinate j, whichever puts them on the side opposite the robber's lift.
Play in H follows an optimal passive strategy through the same-partite
adapter, and the cover projects it back.
"""

from __future__ import annotations

from typing import Sequence

from ..covering import doubled_cycle_cover
from ..graphs import product_index
from ..rules import FULLY_ACTIVE, PASSIVE
from ..solver import SolveTable, solve
from .adapters import CoverLiftAdapter, SamePartiteAdapter
from .base import StrategyError
from .optimal import OptimalCop


def odd_cycle_product_strategy(lengths: Sequence[int], table: SolveTable | None = None,
                               cache=None) -> CoverLiftAdapter:
    lengths = tuple(lengths)
    odd = [j for j, n in enumerate(lengths) if n % 2]
    if not odd:
        raise StrategyError("needs at least one odd cycle length")
    cover = doubled_cycle_cover(lengths)
    H = cover.source
    k = len(lengths) + 1
    if table is None:
        table = solve(H, k, PASSIVE, cache=cache)
    if table.graph != H or table.k != k or table.rule != PASSIVE:
        raise StrategyError("table must be the passive table of the doubled product with k+1 cops")
    j = odd[0]
    doubled = [2 * n for n in lengths]
    zero = product_index(doubled, [0] * len(lengths))
    shifted = product_index(doubled, [lengths[j] if i == j else 0 for i in range(len(lengths))])

    def parity(v: int) -> int:
        return sum(H.coords(v)) % 2

    def make_inner(lift: int):
        start = zero if parity(lift) != parity(zero) else shifted
        return SamePartiteAdapter(OptimalCop(table, (start,) * k), FULLY_ACTIVE)

    adapter = CoverLiftAdapter(cover, factory=make_inner, placement=(cover(zero),) * k,
                               rule=FULLY_ACTIVE)
    adapter.name = "odd-cycle-product"
    return adapter
