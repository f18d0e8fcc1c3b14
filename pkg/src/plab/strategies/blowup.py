"""Robber evading 2k-1 fully-active cops on a t-blowup of a product of 2k-1 trees."""

from __future__ import annotations

from math import prod
from typing import Sequence

from ..graphs import Graph, blowup, bipartition
from ..rules import FULLY_ACTIVE
from .base import RobberController, StrategyError
from .trees import _Product, _undominated


def counting_bound(factors: Sequence[Graph], t: int) -> tuple[int, int]:
    """``(lower bound on |Y|, cops plus cop-dominated vertices of Y)`` for the start argument.

    The robber can always place when the first number exceeds the second.
    """
    sizes = sorted((f.n for f in factors), reverse=True)
    k = (len(factors) + 1) // 2
    y_lower = t * prod(sizes[:-1])
    crowded = 2 * k - 1 + (k - 1) * t * sum(s - 1 for s in sizes)
    return y_lower, crowded


class BlowupRobber(RobberController):
    """The robber from the tight 2k bound.

    Placement: lowest-id undominated vertex of the partite set holding at
    least k cops.  Each turn: take the shadow v, find the lowest coordinate
    where v agrees with every cop shadow at distance 2, step to the lowest-id
    neighbor of v in that coordinate, and land on its lowest-id cop-free
    copy.
    """

    name = "blowup-robber"
    _mutable = ("pos",)

    def __init__(self, factors: Sequence[Graph], t: int, strict: bool = True):
        if len(factors) % 2 == 0:
            raise StrategyError("needs an odd number 2k-1 of tree factors")
        self.k = (len(factors) + 1) // 2
        if self.k < 2:
            raise StrategyError("needs k >= 2 (at least 3 tree factors)")
        if t < 2 * self.k:
            raise StrategyError(f"needs t >= 2k = {2 * self.k}, got t = {t}")
        self.prod = _Product(factors)
        self.t = t
        self.graph = blowup(self.prod.graph, t)
        self.rule = FULLY_ACTIVE
        self.strict = strict
        self.sides = bipartition(self.graph)
        self.pos = -1

    def shadow(self, v: int) -> int:
        return v // self.t

    def place(self, cops: Sequence[int]) -> int:
        g = self.graph
        x, y = self.sides
        in_x = sum(c in x for c in cops)
        side = x if in_x >= self.k else y
        for v in sorted(side):
            if _undominated(g, cops, v):
                self.pos = v
                return v
        if self.strict:
            raise StrategyError("no undominated start vertex on the side holding >= k cops")
        self.pos = next((v for v in range(g.n) if v not in cops), 0)
        return self.pos

    def move(self, cops: Sequence[int]) -> int:
        g = self.graph
        H = self.prod.graph
        v = self.shadow(self.pos)
        shadows = [self.shadow(c) for c in cops]
        if self.strict and v in shadows:
            raise StrategyError(f"a cop shares the robber's shadow {v}")
        far = [w for w in shadows if H.dist[v, w] == 2]
        coords = self.prod.coords
        for i in range(len(self.prod.factors)):
            if all(coords[w][i] == coords[v][i] for w in far):
                v2 = self.prod.shift(v, i)
                for copy in range(self.t):
                    nxt = v2 * self.t + copy
                    if nxt not in cops:
                        break
                if _undominated(g, cops, nxt):
                    self.pos = nxt
                    return nxt
                if self.strict:
                    raise StrategyError(f"landing vertex {nxt} is not safe")
                break
        if self.strict:
            raise StrategyError("no coordinate agrees with every cop at shadow distance 2")
        safe = [w for w in g.adj[self.pos] if _undominated(g, cops, w)]
        self.pos = (safe or [w for w in g.adj[self.pos] if w not in cops] or list(g.adj[self.pos]))[0]
        return self.pos

    def memo_key(self):
        return self.pos
