"""Strategies on Cartesian products of trees."""

from __future__ import annotations

from math import ceil
from typing import Sequence

from ..graphs import Graph, bipartition, cartesian_product, product_index
from ..rules import FULLY_ACTIVE
from .base import CopController, RobberController, StrategyError


class _Product:
    """Coordinate bookkeeping for a product of factor graphs."""

    def __init__(self, factors: Sequence[Graph]):
        if not factors:
            raise StrategyError("need at least one factor")
        if any(f.n < 2 for f in factors):
            raise StrategyError("every factor must be a nontrivial tree")
        for f in factors:
            if f.num_edges != f.n - 1 or not f.is_connected():
                raise StrategyError(f"factor {f.name or f.n} is not a tree")
        self.factors = tuple(factors)
        self.sizes = tuple(f.n for f in factors)
        self.graph = cartesian_product(self.factors)
        self.coords = [self.graph.coords(v) for v in range(self.graph.n)]

    def index(self, coords: Sequence[int]) -> int:
        return product_index(self.sizes, coords)

    def gaps(self, u: int, v: int) -> list[int]:
        cu, cv = self.coords[u], self.coords[v]
        return [int(f.dist[a, b]) for f, a, b in zip(self.factors, cu, cv)]

    def step(self, u: int, i: int, target: int) -> int:
        """Move ``u`` one step toward ``target`` in coordinate ``i``."""
        c = list(self.coords[u])
        c[i] = self.factors[i].step_toward(c[i], self.coords[target][i])
        return self.index(c)

    def shift(self, u: int, i: int) -> int:
        """Move ``u`` to its lowest-id neighbor in coordinate ``i``."""
        c = list(self.coords[u])
        c[i] = self.factors[i].adj[c[i]][0]
        return self.index(c)


def _pair_step(prod: _Product, u: int, r: int, i: int, j: int) -> int:
    gaps = prod.gaps(u, r)
    return prod.step(u, i if gaps[i] > gaps[j] else j, r)


class TreePairCop(CopController):
    """One cop on T1 x T2 chasing a robber at odd distance.

    Each turn the cop steps toward the robber in the coordinate with the
    larger gap; odd distance keeps the two gaps distinct.
    """

    name = "tree-pair"
    _mutable = ("pos",)
    k = 1

    def __init__(self, t1: Graph, t2: Graph, start: int = 0):
        self.prod = _Product([t1, t2])
        self.graph = self.prod.graph
        self.rule = FULLY_ACTIVE
        self.start = start
        self.pos: tuple[int, ...] = ()

    def place(self) -> tuple[int, ...]:
        self.pos = (self.start,)
        return self.pos

    def move(self, robber: int) -> tuple[int, ...]:
        if sum(self.prod.gaps(self.pos[0], robber)) % 2 == 0:
            raise StrategyError("tree-pair strategy needs the robber at odd distance")
        self.pos = (_pair_step(self.prod, self.pos[0], robber, 0, 1),)
        return self.pos

    def memo_key(self):
        return self.pos


def tree_product_cops(k: int) -> int:
    return ceil(2 * k / 3)


def inactive_assignment(c: int, d: int, k: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Inactive coordinates (0-based) for c even cops and d odd cops on k coordinates.

    Even cops take 0..c-1, odd cops take consecutive pairs after that; any
    index past the last coordinate is rounded down to k-1.
    """
    even = [(min(j, k - 1),) for j in range(c)]
    odd = []
    for j in range(d):
        a, b = min(c + 2 * j, k - 1), min(c + 2 * j + 1, k - 1)
        odd.append((a,) if a == b else (a, b))
    return even, odd


class TreeProductCop(CopController):
    """ceil(2k/3) cops on a product of k nontrivial trees.

    Cops split into two groups on vertex 0 and its lowest neighbor.  After
    the robber places, even and odd cops receive inactive coordinates; a cop
    first closes every gap in its active coordinates (lowest index first),
    then plays the one- or two-tree game on its inactive ones.
    """

    name = "tree-product"
    _mutable = ("pos", "assign")

    def __init__(self, factors: Sequence[Graph], n_cops: int | None = None, strict: bool = True):
        self.prod = _Product(factors)
        self.graph = self.prod.graph
        self.rule = FULLY_ACTIVE
        self.dims = len(factors)
        self.k = tree_product_cops(self.dims) if n_cops is None else n_cops
        self.strict = strict
        self.pos: tuple[int, ...] = ()
        self.assign: tuple[tuple[int, ...], ...] = ()

    def place(self) -> tuple[int, ...]:
        v = 0
        w = self.graph.adj[v][0]
        first = (self.k + 1) // 2
        self.pos = (v,) * first + (w,) * (self.k - first)
        self.assign = ()
        return self.pos

    def _assign(self, robber: int) -> None:
        d = self.graph.dist
        odd_ids = [i for i, c in enumerate(self.pos) if d[c, robber] % 2]
        even_ids = [i for i, c in enumerate(self.pos) if d[c, robber] % 2 == 0]
        n_even, n_odd = len(even_ids), len(odd_ids)
        if self.strict and n_even + 2 * n_odd < self.dims:
            raise StrategyError(f"c + 2d = {n_even + 2 * n_odd} < k = {self.dims}")
        even, odd = inactive_assignment(n_even, n_odd, self.dims)
        assign: list[tuple[int, ...]] = [()] * self.k
        for i, coords in zip(even_ids, even):
            assign[i] = coords
        for i, coords in zip(odd_ids, odd):
            assign[i] = coords
        self.assign = tuple(assign)

    def move(self, robber: int) -> tuple[int, ...]:
        if not self.assign:
            self._assign(robber)
        out = []
        for u, inactive in zip(self.pos, self.assign):
            gaps = self.prod.gaps(u, robber)
            active = [i for i in range(self.dims) if i not in inactive and gaps[i]]
            if active:
                out.append(self.prod.step(u, active[0], robber))
            elif len(inactive) == 1:
                i = inactive[0]
                out.append(self.prod.step(u, i, robber) if gaps[i] else self.prod.shift(u, i))
            else:
                out.append(_pair_step(self.prod, u, robber, *inactive))
        self.pos = tuple(out)
        return self.pos

    def memo_key(self):
        return self.assign


def _undominated(g: Graph, cops: Sequence[int], v: int) -> bool:
    return all(c != v and not g.has_edge(c, v) for c in cops)


class TreeProductRobber(RobberController):
    """Robber evading fewer than ceil(2k/3) cops on a product of k trees.

    He starts on the lowest-id undominated vertex of the partite set holding
    more cops, and each turn steps (to the lowest-id neighbor) in the lowest
    coordinate where every cop within distance 2 agrees with him.
    """

    name = "tree-product-robber"
    _mutable = ("pos",)

    def __init__(self, factors: Sequence[Graph], strict: bool = True):
        self.prod = _Product(factors)
        self.graph = self.prod.graph
        self.rule = FULLY_ACTIVE
        self.dims = len(factors)
        self.strict = strict
        x, y = bipartition(self.graph)
        self.sides = (x, y)
        self.pos = -1

    def place(self, cops: Sequence[int]) -> int:
        g = self.graph
        x, y = self.sides
        in_x = sum(c in x for c in cops)
        side = x if in_x > len(cops) - in_x else y
        for v in sorted(side):
            if _undominated(g, cops, v):
                self.pos = v
                return v
        if self.strict:
            raise StrategyError("no undominated start vertex on the majority side")
        self.pos = next((v for v in range(g.n) if v not in cops), 0)
        return self.pos

    def move(self, cops: Sequence[int]) -> int:
        g = self.graph
        r = self.pos
        near = [c for c in cops if g.dist[c, r] <= 2]
        for i in range(self.dims):
            if all(self.prod.coords[c][i] == self.prod.coords[r][i] for c in near):
                nxt = self.prod.shift(r, i)
                if _undominated(g, cops, nxt):
                    self.pos = nxt
                    return nxt
                if self.strict:
                    raise StrategyError(f"step in coordinate {i} to {nxt} is not safe")
        if self.strict:
            raise StrategyError("no coordinate agrees with every nearby cop")
        safe = [w for w in g.adj[r] if _undominated(g, cops, w)]
        free = [w for w in g.adj[r] if w not in cops]
        self.pos = (safe or free or list(g.adj[r]))[0]
        return self.pos

    def memo_key(self):
        return self.pos
