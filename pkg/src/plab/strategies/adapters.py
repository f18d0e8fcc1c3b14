"""Adapters that turn a strategy for one game into a strategy for another.

Each adapter wraps an inner controller and replays the game it imagines
onto the real board.
"""

from __future__ import annotations

from typing import Callable, Sequence

from ..covering import CoveringMap
from ..graphs import Graph, bipartition
from ..rules import FULLY_ACTIVE, PASSIVE, MovementRule
from .base import CopController, StrategyError, default_step


class DoublingAdapter(CopController):
    """2k fully-active cops shadowing k passive cops.

    Each passive cop C_i gets a partner D_i on a neighbor.  When C_i moves,
    D_i steps onto the vertex C_i left; when C_i stays, the pair swaps
    vertices and labels.  Every imagined vertex therefore hosts a real cop.
    """

    name = "doubling"
    _mutable = ("inner", "pos", "role")

    def __init__(self, inner: CopController, rule: MovementRule = FULLY_ACTIVE):
        self.inner = inner
        self.graph = inner.graph
        self.rule = rule
        self.k = 2 * inner.k
        self.pos: tuple[int, ...] = ()
        self.role: tuple[int, ...] = ()  # role[i] = physical cop playing C_i; D_i is role[i + k]

    def place(self) -> tuple[int, ...]:
        cs = tuple(self.inner.place())
        self.pos = cs + tuple(self.graph.adj[c][0] for c in cs)
        self.role = tuple(range(len(self.pos)))
        return self.pos

    def move(self, robber: int) -> tuple[int, ...]:
        k = len(self.pos) // 2
        old = [self.pos[self.role[i]] for i in range(k)]
        new = tuple(self.inner.move(robber))
        if not PASSIVE.legal_cop_round(self.graph, old, new):
            raise StrategyError(f"inner controller made an illegal passive turn {old} -> {new}")
        out = list(self.pos)
        role = list(self.role)
        for i in range(k):
            c, d = role[i], role[i + k]
            if new[i] != old[i]:
                out[c] = new[i]
                out[d] = old[i]
            else:
                out[c], out[d] = self.pos[d], self.pos[c]
                role[i], role[i + k] = d, c
        self.pos, self.role = tuple(out), tuple(role)
        for i in range(k):
            if self.pos[self.role[i]] != new[i]:
                raise StrategyError("imagined cop vertex left uncovered")
        return self.pos

    def memo_key(self):
        return (self.inner.memo_key(), self.role)


class ShadowPassiveAdapter(CopController):
    """t+1 passive cops from a t-cop fully-active strategy.

    The t cops advance the inner strategy only when the robber moves (and on
    the opening turn) and otherwise stay put; the extra cop C* closes in on
    the robber so that standing still soon becomes fatal.
    """

    name = "shadow"
    _mutable = ("inner", "pos", "last_robber")

    def __init__(self, inner: CopController, rule: MovementRule = PASSIVE):
        self.inner = inner
        self.graph = inner.graph
        self.rule = rule
        self.k = inner.k + 1
        self.pos: tuple[int, ...] = ()
        self.last_robber = -1

    def place(self) -> tuple[int, ...]:
        self.pos = tuple(self.inner.place()) + (0,)
        self.last_robber = -1
        return self.pos

    def move(self, robber: int) -> tuple[int, ...]:
        g = self.graph
        if self.last_robber != robber:
            team = tuple(self.inner.move(robber))
        else:
            team = self.pos[:-1]
        star = self.pos[-1]
        star = robber if g.has_edge(star, robber) else g.step_toward(star, robber)
        self.last_robber = robber
        self.pos = team + (star,)
        return self.pos

    def memo_key(self):
        return (self.inner.memo_key(), self.last_robber)


class SamePartiteAdapter(CopController):
    """Fully-active play on a bipartite graph guided by an imagined passive game.

    Real cop i always stands on its imagined vertex v_i or a neighbor of it.
    The imagined capture becomes a real one through parity: at every robber
    turn each cop must share the robber's partite set.  Cops move first, so
    at placement that means every cop sits on the side opposite the robber
    (``literal=True`` instead demands the same side at placement, a start
    from which the robber can escape on Q3).
    """

    name = "same-partite"
    _mutable = ("inner", "pos", "imagined", "started")

    def __init__(self, inner: CopController, rule: MovementRule = FULLY_ACTIVE,
                 literal: bool = False):
        g = inner.graph
        self.literal = literal
        sides = bipartition(g)
        if sides is None:
            raise StrategyError("same-partite adapter needs a bipartite graph")
        self.side = [0] * g.n
        for v in sides[1]:
            self.side[v] = 1
        self.inner = inner
        self.graph = g
        self.rule = rule
        self.k = inner.k
        self.pos: tuple[int, ...] = ()
        self.imagined: tuple[int, ...] = ()
        self.started = False

    def place(self) -> tuple[int, ...]:
        self.pos = tuple(self.inner.place())
        self.imagined = self.pos
        self.started = False
        return self.pos

    def move(self, robber: int) -> tuple[int, ...]:
        g = self.graph
        if not self.started:
            want = self.side[robber] if self.literal else 1 - self.side[robber]
            if any(self.side[c] != want for c in self.pos):
                raise StrategyError("cops do not start on the partite side this adapter needs")
            self.started = True
        if robber in self.imagined:
            # imagined capture on the robber's turn: the matching real cop is next to him
            i = self.imagined.index(robber)
            if not g.has_edge(self.pos[i], robber):
                raise StrategyError("imagined capture not mirrored by an adjacent real cop")
            out = [default_step(g, c, self.rule) for c in self.pos]
            out[i] = robber
            self.pos = tuple(out)
            return self.pos
        prev = self.imagined
        nxt = tuple(self.inner.move(robber))
        if not PASSIVE.legal_cop_round(g, prev, nxt):
            raise StrategyError(f"inner controller made an illegal passive turn {prev} -> {nxt}")
        out = []
        for u, a, b in zip(self.pos, prev, nxt):
            if u != a:
                out.append(a)
            elif a != b:
                out.append(b)
            else:
                out.append(g.adj[b][0])
        self.pos = tuple(out)
        self.imagined = nxt
        for u, v in zip(self.pos, nxt):
            if u != v and not g.has_edge(u, v):
                raise StrategyError(f"real cop at {u} strayed from imagined vertex {v}")
        return self.pos

    def memo_key(self):
        return (self.inner.memo_key(), self.imagined, self.started)


class CoverLiftAdapter(CopController):
    """Play on the target of a covering map by imagining the game on its source.

    The robber's lift starts at his lowest-id preimage and then follows the
    unique lifted neighbor each move; real cops stand on the images of the
    imagined cops.  Pass ``inner`` for a fixed source controller, or
    ``factory`` plus a target ``placement`` when the source start depends on
    the robber's lifted vertex.
    """

    name = "cover-lift"
    _mutable = ("inner", "pos", "lift")

    def __init__(
        self,
        cover: CoveringMap,
        inner: CopController | None = None,
        factory: Callable[[int], CopController] | None = None,
        placement: Sequence[int] | None = None,
        rule: MovementRule = FULLY_ACTIVE,
    ):
        if (inner is None) == (factory is None):
            raise StrategyError("give exactly one of inner or factory")
        if factory is not None and placement is None:
            raise StrategyError("a factory needs a fixed target placement")
        self.cover = cover
        self.graph: Graph = cover.target
        self.rule = rule
        self.inner = inner
        self.factory = factory
        self.placement = None if placement is None else tuple(placement)
        self.k = inner.k if inner is not None else len(self.placement)
        self.pos: tuple[int, ...] = ()
        self.lift = -1

    def place(self) -> tuple[int, ...]:
        if self.inner is not None and self.factory is None:
            self.pos = tuple(self.cover(v) for v in self.inner.place())
        else:
            self.pos = self.placement
        self.lift = -1
        return self.pos

    def move(self, robber: int) -> tuple[int, ...]:
        cv = self.cover
        if self.lift < 0:
            self.lift = cv.preimages(robber)[0]
            if self.factory is not None:
                self.inner = self.factory(self.lift)
                src = tuple(self.inner.place())
                if tuple(cv(v) for v in src) != self.placement:
                    raise StrategyError("source placement does not project onto the target placement")
        elif cv(self.lift) != robber:
            self.lift = cv.lift_neighbor(self.lift, robber)
        src = self.inner.move(self.lift)
        self.pos = tuple(cv(v) for v in src)
        return self.pos

    def memo_key(self):
        return (None if self.inner is None else self.inner.memo_key(), self.lift)
