"""Controller protocol shared by all strategies.

A cop controller owns the ordered positions of its cops: ``place()`` returns
them, and ``move(robber)`` returns the positions after one cop turn given the
robber's current vertex.  A robber controller owns the robber's vertex:
``place(cops)`` and ``move(cops)`` receive the cops as a sorted tuple.

``memo_key()`` must capture all internal state that influences future
behaviour; the arena pairs it with the visible positions when memoizing.
Cloning is a shallow copy plus deep copies of the attributes listed in
``_mutable`` so that graphs and solve tables are shared, not copied.
"""

from __future__ import annotations

import copy
from typing import Hashable, Sequence

from ..graphs import Graph
from ..rules import CopRule, MovementRule


class StrategyError(RuntimeError):
    """A controller's precondition or internal invariant failed."""


class Controller:
    name = "controller"
    _mutable: tuple[str, ...] = ()

    graph: Graph
    rule: MovementRule

    def __deepcopy__(self, memo):
        new = copy.copy(self)
        for attr in self._mutable:
            setattr(new, attr, copy.deepcopy(getattr(self, attr), memo))
        return new

    def clone(self):
        return copy.deepcopy(self)

    def memo_key(self) -> Hashable:
        raise NotImplementedError


class CopController(Controller):
    k: int

    def place(self) -> tuple[int, ...]:
        raise NotImplementedError

    def move(self, robber: int) -> tuple[int, ...]:
        raise NotImplementedError


class RobberController(Controller):
    def place(self, cops: Sequence[int]) -> int:
        raise NotImplementedError

    def move(self, cops: Sequence[int]) -> int:
        raise NotImplementedError


def default_step(g: Graph, v: int, rule: MovementRule) -> int:
    """Move for a cop with nothing better to do: stay if allowed, else lowest neighbor."""
    if rule.cop_rule == CopRule.MUST_MOVE_ALL:
        return g.adj[v][0]
    return v


def capture_move(g: Graph, cops: Sequence[int], robber: int, rule: MovementRule) -> tuple[int, ...] | None:
    """Positions after the lowest-index cop adjacent to the robber jumps on him."""
    for i, c in enumerate(cops):
        if g.has_edge(c, robber):
            out = [default_step(g, x, rule) for x in cops]
            out[i] = robber
            if rule.cop_rule == CopRule.AT_MOST_ONE:
                out = list(cops)
                out[i] = robber
            return tuple(out)
    return None
