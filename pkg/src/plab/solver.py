"""Exact solving of cops-and-robbers games by retrograde analysis.

``solve`` classifies every micro-move state for a fixed graph, cop count and
movement rule.  Capture times count individual moves (each cop move and each
robber move is one), so a round with ``k`` cops costs ``k + 1`` moves.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from . import _kernels
from .graphs import Graph, GraphError
from .rules import MovementRule, RobberRule
from .space import StateSpace

if TYPE_CHECKING:
    from .cache import TableCache

logger = logging.getLogger(__name__)

COP_WIN = 1
ROBBER_WIN = 0


class SolverError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SolveTable:
    graph: Graph
    k: int
    rule: MovementRule
    status: np.ndarray
    ctime: np.ndarray

    @cached_property
    def space(self) -> StateSpace:
        return StateSpace(self.graph, self.k, self.rule)

    @property
    def key(self) -> tuple[str, int, str]:
        return (self.graph.digest, self.k, self.rule.name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SolveTable):
            return NotImplemented
        return (
            self.key == other.key
            and np.array_equal(self.status, other.status)
            and np.array_equal(self.ctime, other.ctime)
        )

    def _check(self, idx: int) -> int:
        if not 0 <= idx < self.status.size:
            raise SolverError(f"state {idx} is not in this table")
        return idx

    def is_cop_win(self, idx: int) -> bool:
        return bool(self.status[self._check(idx)])

    def capture_time(self, idx: int) -> int | None:
        t = int(self.ctime[self._check(idx)])
        return None if t < 0 else t

    @cached_property
    def initial(self) -> np.ndarray:
        """Boolean ``(M(k), n)``: cop-win from cops placed on multiset row, robber on column."""
        sp = self.space
        block = self.status[: sp.off[1]].reshape(sp.M[self.k], sp.F, sp.n)[:, 0, :]
        return block.astype(bool)

    @cached_property
    def initial_time(self) -> np.ndarray:
        sp = self.space
        return self.ctime[: sp.off[1]].reshape(sp.M[self.k], sp.F, sp.n)[:, 0, :]

    def start_wins(self, cops, r: int) -> bool:
        """Cop-win when cops sit on ``cops`` and the robber has just placed on ``r``."""
        return self.is_cop_win(self.space.round_start(cops, r))

    def winning_placements(self) -> list[tuple[int, ...]]:
        """Cop multisets that win against every robber placement, in rank order."""
        from .space import multiset_unrank

        rows = np.flatnonzero(self.initial.all(axis=1))
        return [multiset_unrank(int(q), self.k, self.graph.n) for q in rows]

    def to_json(self) -> dict:
        return {
            "graph_digest": self.graph.digest,
            "n": self.graph.n,
            "k": self.k,
            "rule": self.rule.name,
            "states": int(self.status.size),
            "cop_win_states": int(self.status.sum()),
            "status": self.status.tolist(),
            "capture_time": self.ctime.tolist(),
        }


def _validate(g: Graph, k: int, rule: MovementRule) -> None:
    if k < 1:
        raise SolverError("need at least one cop")
    if g.n < 1 or not g.is_connected():
        raise SolverError("graph must be connected and nonempty")
    if rule.has_must_move and g.n < 2:
        raise SolverError("must-move rules need at least two vertices")
    for v in range(g.n):
        if g.degree(v) * k >= 256:
            raise SolverError("degree * k must stay below 256 (one-byte counters)")


def solve(g: Graph, k: int, rule: MovementRule, cache: "TableCache | None" = None) -> SolveTable:
    _validate(g, k, rule)
    if cache is not None:
        hit = cache.get(g, k, rule)
        if hit is not None:
            return hit
    sp = StateSpace(g, k, rule)
    tab, moff = sp.mtab
    indptr, indices = sp.csr
    logger.debug("solving %r k=%d rule=%s: %d states", g, k, rule, sp.total)
    status, ctime = _kernels.solve_kernel(
        g.n,
        k,
        sp.F,
        int(rule.cop_rule),
        rule.robber_rule == RobberRule.FREE,
        indptr,
        indices,
        sp.binom,
        tab,
        moff,
        np.array(sp.M, dtype=np.int64),
        np.array(sp.off, dtype=np.int64),
    )
    status.setflags(write=False)
    ctime.setflags(write=False)
    table = SolveTable(g, k, rule, status, ctime)
    table.__dict__["space"] = sp
    if cache is not None:
        cache.put(table)
    return table


@dataclass(frozen=True)
class Unknown:
    """Cop number exceeds the searched bound."""

    k_max: int

    def __str__(self) -> str:
        return f">{self.k_max}"


def cop_number(g: Graph, rule: MovementRule, k_max: int, cache: "TableCache | None" = None) -> int | Unknown:
    """Least ``k <= k_max`` such that some cop placement beats every robber placement."""
    if k_max < 1:
        raise SolverError("k_max must be at least 1")
    for k in range(1, k_max + 1):
        if solve(g, k, rule, cache).initial.all(axis=1).any():
            return k
    return Unknown(k_max)


def wins_from_all_placements(g: Graph, k: int, rule: MovementRule, cache: "TableCache | None" = None) -> bool:
    return bool(solve(g, k, rule, cache).initial.all())


__all__ = [
    "COP_WIN",
    "ROBBER_WIN",
    "GraphError",
    "SolveTable",
    "SolverError",
    "Unknown",
    "cop_number",
    "solve",
    "wins_from_all_placements",
]
