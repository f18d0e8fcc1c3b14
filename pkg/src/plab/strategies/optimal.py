"""Controllers that read optimal play off a solve table.

Ties are broken toward the lowest destination vertex, then the lowest source.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..solver import SolveTable, SolverError
from ..space import multiset_unrank
from .base import CopController, RobberController

_INF = 1 << 40


def _t(table: SolveTable, idx: int) -> int:
    t = table.capture_time(idx)
    return _INF if t is None else t


def best_placement(table: SolveTable) -> tuple[int, ...]:
    wins = table.initial.sum(axis=1)
    row = int(np.argmax(wins))  # first maximum = lowest rank
    return multiset_unrank(row, table.k, table.graph.n)


class OptimalCop(CopController):
    """Cops that minimize capture time, one individual move at a time."""

    name = "optimal"
    _mutable = ("pos",)

    def __init__(self, table: SolveTable, start: Sequence[int] | None = None):
        self.table = table
        self.graph = table.graph
        self.rule = table.rule
        self.k = table.k
        self.start = None if start is None else tuple(start)
        self.pos: tuple[int, ...] = ()

    def place(self) -> tuple[int, ...]:
        self.pos = self.start if self.start is not None else best_placement(self.table)
        if len(self.pos) != self.k:
            raise SolverError("placement size does not match table cop count")
        return self.pos

    def move(self, robber: int) -> tuple[int, ...]:
        sp = self.table.space
        moved: tuple[int, ...] = ()
        pending = tuple(sorted(self.pos))
        flag = 0
        out = list(self.pos)
        done = [False] * self.k
        self.table._check(sp.cop_index(moved, pending, flag, robber))
        while pending:
            best = min(
                sp.cop_micro_moves(moved, pending, flag, robber),
                key=lambda m: (_t(self.table, m.succ), m.dst, m.src),
            )
            i = next(i for i in range(self.k) if not done[i] and self.pos[i] == best.src)
            out[i] = best.dst
            done[i] = True
            rest = list(pending)
            rest.remove(best.src)
            pending = tuple(rest)
            moved = tuple(sorted(moved + (best.dst,)))
            if sp.F == 2:
                flag = flag | int(best.dst != best.src)
        self.pos = tuple(out)
        return self.pos

    def memo_key(self):
        return self.pos


class OptimalRobber(RobberController):
    """Robber that stays in the losing region for the cops when possible, else delays capture."""

    name = "optimal-robber"
    _mutable = ("pos",)

    def __init__(self, table: SolveTable):
        self.table = table
        self.graph = table.graph
        self.rule = table.rule
        self.pos = -1

    def place(self, cops: Sequence[int]) -> int:
        sp = self.table.space
        best = None
        for r in range(self.graph.n):
            idx = sp.round_start(cops, r)
            key = (0, r) if not self.table.is_cop_win(idx) else (1, -_t(self.table, idx), r)
            if best is None or key < best[0]:
                best = (key, r)
        self.pos = best[1]
        return self.pos

    def move(self, cops: Sequence[int]) -> int:
        sp = self.table.space
        best = None
        for r2, succ in sp.robber_moves(tuple(sorted(cops)), self.pos):
            key = (0, r2) if not self.table.is_cop_win(succ) else (1, -_t(self.table, succ), r2)
            if best is None or key < best[0]:
                best = (key, r2)
        self.pos = best[1]
        return self.pos

    def memo_key(self):
        return self.pos
