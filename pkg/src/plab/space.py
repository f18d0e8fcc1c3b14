"""State indexing for the micro-move game.

A cop round is split into ``k`` individual cop moves with the robber frozen.
Cop-phase states are ``(moved, pending, flag, robber)`` where ``moved`` and
``pending`` are sorted multisets; robber-phase states are ``(cops, robber)``.
Multisets are ranked with the combinatorial number system, so every state
has a dense integer index:

    cop phase, |moved| = j:  off[j] + ((rank(moved) * M(k-j) + rank(pending)) * F + flag) * n + r
    robber phase:            off[k] + rank(cops) * n + r

``M(s)`` is the number of size-``s`` multisets over ``n`` vertices and ``F``
is 2 for rules that need the "some cop already moved" flag, else 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .graphs import Graph
from .rules import CopRule, MovementRule, RobberRule


def multiset_rank(a: Sequence[int]) -> int:
    return sum(comb(x + i, i + 1) for i, x in enumerate(a))


def multiset_unrank(rank: int, s: int, n: int) -> tuple[int, ...]:
    out = [0] * s
    rem = rank
    top = n + s - 1
    for i in range(s - 1, -1, -1):
        b = i
        # largest b with comb(b, i+1) <= rem
        lo, hi = i, top
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if comb(mid, i + 1) <= rem:
                lo = mid
            else:
                hi = mid - 1
        b = lo
        rem -= comb(b, i + 1)
        out[i] = b - i
        top = b
    return tuple(out)


def cop_move_legal(cop_rule: int, flag: int, stay: bool, is_last: bool) -> bool:
    if cop_rule == CopRule.MUST_MOVE_ALL:
        return not stay
    if cop_rule == CopRule.AT_LEAST_ONE:
        return not (is_last and flag == 0 and stay)
    if cop_rule == CopRule.AT_MOST_ONE:
        return not (flag == 1 and not stay)
    return True


@dataclass(frozen=True)
class MicroMove:
    """One individual cop move: a cop standing on ``src`` steps to ``dst``."""

    src: int
    dst: int
    succ: int


class StateSpace:
    def __init__(self, g: Graph, k: int, rule: MovementRule):
        self.g = g
        self.n = g.n
        self.k = k
        self.rule = rule
        self.F = 2 if rule.uses_flag else 1
        n = self.n
        self.M = [comb(n + s - 1, s) for s in range(k + 1)]
        off = [0]
        for j in range(k):
            off.append(off[-1] + self.M[j] * self.M[k - j] * self.F * n)
        self.off = off  # off[k] is the start of the robber phase
        self.total = off[k] + self.M[k] * n

    # -- numba-facing tables --------------------------------------------------

    @cached_property
    def binom(self) -> np.ndarray:
        top = self.n + self.k + 1
        b = np.zeros((top + 1, self.k + 2), dtype=np.int64)
        for a in range(top + 1):
            for c in range(self.k + 2):
                b[a, c] = comb(a, c)
        return b

    @cached_property
    def mtab(self) -> tuple[np.ndarray, np.ndarray]:
        """Rows of all multisets of every size ``0..k`` in rank order, plus row offsets."""
        width = max(self.k, 1)
        moff = np.zeros(self.k + 2, dtype=np.int64)
        for s in range(self.k + 1):
            moff[s + 1] = moff[s] + self.M[s]
        tab = np.zeros((int(moff[-1]), width), dtype=np.int32)
        for s in range(1, self.k + 1):
            for ms in combinations_with_replacement(range(self.n), s):
                tab[moff[s] + multiset_rank(ms), :s] = ms
        return tab, moff

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        for v in range(self.n):
            indptr[v + 1] = indptr[v] + len(self.g.adj[v])
        indices = np.array([w for v in range(self.n) for w in self.g.adj[v]], dtype=np.int32)
        return indptr, indices

    # -- indexing --------------------------------------------------------------

    def cop_index(self, moved: Sequence[int], pending: Sequence[int], flag: int, r: int) -> int:
        j = len(moved)
        return self.off[j] + (
            (multiset_rank(moved) * self.M[self.k - j] + multiset_rank(pending)) * self.F + flag
        ) * self.n + r

    def round_start(self, cops: Sequence[int], r: int) -> int:
        return self.cop_index((), tuple(sorted(cops)), 0, r)

    def robber_index(self, cops: Sequence[int], r: int) -> int:
        return self.off[self.k] + multiset_rank(sorted(cops)) * self.n + r

    def round_start_block(self) -> slice:
        """Slice of round-start states; reshape to ``(M(k), F, n)`` and take flag 0."""
        return slice(0, self.off[1] if self.k >= 1 else 0)

    def decode(self, idx: int):
        """``('cop', moved, pending, flag, r)`` or ``('robber', cops, r)``."""
        n, k = self.n, self.k
        if idx >= self.off[k]:
            local = idx - self.off[k]
            return ("robber", multiset_unrank(local // n, k, n), local % n)
        j = max(i for i in range(k) if self.off[i] <= idx)
        local = idx - self.off[j]
        r = local % n
        local //= n
        flag = local % self.F
        local //= self.F
        rp = local % self.M[k - j]
        rm = local // self.M[k - j]
        return ("cop", multiset_unrank(rm, j, n), multiset_unrank(rp, k - j, n), flag, r)

    # -- forward moves ------------------------------------------------------------

    def cop_micro_moves(self, moved, pending, flag, r) -> Iterator[MicroMove]:
        """Legal individual cop moves from a cop-phase state, by (src, dst)."""
        g = self.g
        is_last = len(pending) == 1
        seen = set()
        for p in pending:
            if p in seen:
                continue
            seen.add(p)
            rest = list(pending)
            rest.remove(p)
            for d in sorted(g.adj[p] + (p,)):
                stay = d == p
                if not cop_move_legal(self.rule.cop_rule, flag, stay, is_last):
                    continue
                new_moved = tuple(sorted(moved + (d,)))
                if is_last:
                    succ = self.robber_index(new_moved, r)
                else:
                    nf = (flag | (not stay)) if self.F == 2 else 0
                    succ = self.cop_index(new_moved, tuple(rest), int(nf), r)
                yield MicroMove(p, d, succ)

    def robber_moves(self, cops, r) -> Iterator[tuple[int, int]]:
        for r2 in self.rule.robber_moves(self.g, r):
            yield r2, self.round_start(cops, r2)

    def successors(self, idx: int) -> list[int]:
        st = self.decode(idx)
        if st[0] == "robber":
            return [s for _, s in self.robber_moves(st[1], st[2])]
        return [m.succ for m in self.cop_micro_moves(st[1], st[2], st[3], st[4])]

    def is_capture(self, idx: int) -> bool:
        st = self.decode(idx)
        if st[0] == "robber":
            return st[2] in st[1]
        return st[4] in st[1] or st[4] in st[2]


def robber_is_free(rule: MovementRule) -> bool:
    return rule.robber_rule == RobberRule.FREE
