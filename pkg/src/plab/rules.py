"""Movement rules: who must (or may) move on each turn."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import product
from typing import Iterator, Sequence

from .graphs import Graph


class CopRule(IntEnum):
    FREE_ALL = 0
    MUST_MOVE_ALL = 1
    AT_LEAST_ONE = 2
    AT_MOST_ONE = 3


class RobberRule(IntEnum):
    FREE = 0
    MUST_MOVE = 1


@dataclass(frozen=True)
class MovementRule:
    cop_rule: CopRule
    robber_rule: RobberRule

    @property
    def name(self) -> str:
        for key, rule in PRESETS.items():
            if rule == self:
                return key
        return f"{self.cop_rule.name}/{self.robber_rule.name}"

    @property
    def has_must_move(self) -> bool:
        return self.cop_rule == CopRule.MUST_MOVE_ALL or self.robber_rule == RobberRule.MUST_MOVE

    @property
    def uses_flag(self) -> bool:
        return self.cop_rule in (CopRule.AT_LEAST_ONE, CopRule.AT_MOST_ONE)

    def __str__(self) -> str:
        return self.name

    # -- legality -----------------------------------------------------------

    def robber_moves(self, g: Graph, r: int) -> tuple[int, ...]:
        if self.robber_rule == RobberRule.FREE:
            return tuple(sorted(g.adj[r] + (r,)))
        return g.adj[r]

    def legal_robber_move(self, g: Graph, r: int, r2: int) -> bool:
        return r2 in g.adj[r] or (r2 == r and self.robber_rule == RobberRule.FREE)

    def legal_cop_round(self, g: Graph, old: Sequence[int], new: Sequence[int]) -> bool:
        """Whether per-cop positions ``old -> new`` form one legal cop turn."""
        if len(old) != len(new):
            return False
        moved = 0
        for a, b in zip(old, new):
            if a == b:
                continue
            if not g.has_edge(a, b):
                return False
            moved += 1
        if self.cop_rule == CopRule.MUST_MOVE_ALL:
            return moved == len(old)
        if self.cop_rule == CopRule.AT_LEAST_ONE:
            return moved >= 1
        if self.cop_rule == CopRule.AT_MOST_ONE:
            return moved <= 1
        return True

    def cop_rounds(self, g: Graph, cops: Sequence[int]) -> Iterator[tuple[int, ...]]:
        """All legal per-cop outcomes of one cop turn, in lexicographic order."""
        if self.cop_rule == CopRule.MUST_MOVE_ALL:
            options = [g.adj[c] for c in cops]
        else:
            options = [tuple(sorted(g.adj[c] + (c,))) for c in cops]
        for combo in product(*options):
            if self.legal_cop_round(g, cops, combo):
                yield combo


PASSIVE = MovementRule(CopRule.FREE_ALL, RobberRule.FREE)
FULLY_ACTIVE = MovementRule(CopRule.MUST_MOVE_ALL, RobberRule.MUST_MOVE)
ACTIVE = MovementRule(CopRule.AT_LEAST_ONE, RobberRule.MUST_MOVE)
LAZY = MovementRule(CopRule.AT_MOST_ONE, RobberRule.FREE)

PRESETS = {
    "passive": PASSIVE,
    "fully-active": FULLY_ACTIVE,
    "active": ACTIVE,
    "lazy": LAZY,
}
ALL_RULES = (PASSIVE, FULLY_ACTIVE, ACTIVE, LAZY)


def parse_rule(text: str) -> MovementRule:
    key = text.strip().lower().replace("_", "-")
    if key not in PRESETS:
        raise ValueError(f"unknown rule {text!r}; choose from {', '.join(PRESETS)}")
    return PRESETS[key]
