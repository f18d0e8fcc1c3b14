"""Cop and robber controllers."""

from .adapters import CoverLiftAdapter, DoublingAdapter, SamePartiteAdapter, ShadowPassiveAdapter
from .base import CopController, RobberController, StrategyError
from .blowup import BlowupRobber
from .cycles import odd_cycle_product_strategy
from .optimal import OptimalCop, OptimalRobber
from .outerplanar import OuterplanarCop
from .trees import TreePairCop, TreeProductCop, TreeProductRobber

__all__ = [
    "BlowupRobber",
    "CopController",
    "CoverLiftAdapter",
    "DoublingAdapter",
    "OptimalCop",
    "OptimalRobber",
    "OuterplanarCop",
    "RobberController",
    "SamePartiteAdapter",
    "ShadowPassiveAdapter",
    "StrategyError",
    "TreePairCop",
    "TreeProductCop",
    "TreeProductRobber",
    "odd_cycle_product_strategy",
]
