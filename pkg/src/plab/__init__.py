"""Exact solver and strategy workbench for cops and robbers under movement rules."""

from .graphs import Graph, GraphError
from .rules import ACTIVE, FULLY_ACTIVE, LAZY, PASSIVE, MovementRule, parse_rule
from .solver import COP_WIN, ROBBER_WIN, SolveTable, SolverError, Unknown, cop_number, solve, wins_from_all_placements

__version__ = "0.1.0"

__all__ = [
    "ACTIVE",
    "COP_WIN",
    "FULLY_ACTIVE",
    "Graph",
    "GraphError",
    "LAZY",
    "MovementRule",
    "PASSIVE",
    "ROBBER_WIN",
    "SolveTable",
    "SolverError",
    "Unknown",
    "cop_number",
    "parse_rule",
    "solve",
    "wins_from_all_placements",
]
