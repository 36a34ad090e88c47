"""算法模块"""

from .graph_core import Graph, DistanceSummary, build_graph, distance_summary, girth
from .invariants import closeness, generalized_closeness, compute_invariants
from .generators import TndSpec, t_tree

__all__ = [
    "Graph",
    "DistanceSummary",
    "build_graph",
    "distance_summary",
    "girth",
    "closeness",
    "generalized_closeness",
    "compute_invariants",
    "TndSpec",
    "t_tree",
]
