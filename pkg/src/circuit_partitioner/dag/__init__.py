"""
线路DAG与依赖分析
"""

from .builder import CircuitDag, GateMask, NodeId, NodeKind, build_dag, frontier, next_node
from .dependencies import DependencyMap, dump_analysis, propagate_dependencies

__all__ = [
    "CircuitDag",
    "GateMask",
    "NodeId",
    "NodeKind",
    "build_dag",
    "frontier",
    "next_node",
    "DependencyMap",
    "dump_analysis",
    "propagate_dependencies",
]
