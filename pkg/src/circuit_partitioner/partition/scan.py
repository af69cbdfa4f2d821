"""
扫描式基线分区器

候选组为剩余耦合图中所有不超过k个顶点的连通子集；
扩展、评分与选择规则与GTQCP相同
"""

from typing import List, Set

import networkx as nx

from ..core.models import Circuit, PartitionedCircuit, QubitGroup
from ..dag.builder import CircuitDag, GateMask
from ..dag.dependencies import DependencyMap
from .base import GreedyPartitioner, ResourceLimitError


DEFAULT_MAX_GROUPS = 1_000_000


def coupling_graph(dag: CircuitDag, mask: GateMask) -> nx.Graph:
    """由未标记的门构建剩余耦合图

    顶点为仍有未标记门的量子比特，同一门作用的两个比特之间连边
    """
    graph = nx.Graph()
    for index, qubits in enumerate(dag.gate_qubits):
        if index in mask:
            continue
        graph.add_nodes_from(qubits)
        for i, a in enumerate(qubits):
            for b in qubits[i + 1:]:
                graph.add_edge(a, b)
    return graph


def connected_groups(graph: nx.Graph, k: int,
                     max_groups: int = DEFAULT_MAX_GROUPS) -> Set[QubitGroup]:
    """枚举所有大小不超过k的连通顶点子集

    每个子集以其最小顶点为根、通过排他邻域扩展，恰好生成一次

    Raises:
        ResourceLimitError: 子集数量超过max_groups
    """
    results: Set[QubitGroup] = set()

    def extend(subset: List[int], extension: Set[int], root: int, closed: Set[int]):
        results.add(QubitGroup.of(subset))
        if len(results) > max_groups:
            raise ResourceLimitError(f"候选组数量超过上限 {max_groups}")
        if len(subset) == k:
            return
        pending = set(extension)
        while pending:
            vertex = min(pending)
            pending.remove(vertex)
            exclusive = {
                u for u in graph.neighbors(vertex)
                if u > root and u not in closed
            }
            extend(subset + [vertex], pending | exclusive, root,
                   closed | exclusive | {vertex})

    for root in sorted(graph.nodes):
        neighbours = {u for u in graph.neighbors(root) if u > root}
        extend([root], neighbours, root, {root} | set(graph.neighbors(root)))

    return results


class ScanPartitioner(GreedyPartitioner):
    """扫描式分区器：穷举耦合图上的连通比特组"""

    name = "scan"

    def __init__(self, max_groups: int = DEFAULT_MAX_GROUPS):
        super().__init__()
        self.max_groups = max_groups

    def candidate_groups(self, dag: CircuitDag, mask: GateMask,
                         deps: DependencyMap, k: int) -> Set[QubitGroup]:
        graph = coupling_graph(dag, mask)
        return connected_groups(graph, k, self.max_groups)


def scan_partition(circuit: Circuit, k: int,
                   max_groups: int = DEFAULT_MAX_GROUPS) -> PartitionedCircuit:
    """使用扫描式方法对线路分区"""
    return ScanPartitioner(max_groups=max_groups).partition(circuit, k)
