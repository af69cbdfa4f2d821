"""
贪心拓扑感知分区（GTQCP）

候选组通过沿各量子比特线贪心前进生成：在合并后的依赖集合不超过k的前提下
走到最远的门，记录得到的组，再对组中新加入的每个比特递归探索
"""

from typing import List, Optional, Set, Tuple

from ..core.models import Circuit, PartitionedCircuit, QubitGroup
from ..dag.builder import CircuitDag, GateMask, NodeId, next_node
from ..dag.dependencies import DependencyMap
from .base import GreedyPartitioner


# 枚举轨迹事件：(事件, 起始比特, 组)
TraceEvent = Tuple[str, int, QubitGroup]


def _walk(dag: CircuitDag, mask: GateMask, deps: DependencyMap, k: int,
          qubit: int, inputs: frozenset) -> Optional[int]:
    """沿比特线前进，返回最后一个满足 |inputs ∪ deps| <= k 的门"""
    node = NodeId.source(qubit)
    last = None
    while True:
        following = next_node(dag, node, qubit, mask)
        if following is None:
            return last
        reached = deps.get(following.index)
        if reached is None or len(inputs | reached) > k:
            return last
        node = following
        last = following.index


def enumerate_from(dag: CircuitDag, mask: GateMask, deps: DependencyMap, k: int,
                   qubit: int, inputs: frozenset, results: Set[QubitGroup],
                   trace: Optional[List[TraceEvent]] = None):
    """从单个量子比特出发的递归枚举

    已记录过的组不再递归；新加入的比特按升序探索
    """
    last = _walk(dag, mask, deps, k, qubit, inputs)
    if last is None:
        return

    group = QubitGroup.of(inputs | deps.deps[last])
    if group in results:
        if trace is not None:
            trace.append(('duplicate', qubit, group))
        return

    results.add(group)
    if trace is not None:
        trace.append(('record', qubit, group))

    if len(group) < k:
        for added in sorted(group.as_set - inputs):
            enumerate_from(dag, mask, deps, k, added, inputs | {added}, results, trace)


def enumerate_groups(dag: CircuitDag, mask: GateMask, deps: DependencyMap, k: int,
                     trace: Optional[List[TraceEvent]] = None) -> Set[QubitGroup]:
    """枚举本轮的候选量子比特组

    Args:
        dag: 线路DAG
        mask: 已分区门集合
        deps: 在同一mask与k下计算的依赖集合
        k: 组大小上限
        trace: 可选的事件列表，记录每次记录与重复发现

    Returns:
        Set[QubitGroup]: 去重后的候选组，每个组至少能吸收一个门
    """
    results: Set[QubitGroup] = set()
    for qubit in deps.live_qubits:
        enumerate_from(dag, mask, deps, k, qubit, frozenset((qubit,)), results, trace)
    return results


class GTQCPPartitioner(GreedyPartitioner):
    """贪心拓扑感知分区器"""

    name = "gtqcp"

    def candidate_groups(self, dag: CircuitDag, mask: GateMask,
                         deps: DependencyMap, k: int) -> Set[QubitGroup]:
        return enumerate_groups(dag, mask, deps, k)


def gtqcp_partition(circuit: Circuit, k: int) -> PartitionedCircuit:
    """使用GTQCP对线路分区"""
    return GTQCPPartitioner().partition(circuit, k)
