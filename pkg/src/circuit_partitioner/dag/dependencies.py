"""
量子比特依赖集合计算

从剩余线路的前沿出发按拓扑序向前传播：每个门的依赖集合为其自身作用的比特
与其各线上未标记前驱的依赖集合之并。集合超过k的门不被记录，传播也不再经过它
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Optional

from .builder import CircuitDag, GateMask, frontier, next_gate, previous_gate


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DependencyMap:
    """依赖集合映射

    deps只包含依赖集合不超过k的门；frontier_gate记录每条线上第一个未标记门
    """
    deps: Dict[int, FrozenSet[int]]
    frontier_gate: Dict[int, Optional[int]]
    k: int

    def __contains__(self, gate_index: object) -> bool:
        return gate_index in self.deps

    def __len__(self) -> int:
        return len(self.deps)

    def get(self, gate_index: int) -> Optional[FrozenSet[int]]:
        return self.deps.get(gate_index)

    @property
    def live_qubits(self) -> List[int]:
        """仍有未标记门的量子比特（升序）"""
        return sorted(q for q, g in self.frontier_gate.items() if g is not None)


def propagate_dependencies(dag: CircuitDag, mask: GateMask, k: int) -> DependencyMap:
    """计算剩余线路中各门的k截断依赖集合

    以最小堆按门索引升序访问节点（门索引顺序是合法的拓扑序），
    只有在所有剩余前驱都已记录时，门才可能被记录

    Args:
        dag: 线路DAG
        mask: 已分区门集合
        k: 依赖集合大小上限

    Returns:
        DependencyMap: 依赖集合与前沿

    Raises:
        ValueError: k < 1
    """
    if k < 1:
        raise ValueError(f"k必须为正整数: {k}")

    front = frontier(dag, mask)
    deps: Dict[int, FrozenSet[int]] = {}

    heap: List[int] = []
    queued = set()
    for gate_index in front.values():
        if gate_index is None or gate_index in queued:
            continue
        if all(front[w] == gate_index for w in dag.qubits_of(gate_index)):
            heapq.heappush(heap, gate_index)
            queued.add(gate_index)

    while heap:
        gate_index = heapq.heappop(heap)
        qubits = dag.qubits_of(gate_index)

        merged = set(qubits)
        complete = True
        for wire in qubits:
            predecessor = previous_gate(dag, gate_index, wire, mask)
            if predecessor is None:
                continue
            parent = deps.get(predecessor)
            if parent is None:
                complete = False
                break
            merged |= parent

        if not complete or len(merged) > k:
            continue

        deps[gate_index] = frozenset(merged)
        for wire in qubits:
            successor = next_gate(dag, gate_index, wire, mask)
            if successor is not None and successor not in queued:
                heapq.heappush(heap, successor)
                queued.add(successor)

    logger.debug(f"依赖传播完成: k={k}, 记录 {len(deps)} 个门")
    return DependencyMap(deps=deps, frontier_gate=front, k=k)


def dump_analysis(dag: CircuitDag, dependency_map: Optional[DependencyMap] = None) -> Dict[str, Any]:
    """将DAG与依赖集合导出为可JSON序列化的字典"""
    document: Dict[str, Any] = {
        'num_qubits': dag.num_qubits,
        'nodes': (
            [{'id': f"q{q}", 'kind': 'source', 'index': q} for q in range(dag.num_qubits)]
            + [
                {'id': f"g{i}", 'kind': 'gate', 'index': i, 'qubits': list(qubits)}
                for i, qubits in enumerate(dag.gate_qubits)
            ]
        ),
        'wires': {str(w): [str(node) for node in dag.chain(w)] for w in range(dag.num_qubits)},
    }
    if dependency_map is not None:
        document['k'] = dependency_map.k
        document['deps'] = {
            str(index): sorted(qubits) for index, qubits in sorted(dependency_map.deps.items())
        }
        document['frontier'] = {str(q): g for q, g in sorted(dependency_map.frontier_gate.items())}
    return document
