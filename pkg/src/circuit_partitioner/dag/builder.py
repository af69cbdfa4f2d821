"""
线路依赖图（DAG）构建

每个量子比特对应一条"线"：以该比特的源节点开头，依次连接作用于该比特的门节点。
已分区的门通过GateMask标记，剩余线路的各种遍历都跳过被标记的门
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from ..core.models import Circuit


logger = logging.getLogger(__name__)


class NodeKind(Enum):
    """节点类型"""
    SOURCE = "source"
    GATE = "gate"


@dataclass(frozen=True)
class NodeId:
    """DAG节点标识

    源节点的index为量子比特索引，门节点的index为门在线路中的索引
    """
    kind: NodeKind
    index: int

    @classmethod
    def source(cls, qubit: int) -> 'NodeId':
        return cls(NodeKind.SOURCE, qubit)

    @classmethod
    def gate(cls, index: int) -> 'NodeId':
        return cls(NodeKind.GATE, index)

    @property
    def is_source(self) -> bool:
        return self.kind is NodeKind.SOURCE

    def __str__(self) -> str:
        prefix = 'q' if self.is_source else 'g'
        return f"{prefix}{self.index}"


@dataclass(frozen=True, eq=False)
class CircuitDag:
    """线路的逐线DAG

    wires[w] 为作用于量子比特w的门索引序列（严格递增），
    positions[i] 记录门i在其每条线上的位置
    """
    num_qubits: int
    gate_qubits: Tuple[Tuple[int, ...], ...]
    wires: Tuple[Tuple[int, ...], ...]
    positions: Tuple[Dict[int, int], ...]

    @property
    def num_gates(self) -> int:
        return len(self.gate_qubits)

    def qubits_of(self, gate_index: int) -> Tuple[int, ...]:
        return self.gate_qubits[gate_index]

    def position(self, gate_index: int, wire: int) -> int:
        """门在指定线上的位置

        Raises:
            ValueError: 门不作用于该线
        """
        try:
            return self.positions[gate_index][wire]
        except KeyError:
            raise ValueError(f"门 g{gate_index} 不作用于量子比特 {wire}") from None

    def chain(self, wire: int) -> List[NodeId]:
        """返回以源节点开头的完整线链"""
        return [NodeId.source(wire)] + [NodeId.gate(i) for i in self.wires[wire]]

    def successors(self, node: NodeId, mask: Optional['GateMask'] = None) -> Dict[int, Optional[NodeId]]:
        """节点在其每条线上的后继（跳过被标记的门）"""
        if node.is_source:
            return {node.index: next_node(self, node, node.index, mask)}
        return {
            wire: next_node(self, node, wire, mask)
            for wire in self.gate_qubits[node.index]
        }


class GateMask:
    """已分区门的集合

    集合只增不减，因此每条线上"第一个未标记门"的位置可以缓存为只前进的游标
    """

    def __init__(self, num_gates: int, indices: Iterable[int] = ()):
        self.num_gates = num_gates
        self._members = set()
        self._cursors: Dict[int, int] = {}
        self.update(indices)

    def add(self, index: int):
        """标记一个门

        Raises:
            ValueError: 索引超出范围
        """
        if not 0 <= index < self.num_gates:
            raise ValueError(f"门索引超出范围: {index} (g={self.num_gates})")
        self._members.add(index)

    def update(self, indices: Iterable[int]):
        for index in indices:
            self.add(index)

    def __contains__(self, index: object) -> bool:
        return index in self._members

    def __len__(self) -> int:
        return len(self._members)

    @property
    def is_full(self) -> bool:
        return len(self._members) == self.num_gates

    @property
    def members(self) -> frozenset:
        return frozenset(self._members)

    def head(self, dag: CircuitDag, wire: int) -> int:
        """指定线上第一个未标记门的位置（线耗尽时等于线长）"""
        chain = dag.wires[wire]
        cursor = self._cursors.get(wire, 0)
        while cursor < len(chain) and chain[cursor] in self._members:
            cursor += 1
        self._cursors[wire] = cursor
        return cursor


def build_dag(circuit: Circuit) -> CircuitDag:
    """根据线路构建DAG

    Args:
        circuit: 输入线路

    Returns:
        CircuitDag: 各线链按门列表顺序排列
    """
    wires: List[List[int]] = [[] for _ in range(circuit.num_qubits)]
    positions: List[Dict[int, int]] = []

    for index, gate in enumerate(circuit.gates):
        placed = {}
        for qubit in gate.qubits:
            placed[qubit] = len(wires[qubit])
            wires[qubit].append(index)
        positions.append(placed)

    dag = CircuitDag(
        num_qubits=circuit.num_qubits,
        gate_qubits=tuple(gate.qubits for gate in circuit.gates),
        wires=tuple(tuple(chain) for chain in wires),
        positions=tuple(positions),
    )
    logger.debug(f"构建DAG: {dag.num_qubits}条线, {dag.num_gates}个门节点")
    return dag


def next_gate(dag: CircuitDag, gate_index: int, wire: int,
              mask: Optional[GateMask] = None) -> Optional[int]:
    """门在线上之后的第一个未标记门的索引"""
    chain = dag.wires[wire]
    for position in range(dag.position(gate_index, wire) + 1, len(chain)):
        candidate = chain[position]
        if mask is None or candidate not in mask:
            return candidate
    return None


def previous_gate(dag: CircuitDag, gate_index: int, wire: int,
                  mask: Optional[GateMask] = None) -> Optional[int]:
    """门在线上之前的第一个未标记门的索引（剩余线路中的前驱）"""
    chain = dag.wires[wire]
    lowest = mask.head(dag, wire) if mask is not None else 0
    for position in range(dag.position(gate_index, wire) - 1, lowest - 1, -1):
        candidate = chain[position]
        if mask is None or candidate not in mask:
            return candidate
    return None


def next_node(dag: CircuitDag, node: NodeId, wire: int,
              mask: Optional[GateMask] = None) -> Optional[NodeId]:
    """节点在指定线上的下一个未标记门节点

    Args:
        dag: 线路DAG
        node: 源节点或门节点，必须位于该线上
        wire: 量子比特索引
        mask: 已分区门集合，None表示空集

    Returns:
        Optional[NodeId]: 下一个门节点，不存在时为None

    Raises:
        ValueError: 节点不在该线上
    """
    if not 0 <= wire < dag.num_qubits:
        raise ValueError(f"量子比特索引超出范围: {wire}")

    if node.is_source:
        if node.index != wire:
            raise ValueError(f"源节点 {node} 不在量子比特 {wire} 的线上")
        chain = dag.wires[wire]
        if mask is None:
            return NodeId.gate(chain[0]) if chain else None
        position = mask.head(dag, wire)
        return NodeId.gate(chain[position]) if position < len(chain) else None

    following = next_gate(dag, node.index, wire, mask)
    return NodeId.gate(following) if following is not None else None


def frontier(dag: CircuitDag, mask: Optional[GateMask] = None) -> Dict[int, Optional[int]]:
    """各线上第一个未标记门的索引，线耗尽时为None"""
    result: Dict[int, Optional[int]] = {}
    for wire in range(dag.num_qubits):
        found = next_node(dag, NodeId.source(wire), wire, mask)
        result[wire] = found.index if found is not None else None
    return result
