"""
快速基线分区器

按门索引顺序单遍扫描，把每个门放入最早的可容纳的开放块；
块的顺序即创建顺序，每条线上门所在块的编号单调不减
"""

import logging
from dataclasses import dataclass, field
from typing import List, Set

from ..core.interfaces import PartitionerInterface
from ..core.models import Block, Circuit, PartitionedCircuit
from .base import resolve_k


@dataclass
class OpenBlock:
    """构建中的块

    blocked_wires记录因后续门被放入更晚的块而不能再向本块追加门的线
    """
    qubits: Set[int] = field(default_factory=set)
    gate_indices: List[int] = field(default_factory=list)
    blocked_wires: Set[int] = field(default_factory=set)
    closed: bool = False

    def accepts(self, qubits, k: int) -> bool:
        if self.closed:
            return False
        if any(q in self.blocked_wires for q in qubits):
            return False
        return len(self.qubits.union(qubits)) <= k

    def block_wire(self, wire: int):
        self.blocked_wires.add(wire)
        if self.blocked_wires >= self.qubits:
            self.closed = True


class QuickPartitioner(PartitionerInterface):
    """快速分区器"""

    name = "quick"

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def partition(self, circuit: Circuit, k: int) -> PartitionedCircuit:
        """单遍分区

        Raises:
            ValueError: k < 1
            GateArityExceedsKError: 存在作用比特数超过k的门
        """
        effective_k = resolve_k(circuit, k)
        blocks: List[OpenBlock] = []
        open_indices: List[int] = []
        last_block = [-1] * circuit.num_qubits

        for index, gate in enumerate(circuit.gates):
            earliest = max(last_block[q] for q in gate.qubits)

            target = None
            for position in open_indices:
                if position >= earliest and blocks[position].accepts(gate.qubits, effective_k):
                    target = position
                    break

            if target is None:
                target = len(blocks)
                blocks.append(OpenBlock())
                open_indices.append(target)

            chosen = blocks[target]
            chosen.qubits.update(gate.qubits)
            chosen.gate_indices.append(index)

            for qubit in gate.qubits:
                previous = last_block[qubit]
                if previous != target and previous >= 0:
                    blocks[previous].block_wire(qubit)
                last_block[qubit] = target

            open_indices = [p for p in open_indices if not blocks[p].closed]

        result = tuple(Block.from_indices(circuit, b.gate_indices) for b in blocks)
        self.logger.info(
            f"{self.name}分区完成: {len(circuit.gates)}个门 -> {len(result)}个块 (k={k})"
        )
        return PartitionedCircuit(blocks=result, num_qubits=circuit.num_qubits, k=k)


def quick_partition(circuit: Circuit, k: int) -> PartitionedCircuit:
    """使用快速方法对线路分区"""
    return QuickPartitioner().partition(circuit, k)
