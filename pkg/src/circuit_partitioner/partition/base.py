"""
分区器公共部分

包含错误类型、k参数校验、候选组扩展与评分，以及GTQCP与Scan共用的贪心外层循环
"""

import logging
from abc import abstractmethod
from typing import Dict, Iterable, List, Optional, Set

from ..core.interfaces import PartitionerInterface
from ..core.models import Block, CandidatePartition, Circuit, PartitionedCircuit, QubitGroup
from ..dag.builder import CircuitDag, GateMask, build_dag
from ..dag.dependencies import DependencyMap, propagate_dependencies


class PartitionerError(Exception):
    """分区相关错误"""
    pass


class GateArityExceedsKError(PartitionerError):
    """存在作用比特数超过k的门，线路无法分区"""

    def __init__(self, gate_index: int, arity: int, k: int):
        self.gate_index = gate_index
        self.arity = arity
        self.k = k
        super().__init__(f"第{gate_index}个门作用于{arity}个量子比特，超过了k={k}")


class ResourceLimitError(PartitionerError):
    """候选组数量超过上限"""
    pass


class UnknownMethodError(PartitionerError):
    """未知的分区方法"""
    pass


def resolve_k(circuit: Circuit, k: int) -> int:
    """校验k并返回实际使用的k

    k大于量子比特数时截断为量子比特数

    Raises:
        ValueError: k < 1
        GateArityExceedsKError: 存在作用比特数超过k的门
    """
    if k < 1:
        raise ValueError(f"k必须为正整数: {k}")
    for index, gate in enumerate(circuit.gates):
        if gate.arity > k:
            raise GateArityExceedsKError(index, gate.arity, k)
    if circuit.num_qubits > 0:
        return min(k, circuit.num_qubits)
    return k


def expand_group(dag: CircuitDag, mask: GateMask, group: QubitGroup) -> CandidatePartition:
    """从前沿出发扩展量子比特组

    门被吸收当且仅当其所有比特都在组内，且它在各条线上的剩余前驱都已被吸收；
    反复扫描直到不动点

    Args:
        dag: 线路DAG
        mask: 已分区门集合
        group: 候选量子比特组

    Returns:
        CandidatePartition: 吸收的门索引升序排列，得分为门数
    """
    members = group.as_set
    cursors: Dict[int, int] = {w: mask.head(dag, w) for w in group}

    def head(wire: int) -> Optional[int]:
        chain = dag.wires[wire]
        position = cursors[wire]
        while position < len(chain) and chain[position] in mask:
            position += 1
        cursors[wire] = position
        return chain[position] if position < len(chain) else None

    absorbed: List[int] = []
    changed = True
    while changed:
        changed = False
        for wire in group:
            while True:
                gate_index = head(wire)
                if gate_index is None:
                    break
                qubits = dag.qubits_of(gate_index)
                if not members.issuperset(qubits):
                    break
                if any(head(w) != gate_index for w in qubits):
                    break
                absorbed.append(gate_index)
                for w in qubits:
                    cursors[w] += 1
                changed = True

    indices = tuple(sorted(absorbed))
    return CandidatePartition(qubits=group, gate_indices=indices, score=len(indices))


def score(candidate: CandidatePartition) -> int:
    """候选分区得分：包含的门数"""
    return len(candidate.gate_indices)


def select_best(candidates: Iterable[CandidatePartition]) -> Optional[CandidatePartition]:
    """选出得分最高的非空候选

    同分时比特数少者优先，其次为字典序最小的比特列表
    """
    best = None
    best_key = None
    for candidate in candidates:
        if candidate.is_empty:
            continue
        key = (-score(candidate),) + candidate.qubits.tie_break_key()
        if best_key is None or key < best_key:
            best, best_key = candidate, key
    return best


class GreedyPartitioner(PartitionerInterface):
    """贪心分区器基类

    每轮：重新计算依赖集合，生成候选组，扩展并评分，保留最佳候选为一个块，
    直到所有门都被分区
    """

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__module__)

    @abstractmethod
    def candidate_groups(self, dag: CircuitDag, mask: GateMask,
                         deps: DependencyMap, k: int) -> Set[QubitGroup]:
        """生成本轮的候选量子比特组"""
        pass

    def partition(self, circuit: Circuit, k: int) -> PartitionedCircuit:
        """对线路进行分区

        Args:
            circuit: 输入线路
            k: 每个块允许的最大量子比特数

        Returns:
            PartitionedCircuit: 依赖一致的块序列

        Raises:
            ValueError: k < 1
            GateArityExceedsKError: 存在作用比特数超过k的门
        """
        effective_k = resolve_k(circuit, k)
        dag = build_dag(circuit)
        mask = GateMask(len(circuit.gates))
        blocks: List[Block] = []

        while not mask.is_full:
            deps = propagate_dependencies(dag, mask, effective_k)
            groups = self.candidate_groups(dag, mask, deps, effective_k)

            expansions: Dict[QubitGroup, CandidatePartition] = {}
            for group in sorted(groups, key=QubitGroup.tie_break_key):
                if group not in expansions:
                    expansions[group] = expand_group(dag, mask, group)

            best = select_best(expansions.values())
            if best is None:
                # 没有可用候选时，退化为前沿上索引最小的门单独成块
                first = min(g for g in deps.frontier_gate.values() if g is not None)
                indices = (first,)
                self.logger.debug(f"第{len(blocks)}轮无可用候选，退化为单门块 g{first}")
            else:
                assert all(best.score >= c.score for c in expansions.values())
                indices = best.gate_indices
                self.logger.debug(
                    f"第{len(blocks)}轮: 候选组{len(expansions)}个, "
                    f"选择 {list(best.qubits)} 得分 {best.score}"
                )

            blocks.append(Block.from_indices(circuit, indices))
            mask.update(indices)

        self.logger.info(
            f"{self.name}分区完成: {len(circuit.gates)}个门 -> {len(blocks)}个块 (k={k})"
        )
        return PartitionedCircuit(blocks=tuple(blocks), num_qubits=circuit.num_qubits, k=k)
