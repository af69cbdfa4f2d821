"""
小规模实例的精确最优块数

状态为每条线已消耗的前缀长度。任一最优解的第一个块都可以替换为某个
min(k, 活跃比特数)大小比特集合在当前状态下的最大扩展而块数不增加，
因此只需在这些最大扩展之间做广度优先搜索
"""

import itertools
import logging
import time
from dataclasses import dataclass
from typing import List, Set, Tuple

from ..core.interfaces import ConfigManagerInterface
from ..core.models import Circuit
from .base import PartitionerError, resolve_k


logger = logging.getLogger(__name__)


class LimitExceededError(PartitionerError):
    """实例超出门数上限或时间预算"""
    pass


@dataclass(frozen=True)
class OracleLimits:
    """精确搜索的资源限制"""
    max_gates: int = 12
    time_budget: float = 30.0

    @classmethod
    def from_config(cls, config_manager: ConfigManagerInterface) -> 'OracleLimits':
        """从配置 oracle.max_gates / oracle.time_budget 读取限制"""
        return cls(
            max_gates=int(config_manager.get('oracle.max_gates', cls.max_gates)),
            time_budget=float(config_manager.get('oracle.time_budget', cls.time_budget)),
        )


State = Tuple[int, ...]


def _wire_chains(circuit: Circuit) -> List[List[int]]:
    chains: List[List[int]] = [[] for _ in range(circuit.num_qubits)]
    for index, gate in enumerate(circuit.gates):
        for qubit in gate.qubits:
            chains[qubit].append(index)
    return chains


def _maximal_expansion(circuit: Circuit, chains: List[List[int]],
                       state: State, group: Set[int]) -> State:
    """在给定状态下吸收所有只依赖于group的门，返回新状态"""
    prefix = list(state)
    progressed = True
    while progressed:
        progressed = False
        for wire in group:
            chain = chains[wire]
            while prefix[wire] < len(chain):
                gate_index = chain[prefix[wire]]
                qubits = circuit.gates[gate_index].qubits
                if not group.issuperset(qubits):
                    break
                if any(prefix[w] >= len(chains[w]) or chains[w][prefix[w]] != gate_index
                       for w in qubits):
                    break
                for w in qubits:
                    prefix[w] += 1
                progressed = True
    return tuple(prefix)


def brute_force_optimal(circuit: Circuit, k: int, limits: OracleLimits = OracleLimits()) -> int:
    """计算最少块数

    Args:
        circuit: 输入线路
        k: 每个块允许的最大量子比特数
        limits: 门数上限与时间预算（秒）

    Returns:
        int: 所有合法分区中的最少块数

    Raises:
        LimitExceededError: 门数超过上限或搜索超时
        GateArityExceedsKError: 存在作用比特数超过k的门
    """
    if len(circuit.gates) > limits.max_gates:
        raise LimitExceededError(
            f"门数 {len(circuit.gates)} 超过精确搜索上限 {limits.max_gates}"
        )
    effective_k = resolve_k(circuit, k)
    if not circuit.gates:
        return 0

    deadline = time.monotonic() + limits.time_budget
    chains = _wire_chains(circuit)
    goal: State = tuple(len(chain) for chain in chains)

    layer: Set[State] = {tuple(0 for _ in chains)}
    seen: Set[State] = set(layer)
    depth = 0

    while layer:
        depth += 1
        following: Set[State] = set()
        for state in layer:
            if time.monotonic() > deadline:
                raise LimitExceededError(f"精确搜索超过时间预算 {limits.time_budget}秒")
            live = [w for w, chain in enumerate(chains) if state[w] < len(chain)]
            size = min(effective_k, len(live))
            for group in itertools.combinations(live, size):
                reached = _maximal_expansion(circuit, chains, state, set(group))
                if reached == state or reached in seen:
                    continue
                if reached == goal:
                    logger.debug(f"精确搜索完成: {depth}个块, 访问{len(seen)}个状态")
                    return depth
                seen.add(reached)
                following.add(reached)
        layer = following

    # 每个非终态至少能吸收前沿上索引最小的门
    raise PartitionerError("精确搜索未能到达终态")
