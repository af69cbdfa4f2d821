"""
分区验证

只依赖原线路与分区结果本身的字段进行检查：
覆盖性、块大小、门的比特约束、块内顺序，以及按块展开后每条线上的门序列
"""

import logging
from collections import Counter
from typing import Dict, List, Tuple

from ..core.models import Circuit, PartitionedCircuit, Violation, ViolationKind, VerifyReport


logger = logging.getLogger(__name__)


def _check_coverage(circuit: Circuit, partitioned: PartitionedCircuit) -> List[Violation]:
    violations = []
    num_gates = len(circuit.gates)
    owners: Dict[int, List[int]] = {}

    for block_index, block in enumerate(partitioned.blocks):
        for gate_index in block.origin_indices:
            if not 0 <= gate_index < num_gates:
                violations.append(Violation(
                    ViolationKind.COVERAGE,
                    f"门索引 {gate_index} 不在线路范围内 (g={num_gates})",
                    block_index=block_index,
                ))
                continue
            owners.setdefault(gate_index, []).append(block_index)

    for gate_index in sorted(owners):
        if len(owners[gate_index]) > 1:
            violations.append(Violation(
                ViolationKind.COVERAGE,
                f"门 {gate_index} 出现在多个位置: 块 {owners[gate_index]}",
                block_index=owners[gate_index][1],
            ))

    missing = [i for i in range(num_gates) if i not in owners]
    if missing:
        preview = missing[:10]
        suffix = " ..." if len(missing) > 10 else ""
        violations.append(Violation(
            ViolationKind.COVERAGE,
            f"{len(missing)}个门未被任何块包含: {preview}{suffix}",
        ))
    return violations


def _check_blocks(circuit: Circuit, partitioned: PartitionedCircuit) -> List[Violation]:
    violations = []
    num_gates = len(circuit.gates)

    for block_index, block in enumerate(partitioned.blocks):
        if len(block.qubits) > partitioned.k:
            violations.append(Violation(
                ViolationKind.SIZE,
                f"块作用于{len(block.qubits)}个量子比特，超过k={partitioned.k}",
                block_index=block_index,
            ))

        indices = block.origin_indices
        if any(a >= b for a, b in zip(indices, indices[1:])):
            violations.append(Violation(
                ViolationKind.BLOCK_ORDER,
                f"块内门索引不是严格升序: {list(indices)}",
                block_index=block_index,
            ))

        in_range = [i for i in indices if 0 <= i < num_gates]
        for gate_index in in_range:
            gate = circuit.gates[gate_index]
            outside = sorted(set(gate.qubits) - block.qubits)
            if outside:
                violations.append(Violation(
                    ViolationKind.CONFINEMENT,
                    f"门 {gate_index} ({gate.name}) 作用于块外的量子比特 {outside}",
                    block_index=block_index,
                    qubit=outside[0],
                ))

        expected = tuple(circuit.gates[i] for i in in_range)
        if len(in_range) == len(indices) and tuple(block.gates) != expected:
            violations.append(Violation(
                ViolationKind.MISMATCH,
                "块中的门与原线路对应索引处的门不一致",
                block_index=block_index,
            ))
    return violations


def _check_wire_order(circuit: Circuit, partitioned: PartitionedCircuit) -> List[Violation]:
    violations = []
    num_gates = len(circuit.gates)

    original: Dict[int, List[int]] = {q: [] for q in range(circuit.num_qubits)}
    for index, gate in enumerate(circuit.gates):
        for qubit in gate.qubits:
            original[qubit].append(index)

    flattened: Dict[int, List[Tuple[int, int]]] = {q: [] for q in range(circuit.num_qubits)}
    for block_index, block in enumerate(partitioned.blocks):
        for gate_index in block.origin_indices:
            if not 0 <= gate_index < num_gates:
                continue
            for qubit in circuit.gates[gate_index].qubits:
                flattened[qubit].append((gate_index, block_index))

    for qubit in range(circuit.num_qubits):
        produced = [gate_index for gate_index, _ in flattened[qubit]]
        if produced == original[qubit]:
            continue
        position = next(
            (p for p, (a, b) in enumerate(zip(produced, original[qubit])) if a != b),
            min(len(produced), len(original[qubit])),
        )
        block_index = flattened[qubit][position][1] if position < len(produced) else None
        violations.append(Violation(
            ViolationKind.WIRE_ORDER,
            f"量子比特 {qubit} 上的门顺序与原线路不一致（第{position}个位置起）",
            block_index=block_index,
            qubit=qubit,
        ))
    return violations


def verify_partitioning(circuit: Circuit, partitioned: PartitionedCircuit) -> VerifyReport:
    """验证分区结果

    Args:
        circuit: 原线路
        partitioned: 待验证的分区

    Returns:
        VerifyReport: 违规列表为空时有效；无效分区不会抛出异常
    """
    violations: List[Violation] = []
    violations.extend(_check_coverage(circuit, partitioned))
    violations.extend(_check_blocks(circuit, partitioned))
    violations.extend(_check_wire_order(circuit, partitioned))

    report = VerifyReport(violations=violations)
    if report.valid:
        logger.debug(f"分区验证通过: {partitioned.num_blocks}个块")
    else:
        counts = Counter(kind.value for kind in report.kinds())
        logger.info(f"分区验证失败: {dict(counts)}")
    return report
