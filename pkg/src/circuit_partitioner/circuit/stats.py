"""
线路统计
"""

from ..core.models import Circuit, CircuitStats


def stats(circuit: Circuit) -> CircuitStats:
    """计算线路统计信息

    深度为沿量子比特线的最长依赖链长度：每个门的层级等于其所有线上
    前一个门层级的最大值加一

    Args:
        circuit: 待统计的线路

    Returns:
        CircuitStats: 量子比特数、门总数、双比特门数和深度
    """
    levels = [0] * circuit.num_qubits
    depth = 0
    two_qubit = 0

    for gate in circuit.gates:
        if gate.arity == 2:
            two_qubit += 1
        level = max(levels[q] for q in gate.qubits) + 1
        for q in gate.qubits:
            levels[q] = level
        depth = max(depth, level)

    return CircuitStats(
        num_qubits=circuit.num_qubits,
        total_gates=len(circuit.gates),
        two_qubit_gates=two_qubit,
        depth=depth,
    )


def format_stats(circuit_stats: CircuitStats) -> str:
    """格式化统计信息用于命令行输出"""
    return (
        f"量子比特数: {circuit_stats.num_qubits}, "
        f"门总数: {circuit_stats.total_gates}, "
        f"双比特门数: {circuit_stats.two_qubit_gates}, "
        f"深度: {circuit_stats.depth}"
    )
