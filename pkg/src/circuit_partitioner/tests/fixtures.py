"""
测试用线路

WORKED_EXAMPLE: 6个量子比特的示例线路（k=4）

    g0 = cx(0,1)    依赖 {0,1}
    g1 = cx(2,3)    依赖 {2,3}
    g2 = cx(2,3)    依赖 {2,3}
    g3 = cx(3,4)    依赖 {2,3,4}
    g4 = cx(4,5)    依赖 {2,3,4,5}
    g5 = cx(2,4)    依赖 {2,3,4,5}
    g6 = cx(1,2)    超过k，不记录
    g7 = cx(1,3)    前驱未记录，不记录
"""

from typing import List

from circuit_partitioner.core.models import Circuit, Gate


def worked_example() -> Circuit:
    pairs = [(0, 1), (2, 3), (2, 3), (3, 4), (4, 5), (2, 4), (1, 2), (1, 3)]
    return Circuit(6, tuple(Gate('cx', pair) for pair in pairs))


def cx_chain(n: int) -> Circuit:
    """cx(0,1), cx(1,2), ..., cx(n-2,n-1)"""
    return Circuit(n, tuple(Gate('cx', (i, i + 1)) for i in range(n - 1)))


def circuit_of(num_qubits: int, specs: List[tuple]) -> Circuit:
    """由 (name, qubits) 或 (name, qubits, params) 元组构建线路"""
    gates = []
    for spec in specs:
        name, qubits = spec[0], spec[1]
        params = spec[2] if len(spec) > 2 else ()
        gates.append(Gate(name, tuple(qubits), tuple(params)))
    return Circuit(num_qubits, tuple(gates))
