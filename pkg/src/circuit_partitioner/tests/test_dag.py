"""
DAG构建与依赖传播测试
"""

import json
import unittest

from circuit_partitioner.circuit.generators import gen_random
from circuit_partitioner.core.models import Circuit, Gate
from circuit_partitioner.dag.builder import GateMask, NodeId, build_dag, frontier, next_node
from circuit_partitioner.dag.dependencies import dump_analysis, propagate_dependencies
from circuit_partitioner.tests.fixtures import circuit_of, cx_chain, worked_example


class TestBuildDag(unittest.TestCase):
    """DAG构建测试"""

    def test_empty_circuit(self):
        dag = build_dag(Circuit(3))
        self.assertEqual(dag.num_gates, 0)
        for wire in range(3):
            self.assertEqual(dag.chain(wire), [NodeId.source(wire)])
            self.assertIsNone(next_node(dag, NodeId.source(wire), wire))

    def test_single_gate(self):
        dag = build_dag(Circuit(2, (Gate('cx', (0, 1)),)))
        self.assertEqual(dag.successors(NodeId.source(0)), {0: NodeId.gate(0)})
        self.assertEqual(dag.successors(NodeId.source(1)), {1: NodeId.gate(0)})
        self.assertEqual(dag.successors(NodeId.gate(0)), {0: None, 1: None})

    def test_wire_chains(self):
        dag = build_dag(worked_example())
        self.assertEqual(dag.wires, (
            (0,), (0, 6, 7), (1, 2, 5, 6), (1, 2, 3, 7), (3, 4, 5), (4,),
        ))
        # 每个门出现在 arity 条线上
        for index, qubits in enumerate(dag.gate_qubits):
            appearances = sum(index in chain for chain in dag.wires)
            self.assertEqual(appearances, len(qubits))

    def test_dump_analysis(self):
        circuit = worked_example()
        dag = build_dag(circuit)
        deps = propagate_dependencies(dag, GateMask(len(circuit.gates)), 4)
        document = json.loads(json.dumps(dump_analysis(dag, deps)))
        self.assertEqual(document['wires']['1'], ['q1', 'g0', 'g6', 'g7'])
        self.assertEqual(document['deps']['3'], [2, 3, 4])
        self.assertNotIn('6', document['deps'])
        self.assertEqual(len(document['nodes']), 6 + 8)


class TestNextNode(unittest.TestCase):
    """线上后继测试"""

    def setUp(self):
        self.circuit = circuit_of(2, [('h', [0]), ('h', [0]), ('cx', [0, 1])])
        self.dag = build_dag(self.circuit)

    def test_last_gate_has_no_successor(self):
        self.assertIsNone(next_node(self.dag, NodeId.gate(2), 0))
        self.assertIsNone(next_node(self.dag, NodeId.gate(2), 1))

    def test_immediate_successor(self):
        self.assertEqual(next_node(self.dag, NodeId.gate(0), 0), NodeId.gate(1))
        self.assertEqual(next_node(self.dag, NodeId.source(1), 1), NodeId.gate(2))

    def test_skips_masked(self):
        mask = GateMask(3, [0])
        self.assertEqual(next_node(self.dag, NodeId.source(0), 0, mask), NodeId.gate(1))
        mask.add(1)
        self.assertEqual(next_node(self.dag, NodeId.source(0), 0, mask), NodeId.gate(2))

    def test_wire_not_incident(self):
        with self.assertRaises(ValueError):
            next_node(self.dag, NodeId.gate(0), 1)
        with self.assertRaises(ValueError):
            next_node(self.dag, NodeId.source(0), 1)

    def test_mask_range(self):
        with self.assertRaises(ValueError):
            GateMask(3, [3])


class TestFrontier(unittest.TestCase):
    """前沿测试"""

    def setUp(self):
        self.circuit = worked_example()
        self.dag = build_dag(self.circuit)

    def test_empty_mask(self):
        self.assertEqual(frontier(self.dag, GateMask(8)), {0: 0, 1: 0, 2: 1, 3: 1, 4: 3, 5: 4})

    def test_full_mask(self):
        mask = GateMask(8, range(8))
        self.assertTrue(mask.is_full)
        self.assertTrue(all(g is None for g in frontier(self.dag, mask).values()))

    def test_after_first_block(self):
        mask = GateMask(8, [1, 2, 3, 4, 5])
        self.assertEqual(frontier(self.dag, mask), {0: 0, 1: 0, 2: 6, 3: 7, 4: None, 5: None})


class TestPropagateDependencies(unittest.TestCase):
    """依赖传播测试"""

    def test_worked_example(self):
        circuit = worked_example()
        dag = build_dag(circuit)
        deps = propagate_dependencies(dag, GateMask(8), 4)

        # 第一批门
        self.assertEqual(deps.get(0), {0, 1})
        self.assertEqual(deps.get(1), {2, 3})
        # 第二批门
        self.assertEqual(deps.get(2), {2, 3})
        self.assertEqual(deps.get(3), {2, 3, 4})
        self.assertEqual(deps.get(4), {2, 3, 4, 5})
        self.assertEqual(deps.get(5), {2, 3, 4, 5})
        self.assertNotIn(6, deps)
        self.assertNotIn(7, deps)
        self.assertEqual(deps.live_qubits, [0, 1, 2, 3, 4, 5])

    def test_residual_after_mask(self):
        circuit = worked_example()
        dag = build_dag(circuit)
        deps = propagate_dependencies(dag, GateMask(8, [1, 2, 3, 4, 5]), 4)
        self.assertEqual(deps.deps, {
            0: frozenset({0, 1}),
            6: frozenset({0, 1, 2}),
            7: frozenset({0, 1, 2, 3}),
        })
        self.assertEqual(deps.live_qubits, [0, 1, 2, 3])

    def test_single_qubit_gates(self):
        circuit = circuit_of(3, [('h', [0]), ('x', [1]), ('h', [0]), ('t', [2])])
        dag = build_dag(circuit)
        for k in (1, 2, 3):
            deps = propagate_dependencies(dag, GateMask(4), k)
            self.assertEqual(deps.deps, {0: {0}, 1: {1}, 2: {0}, 3: {2}})

    def test_chain_truncation(self):
        dag = build_dag(cx_chain(4))
        deps = propagate_dependencies(dag, GateMask(3), 2)
        self.assertEqual(deps.deps, {0: frozenset({0, 1})})

    def test_full_mask(self):
        dag = build_dag(cx_chain(4))
        deps = propagate_dependencies(dag, GateMask(3, range(3)), 2)
        self.assertEqual(len(deps), 0)

    def test_invalid_k(self):
        dag = build_dag(cx_chain(3))
        with self.assertRaises(ValueError):
            propagate_dependencies(dag, GateMask(2), 0)

    def test_containment_and_monotone_truncation(self):
        for seed in range(20):
            circuit = gen_random(6, 40, 0.6, seed)
            dag = build_dag(circuit)
            previous = None
            for k in range(1, 7):
                deps = propagate_dependencies(dag, GateMask(len(circuit.gates)), k)
                for index, qubits in deps.deps.items():
                    self.assertTrue(set(circuit.gates[index].qubits) <= qubits)
                    self.assertLessEqual(len(qubits), k)
                if previous is not None:
                    for index, qubits in previous.deps.items():
                        self.assertEqual(deps.deps[index], qubits)
                previous = deps

    def test_matches_reverse_search(self):
        for seed in range(30):
            circuit = gen_random(5, 40, 0.6, seed)
            dag = build_dag(circuit)
            for masked in (0, 10):
                mask = GateMask(len(circuit.gates), range(masked))
                for k in (2, 3, 4):
                    deps = propagate_dependencies(dag, mask, k)
                    for index in range(masked, len(circuit.gates)):
                        expected = backward_qubits(circuit, masked, index)
                        if len(expected) <= k:
                            self.assertEqual(deps.deps.get(index), expected)
                        else:
                            self.assertNotIn(index, deps)


def backward_qubits(circuit: Circuit, masked: int, index: int) -> frozenset:
    """沿未标记前驱反向搜索得到的比特集合（前masked个门视为已分区）"""
    seen = {index}
    stack = [index]
    qubits = set()
    while stack:
        current = stack.pop()
        qubits.update(circuit.gates[current].qubits)
        for wire in circuit.gates[current].qubits:
            for earlier in range(current - 1, masked - 1, -1):
                if wire in circuit.gates[earlier].qubits:
                    if earlier not in seen:
                        seen.add(earlier)
                        stack.append(earlier)
                    break
    return frozenset(qubits)


if __name__ == '__main__':
    unittest.main()
