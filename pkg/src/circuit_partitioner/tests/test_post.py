"""
相邻块合并与分区验证测试
"""

import unittest

from circuit_partitioner.circuit.generators import gen_qft, gen_random, gen_tfim
from circuit_partitioner.core.models import Block, PartitionedCircuit, ViolationKind
from circuit_partitioner.partition.gtqcp import gtqcp_partition
from circuit_partitioner.partition.quick import quick_partition
from circuit_partitioner.post.merge import merge_adjacent
from circuit_partitioner.post.verify import verify_partitioning
from circuit_partitioner.tests.fixtures import circuit_of, cx_chain


def partition_of(circuit, k, groups):
    """按给定门索引分组构造分区（不做任何检查）"""
    blocks = tuple(Block.from_indices(circuit, indices) for indices in groups)
    return PartitionedCircuit(blocks=blocks, num_qubits=circuit.num_qubits, k=k)


class TestMergeAdjacent(unittest.TestCase):
    """相邻块合并测试"""

    def test_neighbours_merge(self):
        circuit = cx_chain(3)
        merged = merge_adjacent(partition_of(circuit, 3, [[0], [1]]))
        self.assertEqual([b.origin_indices for b in merged.blocks], [(0, 1)])

    def test_independent_block_moves_forward(self):
        circuit = circuit_of(4, [('cx', [0, 1]), ('cx', [2, 3]), ('cx', [0, 1])])
        merged = merge_adjacent(partition_of(circuit, 2, [[0], [1], [2]]))
        self.assertEqual([b.origin_indices for b in merged.blocks], [(1,), (0, 2)])
        self.assertTrue(verify_partitioning(circuit, merged).valid)

    def test_dependent_block_moves_after(self):
        circuit = circuit_of(5, [('cx', [0, 1]), ('ccx', [1, 2, 3]), ('cx', [0, 4])])
        merged = merge_adjacent(partition_of(circuit, 3, [[0], [1], [2]]))
        self.assertEqual([b.origin_indices for b in merged.blocks], [(0, 2), (1,)])
        self.assertEqual(merged.blocks[0].qubits, frozenset({0, 1, 4}))
        self.assertTrue(verify_partitioning(circuit, merged).valid)

    def test_blocked_by_dependency(self):
        circuit = circuit_of(4, [('cx', [0, 1]), ('cx', [1, 2]), ('cx', [2, 3])])
        merged = merge_adjacent(partition_of(circuit, 2, [[0], [1], [2]]))
        self.assertEqual(merged.num_blocks, 3)

    def test_empty(self):
        circuit = circuit_of(2, [])
        self.assertEqual(merge_adjacent(partition_of(circuit, 2, [])).num_blocks, 0)

    def test_valid_and_not_larger(self):
        circuits = [gen_qft(6), gen_tfim(6, 3)] + [gen_random(6, 50, 0.6, s) for s in range(10)]
        for circuit in circuits:
            for k in (2, 3, 4):
                for raw in (quick_partition(circuit, k), gtqcp_partition(circuit, k)):
                    merged = merge_adjacent(raw)
                    self.assertLessEqual(merged.num_blocks, raw.num_blocks)
                    self.assertTrue(verify_partitioning(circuit, merged).valid)
                    self.assertEqual(merge_adjacent(merged).to_dict(), merged.to_dict())


class TestVerifyPartitioning(unittest.TestCase):
    """分区验证测试"""

    def setUp(self):
        self.circuit = cx_chain(3)

    def test_valid(self):
        report = verify_partitioning(self.circuit, partition_of(self.circuit, 2, [[0], [1]]))
        self.assertTrue(report.valid)
        self.assertEqual(report.violations, [])

    def test_duplicate_gate(self):
        report = verify_partitioning(self.circuit, partition_of(self.circuit, 3, [[0], [0, 1]]))
        self.assertFalse(report.valid)
        self.assertIn(ViolationKind.COVERAGE, report.kinds())

    def test_missing_gate(self):
        report = verify_partitioning(self.circuit, partition_of(self.circuit, 2, [[0]]))
        self.assertEqual(report.kinds()[0], ViolationKind.COVERAGE)
        self.assertNotIn(ViolationKind.SIZE, report.kinds())

    def test_oversized_block(self):
        report = verify_partitioning(self.circuit, partition_of(self.circuit, 2, [[0, 1]]))
        self.assertEqual(report.kinds(), [ViolationKind.SIZE])
        self.assertEqual(report.violations[0].block_index, 0)

    def test_swapped_blocks(self):
        report = verify_partitioning(self.circuit, partition_of(self.circuit, 2, [[1], [0]]))
        self.assertEqual(report.kinds(), [ViolationKind.WIRE_ORDER])
        self.assertEqual(report.violations[0].qubit, 1)

    def test_gate_outside_block_qubits(self):
        block = Block(qubits=frozenset({0}), gates=(self.circuit.gates[0],), origin_indices=(0,))
        partitioned = PartitionedCircuit(
            blocks=(block, Block.from_indices(self.circuit, [1])), num_qubits=3, k=2,
        )
        report = verify_partitioning(self.circuit, partitioned)
        self.assertEqual(report.kinds(), [ViolationKind.CONFINEMENT])
        self.assertEqual(report.violations[0].qubit, 1)

    def test_unsorted_indices(self):
        block = Block(
            qubits=frozenset({0, 1, 2}),
            gates=(self.circuit.gates[1], self.circuit.gates[0]),
            origin_indices=(1, 0),
        )
        partitioned = PartitionedCircuit(blocks=(block,), num_qubits=3, k=3)
        report = verify_partitioning(self.circuit, partitioned)
        self.assertIn(ViolationKind.BLOCK_ORDER, report.kinds())

    def test_out_of_range_index(self):
        block = Block(qubits=frozenset({0, 1}), gates=(self.circuit.gates[0],), origin_indices=(0, 9))
        partitioned = PartitionedCircuit(
            blocks=(block, Block.from_indices(self.circuit, [1])), num_qubits=3, k=2,
        )
        report = verify_partitioning(self.circuit, partitioned)
        self.assertEqual(report.kinds(), [ViolationKind.COVERAGE])


if __name__ == '__main__':
    unittest.main()
