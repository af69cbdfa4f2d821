"""
基准测试运行器与结果分析测试
"""

import os
import tempfile
import unittest

import pandas as pd

from circuit_partitioner.bench.analysis import (
    improvement_ratio,
    loglog_slope,
    max_adjacent_ratio,
    median_time,
    scaling_summary,
    summarize,
)
from circuit_partitioner.bench.runner import (
    SUITES,
    BenchmarkRunner,
    parse_k_list,
    resolve_suite,
)
from circuit_partitioner.circuit.generators import gen_adder, gen_qft
from circuit_partitioner.core.interfaces import PartitionerInterface
from circuit_partitioner.core.models import BenchRecord, PartitionedCircuit
from circuit_partitioner.partition.base import PartitionerError, UnknownMethodError
from circuit_partitioner.partition.manager import PartitionerRegistry, create_default_registry
from circuit_partitioner.partition.scan import ScanPartitioner
from circuit_partitioner.tests.fixtures import worked_example


class EmptyPartitioner(PartitionerInterface):
    """返回空分区的错误实现"""

    name = "empty"

    def partition(self, circuit, k):
        return PartitionedCircuit(blocks=(), num_qubits=circuit.num_qubits, k=k)


class FailingPartitioner(PartitionerInterface):
    name = "failing"

    def partition(self, circuit, k):
        raise PartitionerError("内部错误")


class TestParsing(unittest.TestCase):
    """参数解析测试"""

    def test_k_list(self):
        self.assertEqual(parse_k_list("4,5"), [4, 5])
        self.assertEqual(parse_k_list("3-6"), [3, 4, 5, 6])
        self.assertEqual(parse_k_list("2, 4-5"), [2, 4, 5])

    def test_k_list_invalid(self):
        for text in ("", "0", "5-3", "a"):
            with self.assertRaises(ValueError):
                parse_k_list(text)

    def test_suites(self):
        self.assertEqual(resolve_suite('standard'), list(SUITES['standard']))
        self.assertIn('tfim:32:100', resolve_suite('structured'))
        self.assertEqual(resolve_suite("qft:3, tfim:2:1"), ['qft:3', 'tfim:2:1'])
        with self.assertRaises(ValueError):
            resolve_suite(" , ")


class TestBenchmarkRunner(unittest.TestCase):
    """基准测试运行器测试"""

    def setUp(self):
        self.registry = create_default_registry()
        self.registry.register('empty', EmptyPartitioner())
        self.registry.register('failing', FailingPartitioner())
        self.registry.register('tiny_scan', ScanPartitioner(max_groups=1))
        self.runner = BenchmarkRunner(registry=self.registry, repetitions=2)

    def test_ok_cell(self):
        record = self.runner.run_cell('qft:5', gen_qft(5), 'gtqcp', 4)
        self.assertEqual(record.status, 'ok')
        self.assertEqual((record.n, record.g, record.reps), (5, 17, 2))
        self.assertGreater(record.blocks_raw, 0)
        self.assertLessEqual(record.blocks_merged, record.blocks_raw)
        self.assertGreaterEqual(record.time_s, 0.0)

    def test_skipped_cell(self):
        record = self.runner.run_cell('adder:2', gen_adder(2), 'quick', 2)
        self.assertEqual(record.status, 'skipped')
        self.assertEqual(record.reps, 0)

    def test_limit_cell(self):
        record = self.runner.run_cell('example', worked_example(), 'tiny_scan', 4)
        self.assertEqual(record.status, 'limit')

    def test_error_cell(self):
        record = self.runner.run_cell('qft:3', gen_qft(3), 'failing', 2)
        self.assertEqual(record.status, 'error')

    def test_invalid_cell(self):
        record = self.runner.run_cell('qft:3', gen_qft(3), 'empty', 2)
        self.assertEqual(record.status, 'invalid')
        self.assertTrue(BenchmarkRunner.has_failures([record]))

    def test_run_order(self):
        records = self.runner.run(['qft:3', 'tfim:2:1'], [2, 3], ['gtqcp', 'quick'])
        cells = [(r.circuit, r.method, r.k) for r in records]
        self.assertEqual(cells, [
            ('qft:3', 'gtqcp', 2), ('qft:3', 'gtqcp', 3),
            ('qft:3', 'quick', 2), ('qft:3', 'quick', 3),
            ('tfim:2:1', 'gtqcp', 2), ('tfim:2:1', 'gtqcp', 3),
            ('tfim:2:1', 'quick', 2), ('tfim:2:1', 'quick', 3),
        ])
        self.assertFalse(BenchmarkRunner.has_failures(records))

    def test_parallel_marks_records(self):
        runner = BenchmarkRunner(registry=self.registry, repetitions=1, parallel_workers=2)
        records = runner.run(['qft:4'], [2, 3], ['quick'])
        self.assertEqual([r.status for r in records], ['ok_parallel', 'ok_parallel'])

    def test_unknown_method(self):
        with self.assertRaises(UnknownMethodError):
            self.runner.run(['qft:3'], [2], ['metis'])

    def test_invalid_repetitions(self):
        with self.assertRaises(ValueError):
            BenchmarkRunner(registry=PartitionerRegistry(), repetitions=-1)

    def test_zero_repetitions_rejected(self):
        with self.assertRaises(ValueError):
            BenchmarkRunner(registry=self.registry, repetitions=0)
        with self.assertRaises(ValueError):
            BenchmarkRunner(registry=self.registry, parallel_workers=0)

    def test_csv_header_written_once(self):
        records = self.runner.run(['qft:3'], [2], ['quick'])
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, 'out', 'bench.csv')
            BenchmarkRunner.write_csv(records, path)
            BenchmarkRunner.write_csv(records, path)

            frame = pd.read_csv(path)
            self.assertEqual(list(frame.columns), list(BenchRecord.CSV_COLUMNS))
            self.assertEqual(len(frame), 2)
            with open(path, encoding='utf-8') as f:
                self.assertEqual(sum(1 for line in f if line.startswith('circuit,')), 1)


class TestAnalysis(unittest.TestCase):
    """结果分析测试"""

    def test_median_time(self):
        self.assertEqual(median_time([3.0, 1.0, 2.0]), 2.0)
        with self.assertRaises(ValueError):
            median_time([])

    def test_loglog_slope(self):
        self.assertAlmostEqual(loglog_slope([1, 2, 4, 8], [3, 6, 12, 24]), 1.0)
        self.assertAlmostEqual(loglog_slope([1, 2, 4], [1, 4, 16]), 2.0)
        with self.assertRaises(ValueError):
            loglog_slope([1], [1])
        with self.assertRaises(ValueError):
            loglog_slope([0, 1], [1, 2])

    def test_max_adjacent_ratio(self):
        self.assertAlmostEqual(max_adjacent_ratio([1.0, 2.0, 3.0]), 2.0)
        with self.assertRaises(ValueError):
            max_adjacent_ratio([1.0])

    def test_improvement_ratio(self):
        self.assertAlmostEqual(improvement_ratio(10, 8), 0.2)
        self.assertEqual(improvement_ratio(0, 5), 0.0)

    def test_summarize(self):
        def record(circuit, method, k, merged, status='ok'):
            return BenchRecord(circuit, method, k, 4, 10, merged, merged, 0.1, 1, status)

        records = [
            record('a', 'quick', 4, 10), record('a', 'gtqcp', 4, 8),
            record('b', 'quick', 4, 5), record('b', 'gtqcp', 4, 6),
            record('a', 'quick', 5, 4), record('a', 'gtqcp', 5, 4),
            record('c', 'quick', 4, 0, status='skipped'), record('c', 'gtqcp', 4, 0, status='skipped'),
        ]
        table = summarize(records)
        self.assertEqual(list(table['k']), [4, 5])
        self.assertEqual(list(table['cells']), [2, 1])
        self.assertAlmostEqual(table['mean_improvement'][0], 0.0)
        self.assertAlmostEqual(table['win_rate'][0], 0.5)
        self.assertAlmostEqual(table['total_improvement'][0], 1 / 15)
        self.assertAlmostEqual(table['win_rate'][1], 1.0)

    def test_summarize_without_pairs(self):
        table = summarize([BenchRecord('a', 'quick', 4, 4, 10, 3, 3, 0.1, 1)])
        self.assertTrue(table.empty)

    def test_scaling_summary(self):
        def record(circuit, method, k, g, time_s, status='ok'):
            return BenchRecord(circuit, method, k, 8, g, 5, 5, time_s, 3, status)

        records = [
            record('tfim:8:100', 'gtqcp', 3, 1400, 1.0),
            record('tfim:8:100', 'gtqcp', 4, 1400, 1.5),
            record('tfim:8:100', 'gtqcp', 5, 1400, 2.25),
            record('tfim:8:10', 'quick', 4, 10, 0.1),
            record('tfim:8:100', 'quick', 4, 100, 1.0),
            record('tfim:8:1000', 'quick', 4, 1000, 10.0),
            record('qft:5', 'quick', 4, 17, 0.0, status='limit'),
        ]
        table = scaling_summary(records)
        self.assertEqual(len(table), 2)

        k_response = table[table['analysis'] == 'k_response']
        self.assertEqual(list(k_response['subject']), ['tfim:8:100'])
        self.assertEqual(list(k_response['method']), ['gtqcp'])
        self.assertAlmostEqual(float(k_response['value'].iloc[0]), 1.5)

        slope = table[table['analysis'] == 'gate_slope']
        self.assertEqual(list(slope['subject']), ['tfim k=4'])
        self.assertEqual(int(slope['points'].iloc[0]), 3)
        self.assertAlmostEqual(float(slope['value'].iloc[0]), 1.0)

    def test_scaling_summary_empty(self):
        self.assertTrue(scaling_summary([]).empty)


if __name__ == '__main__':
    unittest.main()
