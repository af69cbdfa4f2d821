"""
命令行接口测试
"""

import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from circuit_partitioner.circuit.generators import gen_qft
from circuit_partitioner.circuit.qasm import load_qasm_file
from circuit_partitioner.cli import EXIT_FAILURE, EXIT_OK, main


def run_cli(*argv):
    """运行命令行并捕获输出

    Returns:
        (exit_code, stdout, stderr)
    """
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class TestCli(unittest.TestCase):
    """命令行接口测试"""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.qasm_file = os.path.join(self.temp_dir.name, "qft4.qasm")
        code, _, _ = run_cli('gen', 'qft:4', '--output', self.qasm_file)
        self.assertEqual(code, EXIT_OK)

    def tearDown(self):
        self.temp_dir.cleanup()

    def path(self, name: str) -> str:
        return os.path.join(self.temp_dir.name, name)

    def test_gen_to_file(self):
        self.assertEqual(load_qasm_file(self.qasm_file), gen_qft(4))

    def test_gen_to_stdout(self):
        code, stdout, stderr = run_cli('gen', 'qft:3')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(stdout.startswith('OPENQASM 2.0;'))
        self.assertIn('qreg q[3];', stdout)

    def test_gen_malformed_spec(self):
        code, _, stderr = run_cli('gen', 'qft:x')
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('错误', stderr)

    def test_partition_to_stdout(self):
        code, stdout, _ = run_cli('partition', '--gen', 'qft:5', '-k', '3')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(stdout)
        self.assertEqual(data['k'], 3)
        covered = sorted(i for block in data['blocks'] for i in block['gate_indices'])
        self.assertEqual(covered, list(range(17)))

    def test_partition_to_file(self):
        output = self.path('result.json')
        qasm_dir = self.path('blocks')
        code, stdout, _ = run_cli(
            'partition', '-i', self.qasm_file, '-k', '2', '-m', 'quick',
            '--merge', '-o', output, '--qasm-dir', qasm_dir,
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn(output, stdout)
        with open(output, encoding='utf-8') as f:
            data = json.load(f)
        self.assertEqual(len(os.listdir(qasm_dir)), len(data['blocks']))

    def test_partition_invalid_method(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(['partition', '--gen', 'qft:3', '-m', 'metis'])
        self.assertEqual(ctx.exception.code, 2)

    def test_partition_missing_file(self):
        code, _, stderr = run_cli('partition', '-i', self.path('missing.qasm'))
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('错误', stderr)

    def test_partition_gate_too_wide(self):
        code, _, stderr = run_cli('partition', '--gen', 'adder:2', '-k', '2')
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('k=2', stderr)

    def test_verify(self):
        output = self.path('result.json')
        run_cli('partition', '-i', self.qasm_file, '-k', '2', '-o', output)

        code, stdout, _ = run_cli('verify', self.qasm_file, output)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(stdout)['valid'])

        with open(output, encoding='utf-8') as f:
            data = json.load(f)
        data['blocks'] = data['blocks'][:-1]
        tampered = self.path('tampered.json')
        with open(tampered, 'w', encoding='utf-8') as f:
            json.dump(data, f)

        code, stdout, _ = run_cli('verify', self.qasm_file, tampered)
        self.assertEqual(code, EXIT_FAILURE)
        report = json.loads(stdout)
        self.assertFalse(report['valid'])
        self.assertIn('coverage', [v['kind'] for v in report['violations']])

    def test_verify_unreadable_partition(self):
        broken = self.path('broken.json')
        with open(broken, 'w', encoding='utf-8') as f:
            f.write('{not json')
        code, _, stderr = run_cli('verify', self.qasm_file, broken)
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('错误', stderr)

    def test_bench(self):
        csv_path = self.path('bench.csv')
        code, stdout, _ = run_cli(
            'bench', '--suite', 'qft:3,tfim:3:2', '--k', '2-3',
            '--methods', 'gtqcp,quick', '--reps', '1', '--csv', csv_path, '--summary',
        )
        self.assertEqual(code, EXIT_OK)
        with open(csv_path, encoding='utf-8') as f:
            lines = f.read().splitlines()
        self.assertEqual(len(lines), 1 + 2 * 2 * 2)
        self.assertIn('mean_improvement', stdout)
        self.assertIn('k_response', stdout)

    def test_partition_help_names_output_streams(self):
        stdout = io.StringIO()
        with redirect_stdout(stdout), redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(['partition', '--help'])
        self.assertEqual(ctx.exception.code, 0)
        self.assertIn('标准错误', stdout.getvalue().replace('\n', ''))

    def test_partition_summary_on_stderr(self):
        code, stdout, stderr = run_cli('partition', '--gen', 'tfim:2:1', '-k', '2', '-m', 'quick')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(stdout)['blocks']), 1)
        self.assertIn('1个块', stderr)

    def test_partition_unsupported_extension(self):
        other = self.path('qft4.txt')
        with open(self.qasm_file, encoding='utf-8') as src, open(other, 'w', encoding='utf-8') as dst:
            dst.write(src.read())
        code, _, stderr = run_cli('partition', '-i', other, '-k', '2')
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('不支持的文件格式', stderr)

    def test_invalid_config_rejected(self):
        config_path = self.path('partitioner.yaml')
        with open(config_path, 'w', encoding='utf-8') as f:
            f.write('partition:\n  default_method: metis\n')
        code, _, stderr = run_cli('partition', '--gen', 'qft:3', '--config', config_path)
        self.assertEqual(code, EXIT_FAILURE)
        self.assertIn('partition.default_method', stderr)

    def test_non_positive_counts_are_usage_errors(self):
        for argv in (['bench', '--reps', '0'], ['bench', '--parallel', '0'],
                     ['partition', '--gen', 'qft:3', '-k', '0']):
            with self.subTest(argv=argv):
                with redirect_stderr(io.StringIO()):
                    with self.assertRaises(SystemExit) as ctx:
                        main(argv)
                self.assertEqual(ctx.exception.code, 2)

    def test_missing_command(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main([])
        self.assertEqual(ctx.exception.code, 2)


if __name__ == '__main__':
    unittest.main()
