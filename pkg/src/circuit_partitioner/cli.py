"""
命令行入口

子命令：
    partition  对QASM文件或生成的线路进行分区
    bench      运行基准测试并写入CSV
    verify     验证分区JSON
    gen        生成基准线路QASM
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .circuit.generators import GeneratorSpecError, circuit_from_spec
from .circuit.qasm import QasmError, emit_qasm
from .circuit.stats import format_stats, stats
from .config.manager import ConfigManager
from .core.app import PartitionerApp
from .core.models import PartitionedCircuit
from .bench.analysis import scaling_summary, summarize
from .bench.runner import BenchmarkRunner, parse_k_list, resolve_suite
from .partition.base import PartitionerError
from .post.verify import verify_partitioning


EXIT_OK = 0
EXIT_FAILURE = 1

DOMAIN_ERRORS = (QasmError, GeneratorSpecError, PartitionerError, FileNotFoundError, OSError, ValueError)

PARTITION_DESCRIPTION = (
    '对QASM文件或生成的线路进行分区。'
    '未指定 --output 时，分区JSON写到标准输出，块数与用时写到标准错误；'
    '指定 --output 时，块数与用时写到标准输出。'
)


def positive_int(text: str) -> int:
    """argparse参数类型：正整数"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"不是整数: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"必须为正整数: {value}")
    return value


def setup_logging(config_manager: ConfigManager, verbose: bool = False):
    """根据配置初始化日志"""
    level_name = 'DEBUG' if verbose else str(config_manager.get('logging.level', 'INFO')).upper()
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_file = config_manager.get('logging.file')
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, level_name, logging.INFO),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        handlers=handlers,
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='circuit-partitioner',
        description='量子线路分区工具：将线路划分为作用于不超过k个量子比特的凸子线路',
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='配置文件路径 (YAML)')
    common.add_argument('--verbose', '-v', action='store_true', help='输出调试日志')
    subparsers = parser.add_subparsers(dest='command', required=True)

    p_partition = subparsers.add_parser(
        'partition', parents=[common], help='对线路进行分区',
        description=PARTITION_DESCRIPTION,
    )
    source = p_partition.add_mutually_exclusive_group(required=True)
    source.add_argument('--input', '-i', help='输入QASM文件路径')
    source.add_argument('--gen', '-g', help='生成器规格，如 qft:5 或 tfim:8:100')
    p_partition.add_argument('--k', '-k', type=positive_int, help='每个块的最大量子比特数')
    p_partition.add_argument('--method', '-m', choices=ConfigManager.METHOD_NAMES, help='分区方法')
    p_partition.add_argument('--output', '-o', help='分区JSON输出路径（默认输出到标准输出）')
    p_partition.add_argument('--qasm-dir', help='每个块的QASM输出目录')
    p_partition.add_argument('--merge', action='store_true', help='执行相邻块合并')

    p_bench = subparsers.add_parser('bench', parents=[common], help='运行基准测试')
    p_bench.add_argument('--suite', help='内置集合名称 (standard, structured) 或逗号分隔的生成器规格')
    p_bench.add_argument('--k', default='4,5', help='k列表，如 4,5 或 3-12')
    p_bench.add_argument('--methods', default='gtqcp,quick', help='逗号分隔的方法列表')
    p_bench.add_argument('--reps', type=positive_int, help='每个单元的重复次数')
    p_bench.add_argument('--csv', default='bench_results.csv', help='CSV输出路径（追加模式）')
    p_bench.add_argument('--parallel', type=positive_int, help='并行线程数（计时结果不可比较）')
    p_bench.add_argument('--summary', action='store_true',
                         help='输出按k汇总的改进比例，以及k响应与门数增长的计时分析')

    p_verify = subparsers.add_parser('verify', parents=[common], help='验证分区结果')
    p_verify.add_argument('circuit', help='原线路QASM文件路径')
    p_verify.add_argument('partition', help='分区JSON文件路径')

    p_gen = subparsers.add_parser('gen', parents=[common], help='生成基准线路')
    p_gen.add_argument('spec', help='生成器规格，如 qft:5, tfim:8:100, random:5:30:0.5:7')
    p_gen.add_argument('--output', '-o', help='QASM输出路径（默认输出到标准输出）')

    return parser


def cmd_partition(args, config_manager: ConfigManager) -> int:
    app = PartitionerApp(config_manager=config_manager)
    if args.input:
        is_valid, message = app.validate_input_file(args.input)
        if not is_valid:
            raise ValueError(f"输入文件无效 {args.input}: {message}")
        name, circuit = app.load_circuit(args.input)
    else:
        name, circuit = circuit_from_spec(args.gen)

    partitioned, result = app.partition(
        circuit, k=args.k, method=args.method, merge=args.merge, source=name
    )
    qasm_dir = args.qasm_dir
    if qasm_dir is None and config_manager.get('output.emit_block_qasm') and args.output:
        qasm_dir = str(Path(args.output).with_suffix('')) + '_blocks'
    document = app.write_partition(partitioned, output_file=args.output, qasm_dir=qasm_dir)

    summary = (
        f"{name}: {result.num_gates}个门, {result.num_qubits}个量子比特, "
        f"方法 {result.method}, k={result.k} -> {result.blocks_merged}个块 "
        f"(合并前 {result.blocks_raw}), 用时 {result.elapsed_seconds:.6f} 秒"
    )
    if args.output:
        print(summary)
        print(f"分区结果已保存到: {args.output}")
    else:
        print(document)
        print(summary, file=sys.stderr)

    if not result.valid:
        print("错误: 分区结果未通过验证", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_bench(args, config_manager: ConfigManager) -> int:
    specs = resolve_suite(args.suite or config_manager.get('bench.suite', 'standard'))
    ks = parse_k_list(args.k)
    methods = [m.strip() for m in args.methods.split(',') if m.strip()]

    runner = BenchmarkRunner(
        config_manager=config_manager,
        repetitions=args.reps,
        parallel_workers=args.parallel,
    )
    records = runner.run(specs, ks, methods)
    runner.write_csv(records, args.csv)

    for record in records:
        print(
            f"{record.circuit:<14} {record.method:<6} k={record.k:<3} "
            f"{record.blocks_raw:>6} -> {record.blocks_merged:<6} "
            f"{record.time_s:.6f}s  {record.status}"
        )
    print(f"{len(records)}条记录已写入: {args.csv}")

    if args.summary:
        table = summarize(records)
        if table.empty:
            print("没有可比较的结果")
        else:
            print(table.to_string(index=False))

        scaling = scaling_summary(records)
        if not scaling.empty:
            print(scaling.to_string(index=False))

    return EXIT_FAILURE if runner.has_failures(records) else EXIT_OK


def cmd_verify(args, config_manager: ConfigManager) -> int:
    app = PartitionerApp(config_manager=config_manager)
    is_valid, message = app.validate_input_file(args.circuit)
    if not is_valid:
        raise ValueError(f"线路文件无效 {args.circuit}: {message}")
    _, circuit = app.load_circuit(args.circuit)
    try:
        with open(args.partition, 'r', encoding='utf-8') as f:
            data = json.load(f)
        partitioned = PartitionedCircuit.from_dict(data, circuit)
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise ValueError(f"无法读取分区文件 {args.partition}: {e}") from e

    report = verify_partitioning(circuit, partitioned)
    print(report.to_json(indent=config_manager.get('output.json_indent', 2)))
    return EXIT_OK if report.valid else EXIT_FAILURE


def cmd_gen(args, config_manager: ConfigManager) -> int:
    _, circuit = circuit_from_spec(args.spec)
    text = emit_qasm(circuit)
    summary = format_stats(stats(circuit))
    if args.output:
        path = Path(args.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
        print(summary)
        print(f"线路已保存到: {args.output}")
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    'partition': cmd_partition,
    'bench': cmd_bench,
    'verify': cmd_verify,
    'gen': cmd_gen,
}


def main(argv: Optional[List[str]] = None) -> int:
    """主函数

    Returns:
        int: 退出码，0为成功，1为领域错误；用法错误由argparse以退出码2结束
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    config_manager = ConfigManager(args.config)
    setup_logging(config_manager, args.verbose)

    if not config_manager.validate_config():
        print("错误: 配置无效，请检查配置文件与 PARTITION_* 环境变量", file=sys.stderr)
        return EXIT_FAILURE

    try:
        return COMMANDS[args.command](args, config_manager)
    except DOMAIN_ERRORS as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
