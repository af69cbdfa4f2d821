"""
基准测试运行器

对 (线路, 方法, k) 的每个组合重复运行分区，记录计时中位数与块数，
每个结果在记录前都经过验证
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from ..circuit.generators import circuit_from_spec
from ..config.manager import ConfigManager
from ..core.models import BenchRecord, Circuit
from ..partition.base import PartitionerError, ResourceLimitError
from ..partition.manager import PartitionerRegistry, create_default_registry
from ..post.merge import merge_adjacent
from ..post.verify import verify_partitioning
from .analysis import median_time, records_frame


SUITES: Dict[str, Tuple[str, ...]] = {
    'standard': (
        'qft:5', 'qft:10', 'qft:20',
        'tfim:4:100', 'tfim:8:100', 'tfim:16:100', 'tfim:32:100',
        'qaoa:10:1:7', 'adder:4', 'heisenberg:8:50',
        'hlf:10', 'multiply:3', 'wstate:27',
    ),
    'structured': (
        'qft:5', 'qft:10', 'qft:20',
        'tfim:4:100', 'tfim:8:100', 'tfim:16:100', 'tfim:32:100',
    ),
}

STATUS_OK = 'ok'
STATUS_OK_PARALLEL = 'ok_parallel'
STATUS_INVALID = 'invalid'
STATUS_SKIPPED = 'skipped'
STATUS_LIMIT = 'limit'
STATUS_ERROR = 'error'


def resolve_suite(text: str) -> List[str]:
    """解析基准集合：内置名称或逗号分隔的生成器规格"""
    if text in SUITES:
        return list(SUITES[text])
    specs = [part.strip() for part in text.split(',') if part.strip()]
    if not specs:
        raise ValueError(f"基准集合为空: {text!r}")
    return specs


def parse_k_list(text: str) -> List[int]:
    """解析k列表，支持 "4,5" 与 "3-12" 两种写法"""
    values: List[int] = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        if '-' in part:
            low, high = (int(x) for x in part.split('-', 1))
            if low > high:
                raise ValueError(f"k范围无效: {part}")
            values.extend(range(low, high + 1))
        else:
            values.append(int(part))
    if not values or any(v < 1 for v in values):
        raise ValueError(f"k列表无效: {text!r}")
    return values


class BenchmarkRunner:
    """基准测试运行器"""

    def __init__(self, registry: Optional[PartitionerRegistry] = None,
                 config_manager: Optional[ConfigManager] = None,
                 repetitions: Optional[int] = None,
                 parallel_workers: Optional[int] = None):
        """初始化运行器

        Args:
            registry: 分区方法注册表
            config_manager: 配置管理器
            repetitions: 每个单元的重复次数，None时取配置 bench.repetitions
            parallel_workers: 并行线程数，None时取配置 bench.parallel_workers
        """
        self.logger = logging.getLogger(__name__)
        self.config_manager = config_manager or ConfigManager()
        self.registry = registry or create_default_registry(self.config_manager)
        if repetitions is None:
            repetitions = self.config_manager.get('bench.repetitions', 5)
        if parallel_workers is None:
            parallel_workers = self.config_manager.get('bench.parallel_workers', 1)
        self.repetitions = int(repetitions)
        self.parallel_workers = int(parallel_workers)
        if self.repetitions < 1:
            raise ValueError(f"重复次数必须为正整数: {self.repetitions}")
        if self.parallel_workers < 1:
            raise ValueError(f"并行线程数必须为正整数: {self.parallel_workers}")

    def run_cell(self, name: str, circuit: Circuit, method: str, k: int) -> BenchRecord:
        """运行单个 (线路, 方法, k) 单元"""
        record = BenchRecord(
            circuit=name, method=method, k=k,
            n=circuit.num_qubits, g=len(circuit.gates),
            blocks_raw=0, blocks_merged=0, time_s=0.0,
            reps=self.repetitions, status=STATUS_OK,
        )
        if circuit.max_arity > k:
            record.status = STATUS_SKIPPED
            record.reps = 0
            return record

        partitioner = self.registry.get(method)
        samples: List[float] = []
        try:
            for _ in range(self.repetitions):
                started = time.perf_counter()
                raw = partitioner.partition(circuit, k)
                samples.append(time.perf_counter() - started)
        except ResourceLimitError as e:
            self.logger.warning(f"{name} / {method} / k={k}: {e}")
            record.status = STATUS_LIMIT
            return record
        except PartitionerError as e:
            self.logger.error(f"{name} / {method} / k={k}: {e}")
            record.status = STATUS_ERROR
            return record

        merged = merge_adjacent(raw)
        record.blocks_raw = raw.num_blocks
        record.blocks_merged = merged.num_blocks
        record.time_s = median_time(samples)

        if not (verify_partitioning(circuit, raw).valid and verify_partitioning(circuit, merged).valid):
            self.logger.error(f"{name} / {method} / k={k}: 分区验证失败")
            record.status = STATUS_INVALID
        return record

    def run(self, specs: Sequence[str], ks: Sequence[int],
            methods: Sequence[str]) -> List[BenchRecord]:
        """运行所有单元

        Args:
            specs: 生成器规格列表
            ks: k列表
            methods: 方法名称列表

        Returns:
            List[BenchRecord]: 顺序为 线路 × 方法 × k
        """
        for method in methods:
            self.registry.get(method)

        circuits = [circuit_from_spec(spec) for spec in specs]
        cells = [
            (name, circuit, method, k)
            for name, circuit in circuits
            for method in methods
            for k in ks
        ]
        self.logger.info(
            f"开始基准测试: {len(circuits)}个线路 × {len(methods)}种方法 × {len(ks)}个k值, "
            f"每单元重复{self.repetitions}次"
        )

        if self.parallel_workers <= 1:
            return [self.run_cell(*cell) for cell in cells]

        self.logger.warning("并行模式下的计时结果不可比较，相应记录标记为 ok_parallel")
        with ThreadPoolExecutor(max_workers=self.parallel_workers) as executor:
            records = list(executor.map(lambda cell: self.run_cell(*cell), cells))
        for record in records:
            if record.status == STATUS_OK:
                record.status = STATUS_OK_PARALLEL
        return records

    @staticmethod
    def write_csv(records: Sequence[BenchRecord], csv_path: str) -> None:
        """以追加模式写入CSV，只有新文件才写表头"""
        path = Path(csv_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        write_header = not path.exists() or path.stat().st_size == 0
        frame = records_frame(records)
        frame.to_csv(path, mode='a', header=write_header, index=False,
                     encoding='utf-8', float_format='%.6f')

    @staticmethod
    def has_failures(records: Sequence[BenchRecord]) -> bool:
        """是否存在验证失败的记录"""
        return any(record.status == STATUS_INVALID for record in records)
