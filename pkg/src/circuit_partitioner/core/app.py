"""
主应用程序控制器

协调 线路加载 -> 分区 -> 合并 -> 验证 -> 输出 的完整流程
"""

import time
from pathlib import Path
from typing import Optional, Tuple

from ..circuit.generators import circuit_from_spec, is_generator_spec
from ..circuit.qasm import emit_qasm, load_qasm_file
from ..config.manager import ConfigManager
from ..partition.manager import PartitionerRegistry, create_default_registry
from ..post.merge import merge_adjacent
from ..post.verify import verify_partitioning
from .interfaces import ProgressTrackerInterface
from .models import Circuit, PartitionedCircuit, PartitionResult


class PartitionerApp:
    """线路分区主应用程序"""

    def __init__(
        self,
        registry: Optional[PartitionerRegistry] = None,
        progress_tracker: Optional[ProgressTrackerInterface] = None,
        config_manager: Optional[ConfigManager] = None
    ):
        """初始化应用程序

        Args:
            registry: 分区方法注册表（可选，默认注册三种内置方法）
            progress_tracker: 进度跟踪器（可选）
            config_manager: 配置管理器（可选）
        """
        self.config_manager = config_manager or ConfigManager()
        self.registry = registry or create_default_registry(self.config_manager)
        self.progress_tracker = progress_tracker

    def load_circuit(self, source: str) -> Tuple[str, Circuit]:
        """加载线路

        Args:
            source: QASM文件路径或生成器规格（如 "qft:5"）

        Returns:
            (name, circuit): 线路名称与线路

        Raises:
            FileNotFoundError: 文件不存在
            GeneratorSpecError: 生成器规格无效
            QasmError: QASM解析失败
        """
        if is_generator_spec(source) and not Path(source).exists():
            return circuit_from_spec(source)

        path = Path(source)
        if not path.exists():
            raise FileNotFoundError(f"输入文件不存在: {source}")
        return path.stem, load_qasm_file(str(path))

    def partition(self, circuit: Circuit, k: Optional[int] = None,
                  method: Optional[str] = None, merge: bool = False,
                  source: str = "") -> Tuple[PartitionedCircuit, PartitionResult]:
        """对线路进行分区

        计时只包含分区调用本身

        Args:
            circuit: 输入线路
            k: 每个块的最大量子比特数，None时取配置 partition.default_k
            method: 分区方法名称，None时取配置 partition.default_method
            merge: 是否执行相邻块合并
            source: 线路来源描述，写入结果统计

        Returns:
            (partitioned, result): 分区结果（merge为True时为合并后的结果）与运行统计

        Raises:
            UnknownMethodError: 未知的分区方法
            GateArityExceedsKError: 存在作用比特数超过k的门
            ResourceLimitError: Scan候选组数量超限
        """
        k = int(k if k is not None else self.config_manager.get('partition.default_k', 4))
        method = method or self.config_manager.get('partition.default_method', 'gtqcp')

        if self.progress_tracker:
            self.progress_tracker.set_total_steps(3)
            self.progress_tracker.update_progress("分区", 0.0, f"使用 {method} 方法, k={k}")

        try:
            started = time.perf_counter()
            raw = self.registry.partition(method, circuit, k)
            elapsed = time.perf_counter() - started

            if self.progress_tracker:
                self.progress_tracker.complete_step(f"得到{raw.num_blocks}个块")

            final = merge_adjacent(raw) if merge else raw
            if self.progress_tracker:
                self.progress_tracker.complete_step(f"合并后{final.num_blocks}个块")

            report = verify_partitioning(circuit, final)
            if self.progress_tracker:
                status = "通过" if report.valid else "失败"
                self.progress_tracker.complete_step(f"验证{status}")
                self.progress_tracker.update_progress("完成", 1.0, "分区完成")

            result = PartitionResult(
                num_gates=len(circuit.gates),
                num_qubits=circuit.num_qubits,
                k=k,
                method=method,
                blocks_raw=raw.num_blocks,
                blocks_merged=final.num_blocks,
                elapsed_seconds=elapsed,
                valid=report.valid,
                source=source,
            )
            return final, result

        except Exception as e:
            if self.progress_tracker:
                self.progress_tracker.update_progress("错误", 0.0, f"分区失败: {str(e)}")
            raise

    def write_partition(self, partitioned: PartitionedCircuit,
                        output_file: Optional[str] = None,
                        qasm_dir: Optional[str] = None) -> str:
        """输出分区结果

        Args:
            partitioned: 分区结果
            output_file: JSON输出路径，None时不写文件
            qasm_dir: 每个块的QASM输出目录（block_0000.qasm ...），None时不输出

        Returns:
            str: JSON文本
        """
        indent = self.config_manager.get('output.json_indent', 2)
        document = partitioned.to_json(indent=indent)

        if output_file:
            path = Path(output_file)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(document + '\n', encoding='utf-8')

        if qasm_dir:
            directory = Path(qasm_dir)
            directory.mkdir(parents=True, exist_ok=True)
            for index, block in enumerate(partitioned.blocks):
                text = emit_qasm(block.to_circuit(partitioned.num_qubits))
                (directory / f"block_{index:04d}.qasm").write_text(text, encoding='utf-8')

        return document

    def get_supported_formats(self) -> list:
        """获取支持的文件格式列表"""
        return ['.qasm']

    def validate_input_file(self, file_path: str) -> Tuple[bool, str]:
        """验证输入文件

        Returns:
            (is_valid, error_message): 验证结果和错误消息
        """
        path = Path(file_path)
        if not path.exists():
            return False, "文件不存在"
        if path.suffix.lower() not in self.get_supported_formats():
            return False, f"不支持的文件格式: {path.suffix}"
        return True, ""
