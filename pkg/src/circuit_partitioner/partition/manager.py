"""
分区方法注册表

按名称（"gtqcp" | "quick" | "scan"）管理分区器实例并统计调用情况
"""

import logging
from typing import Any, Dict, List, Optional

from ..core.interfaces import ConfigManagerInterface, PartitionerInterface
from ..core.models import Circuit, PartitionedCircuit
from .base import UnknownMethodError
from .gtqcp import GTQCPPartitioner
from .quick import QuickPartitioner
from .scan import DEFAULT_MAX_GROUPS, ScanPartitioner


class PartitionerRegistry:
    """分区器注册表"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.partitioners: Dict[str, PartitionerInterface] = {}
        self.stats: Dict[str, Dict[str, int]] = {}

    def register(self, name: str, partitioner: PartitionerInterface) -> None:
        """注册分区器

        Args:
            name: 方法名称
            partitioner: 分区器实例
        """
        self.partitioners[name] = partitioner
        self.stats[name] = {'calls': 0, 'failures': 0}
        self.logger.debug(f"注册分区方法: {name}")

    def setup_default_partitioners(self, config_manager: Optional[ConfigManagerInterface] = None):
        """注册三种内置方法，Scan的候选组上限取自配置"""
        max_groups = DEFAULT_MAX_GROUPS
        if config_manager is not None:
            max_groups = int(config_manager.get('scan.max_groups', DEFAULT_MAX_GROUPS))

        self.register('gtqcp', GTQCPPartitioner())
        self.register('quick', QuickPartitioner())
        self.register('scan', ScanPartitioner(max_groups=max_groups))

    @property
    def names(self) -> List[str]:
        return sorted(self.partitioners)

    def get(self, name: str) -> PartitionerInterface:
        """按名称获取分区器

        Raises:
            UnknownMethodError: 未注册的方法
        """
        try:
            return self.partitioners[name]
        except KeyError:
            raise UnknownMethodError(
                f"未知的分区方法: {name} (可用: {', '.join(self.names)})"
            ) from None

    def partition(self, name: str, circuit: Circuit, k: int) -> PartitionedCircuit:
        """使用指定方法分区并记录统计"""
        partitioner = self.get(name)
        self.stats[name]['calls'] += 1
        try:
            return partitioner.partition(circuit, k)
        except Exception:
            self.stats[name]['failures'] += 1
            raise

    def get_stats(self) -> Dict[str, Any]:
        return {name: dict(values) for name, values in self.stats.items()}


def create_default_registry(config_manager: Optional[ConfigManagerInterface] = None) -> PartitionerRegistry:
    """创建包含内置方法的注册表"""
    registry = PartitionerRegistry()
    registry.setup_default_partitioners(config_manager)
    return registry
