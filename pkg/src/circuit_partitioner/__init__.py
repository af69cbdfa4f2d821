"""
量子线路分区器 - 将量子线路划分为最少数量、每块作用于不超过k个量子比特的凸子线路

这个包提供了贪心拓扑感知分区（GTQCP）、快速与扫描式基线分区器、
小规模精确最优解、相邻块合并、独立验证以及基准测试工具。
"""

__version__ = "1.0.0"
__author__ = "Circuit Partitioner Team"

from .core.models import Gate, Circuit, Block, PartitionedCircuit, VerifyReport, PartitionResult
from .core.app import PartitionerApp
from .partition.gtqcp import gtqcp_partition
from .partition.quick import quick_partition
from .partition.scan import scan_partition
from .post.merge import merge_adjacent
from .post.verify import verify_partitioning

__all__ = [
    "Gate",
    "Circuit",
    "Block",
    "PartitionedCircuit",
    "VerifyReport",
    "PartitionResult",
    "PartitionerApp",
    "gtqcp_partition",
    "quick_partition",
    "scan_partition",
    "merge_adjacent",
    "verify_partitioning",
]
