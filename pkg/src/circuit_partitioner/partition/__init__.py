"""
分区算法：GTQCP、快速与扫描式基线，以及小规模精确最优解
"""

from .base import (
    GateArityExceedsKError,
    PartitionerError,
    ResourceLimitError,
    UnknownMethodError,
    expand_group,
    score,
)
from .gtqcp import GTQCPPartitioner, enumerate_groups, gtqcp_partition
from .manager import PartitionerRegistry, create_default_registry
from .oracle import LimitExceededError, OracleLimits, brute_force_optimal
from .quick import QuickPartitioner, quick_partition
from .scan import ScanPartitioner, scan_partition

__all__ = [
    "GateArityExceedsKError",
    "PartitionerError",
    "ResourceLimitError",
    "UnknownMethodError",
    "LimitExceededError",
    "expand_group",
    "score",
    "enumerate_groups",
    "GTQCPPartitioner",
    "QuickPartitioner",
    "ScanPartitioner",
    "gtqcp_partition",
    "quick_partition",
    "scan_partition",
    "OracleLimits",
    "brute_force_optimal",
    "PartitionerRegistry",
    "create_default_registry",
]
