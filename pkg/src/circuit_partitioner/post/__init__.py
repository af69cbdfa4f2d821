"""
分区后处理：相邻块合并与独立验证
"""

from .merge import merge_adjacent
from .verify import verify_partitioning

__all__ = ["merge_adjacent", "verify_partitioning"]
