"""
量子线路中间表示：QASM解析/生成、基准线路生成器与统计
"""

from .generators import circuit_from_spec, gen_qft, gen_random, gen_tfim
from .qasm import emit_qasm, parse_qasm
from .stats import stats

__all__ = [
    "parse_qasm",
    "emit_qasm",
    "gen_qft",
    "gen_tfim",
    "gen_random",
    "circuit_from_spec",
    "stats",
]
