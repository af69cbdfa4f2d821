#!/usr/bin/env python3
"""
创建示例QASM线路文件用于测试
"""

import sys
from pathlib import Path

from circuit_partitioner.circuit.generators import circuit_from_spec
from circuit_partitioner.circuit.qasm import write_qasm_file
from circuit_partitioner.circuit.stats import format_stats, stats


SAMPLES = ("qft:5", "qft:10", "tfim:8:10", "random:6:60:0.5:7", "adder:4")


def create_sample_circuits(directory="samples"):
    """在指定目录下为每个示例规格写入一个QASM文件"""
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)

    for spec in SAMPLES:
        name, circuit = circuit_from_spec(spec)
        filename = target / (name.replace(':', '_') + ".qasm")
        write_qasm_file(circuit, str(filename))
        print(f"示例线路已创建: {filename}  ({format_stats(stats(circuit))})")


if __name__ == "__main__":
    create_sample_circuits(sys.argv[1] if len(sys.argv) > 1 else "samples")
