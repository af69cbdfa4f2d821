#!/usr/bin/env python3
"""
量子线路分区工具 - 命令行入口

用法示例:
    python partition_circuit.py partition --gen qft:5 --k 3
    python partition_circuit.py partition -i circuit.qasm -k 4 -m quick --merge -o result.json
    python partition_circuit.py verify circuit.qasm result.json
    python partition_circuit.py bench --suite structured --k 4,5 --summary
"""

import sys

from circuit_partitioner.cli import main


if __name__ == "__main__":
    sys.exit(main())
