"""
相邻块合并

两个块的比特并集不超过k、且二者之间没有块把它们按依赖顺序隔开时，可以合并。
合并后的块放在原前一个块的位置之后：与前一个块无依赖关系的中间块前移，
依赖于前一个块的中间块移到合并块之后
"""

import logging
from typing import List, Optional, Set, Tuple

from ..core.models import Block, PartitionedCircuit


logger = logging.getLogger(__name__)


def _combine(first: Block, second: Block) -> Block:
    pairs = sorted(
        list(zip(first.origin_indices, first.gates)) + list(zip(second.origin_indices, second.gates)),
        key=lambda pair: pair[0],
    )
    return Block(
        qubits=first.qubits | second.qubits,
        gates=tuple(gate for _, gate in pairs),
        origin_indices=tuple(index for index, _ in pairs),
    )


def _find_partner(blocks: List[Block], i: int, k: int,
                  all_qubits: Set[int]) -> Optional[Tuple[int, List[int]]]:
    """为第i个块寻找最左侧的可合并块

    Returns:
        (j, dependent): 可合并块的位置及依赖于第i个块的中间块位置；不存在时为None
    """
    anchor = blocks[i].qubits
    reached = set(anchor)
    dependent_qubits: Set[int] = set()
    dependent: List[int] = []

    for j in range(i + 1, len(blocks)):
        candidate = blocks[j].qubits
        if len(anchor | candidate) <= k and not (candidate & dependent_qubits):
            return j, dependent
        if candidate & reached:
            dependent.append(j)
            dependent_qubits |= candidate
            reached |= candidate
            if dependent_qubits >= all_qubits:
                return None
    return None


def merge_adjacent(partitioned: PartitionedCircuit) -> PartitionedCircuit:
    """合并可合并的块直到不动点

    从左到右扫描，每个块与其最左侧的可合并块合并后在同一位置继续尝试；
    一整遍扫描没有发生合并时结束

    Args:
        partitioned: 合法的分区结果

    Returns:
        PartitionedCircuit: 块数不多于输入的合法分区
    """
    k = partitioned.k
    blocks = list(partitioned.blocks)
    all_qubits = set()
    for block in blocks:
        all_qubits |= block.qubits

    merges = 0
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(blocks):
            found = _find_partner(blocks, i, k, all_qubits)
            if found is None:
                i += 1
                continue

            j, dependent = found
            moved = set(dependent)
            independent = [blocks[m] for m in range(i + 1, j) if m not in moved]
            blocks = (
                blocks[:i]
                + independent
                + [_combine(blocks[i], blocks[j])]
                + [blocks[m] for m in dependent]
                + blocks[j + 1:]
            )
            i += len(independent)
            merges += 1
            changed = True

    logger.debug(f"合并相邻块: {len(partitioned.blocks)} -> {len(blocks)} (合并{merges}次)")
    return PartitionedCircuit(blocks=tuple(blocks), num_qubits=partitioned.num_qubits, k=k)
