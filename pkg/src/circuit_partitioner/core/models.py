"""
核心数据模型定义

包含应用程序中使用的主要数据结构：
- Gate / Circuit / CircuitStats: 量子线路中间表示
- QubitGroup / CandidatePartition: 贪心分区过程中的候选结构
- Block / PartitionedCircuit: 分区结果
- Violation / VerifyReport: 分区验证报告
- PartitionResult / BenchRecord: 运行与基准测试记录
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple


# 门名称 -> (参数个数, 作用量子比特数)
GATE_SPECS: Dict[str, Tuple[int, int]] = {
    'x': (0, 1), 'y': (0, 1), 'z': (0, 1), 'h': (0, 1),
    's': (0, 1), 't': (0, 1), 'sdg': (0, 1), 'tdg': (0, 1),
    'rx': (1, 1), 'ry': (1, 1), 'rz': (1, 1),
    'u1': (1, 1), 'u2': (2, 1), 'u3': (3, 1),
    'cx': (0, 2), 'cz': (0, 2), 'cp': (1, 2), 'swap': (0, 2),
    'ccx': (0, 3),
}


@dataclass(frozen=True)
class Gate:
    """量子门

    name为门名称，params为实数参数（角度以弧度表示），
    qubits为按顺序作用的量子比特索引
    """
    name: str
    qubits: Tuple[int, ...]
    params: Tuple[float, ...] = ()

    def __post_init__(self):
        qubits = tuple(int(q) for q in self.qubits)
        params = tuple(float(p) for p in self.params)
        object.__setattr__(self, 'qubits', qubits)
        object.__setattr__(self, 'params', params)

        if not self.name:
            raise ValueError("门名称不能为空")
        if len(qubits) < 1:
            raise ValueError(f"门 {self.name} 至少需要作用于一个量子比特")
        if any(q < 0 for q in qubits):
            raise ValueError(f"门 {self.name} 的量子比特索引必须为非负整数: {qubits}")
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"门 {self.name} 的量子比特必须互不相同: {qubits}")

        spec = GATE_SPECS.get(self.name)
        if spec is not None:
            num_params, arity = spec
            if len(params) != num_params:
                raise ValueError(
                    f"门 {self.name} 需要 {num_params} 个参数，实际为 {len(params)} 个"
                )
            if len(qubits) != arity:
                raise ValueError(
                    f"门 {self.name} 作用于 {arity} 个量子比特，实际为 {len(qubits)} 个"
                )

    @property
    def arity(self) -> int:
        return len(self.qubits)


@dataclass(frozen=True)
class Circuit:
    """量子线路

    门列表的顺序即线路的时间顺序（也是其DAG的一个合法拓扑序）
    """
    num_qubits: int
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self):
        gates = tuple(self.gates)
        object.__setattr__(self, 'gates', gates)

        if self.num_qubits < 0:
            raise ValueError(f"量子比特数不能为负数: {self.num_qubits}")
        for index, gate in enumerate(gates):
            if not isinstance(gate, Gate):
                raise ValueError(f"第{index}个元素不是Gate对象")
            for qubit in gate.qubits:
                if qubit >= self.num_qubits:
                    raise ValueError(
                        f"第{index}个门 {gate.name} 的量子比特 {qubit} 超出范围 (n={self.num_qubits})"
                    )

    def __len__(self) -> int:
        return len(self.gates)

    @property
    def max_arity(self) -> int:
        """线路中门的最大作用比特数，空线路为0"""
        return max((gate.arity for gate in self.gates), default=0)


@dataclass(frozen=True)
class CircuitStats:
    """线路统计信息"""
    num_qubits: int
    total_gates: int
    two_qubit_gates: int
    depth: int

    def to_dict(self) -> Dict[str, int]:
        return {
            'num_qubits': self.num_qubits,
            'total_gates': self.total_gates,
            'two_qubit_gates': self.two_qubit_gates,
            'depth': self.depth,
        }


@dataclass(frozen=True, order=True)
class QubitGroup:
    """候选量子比特组，按升序规范存储以便去重"""
    qubits: Tuple[int, ...]

    def __post_init__(self):
        canonical = tuple(sorted(set(int(q) for q in self.qubits)))
        if not canonical:
            raise ValueError("量子比特组不能为空")
        object.__setattr__(self, 'qubits', canonical)

    @classmethod
    def of(cls, qubits: Iterable[int]) -> 'QubitGroup':
        return cls(tuple(qubits))

    def __len__(self) -> int:
        return len(self.qubits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.qubits)

    def __contains__(self, qubit: object) -> bool:
        return qubit in self.qubits

    @property
    def as_set(self) -> FrozenSet[int]:
        return frozenset(self.qubits)

    def tie_break_key(self) -> Tuple[int, Tuple[int, ...]]:
        """同分候选的排序键：比特数少者优先，其次字典序最小者优先"""
        return len(self.qubits), self.qubits


@dataclass(frozen=True)
class CandidatePartition:
    """候选分区：量子比特组及其扩展得到的门"""
    qubits: QubitGroup
    gate_indices: Tuple[int, ...] = ()
    score: int = 0

    @property
    def is_empty(self) -> bool:
        return not self.gate_indices


@dataclass(frozen=True)
class Block:
    """分区块：作用于不超过k个量子比特的凸子线路"""
    qubits: FrozenSet[int]
    gates: Tuple[Gate, ...]
    origin_indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'qubits', frozenset(int(q) for q in self.qubits))
        object.__setattr__(self, 'gates', tuple(self.gates))
        object.__setattr__(self, 'origin_indices', tuple(int(i) for i in self.origin_indices))

    @classmethod
    def from_indices(cls, circuit: Circuit, indices: Iterable[int]) -> 'Block':
        """根据原线路中的门索引构建块，块的量子比特为其门所作用比特的并集"""
        ordered = tuple(sorted(indices))
        gates = tuple(circuit.gates[i] for i in ordered)
        qubits = frozenset(q for gate in gates for q in gate.qubits)
        return cls(qubits=qubits, gates=gates, origin_indices=ordered)

    def __len__(self) -> int:
        return len(self.origin_indices)

    def to_circuit(self, num_qubits: int) -> Circuit:
        """将块转换为独立线路（保留原始量子比特编号）"""
        return Circuit(num_qubits=num_qubits, gates=self.gates)

    def to_dict(self) -> Dict[str, List[int]]:
        return {
            'qubits': sorted(self.qubits),
            'gate_indices': list(self.origin_indices),
        }


@dataclass(frozen=True)
class PartitionedCircuit:
    """分区后的线路：有序的块列表"""
    blocks: Tuple[Block, ...]
    num_qubits: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, 'blocks', tuple(self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'k': self.k,
            'num_qubits': self.num_qubits,
            'blocks': [block.to_dict() for block in self.blocks],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any], circuit: Circuit) -> 'PartitionedCircuit':
        """从JSON字典重建分区

        门对象从原线路中查找；超出范围的索引只保留在origin_indices中，
        交由验证器报告
        """
        blocks = []
        for entry in data.get('blocks', []):
            indices = tuple(int(i) for i in entry.get('gate_indices', []))
            gates = tuple(circuit.gates[i] for i in indices if 0 <= i < len(circuit.gates))
            blocks.append(Block(
                qubits=frozenset(int(q) for q in entry.get('qubits', [])),
                gates=gates,
                origin_indices=indices,
            ))
        return cls(
            blocks=tuple(blocks),
            num_qubits=int(data.get('num_qubits', circuit.num_qubits)),
            k=int(data['k']),
        )


class ViolationKind(Enum):
    """验证违规类型"""
    COVERAGE = "coverage"
    SIZE = "size"
    CONFINEMENT = "confinement"
    WIRE_ORDER = "wire_order"
    BLOCK_ORDER = "block_order"
    MISMATCH = "mismatch"


@dataclass(frozen=True)
class Violation:
    """单条验证违规"""
    kind: ViolationKind
    detail: str
    block_index: Optional[int] = None
    qubit: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind.value,
            'block_index': self.block_index,
            'qubit': self.qubit,
            'detail': self.detail,
        }


@dataclass
class VerifyReport:
    """分区验证报告"""
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> List[ViolationKind]:
        return [v.kind for v in self.violations]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'valid': self.valid,
            'violations': [v.to_dict() for v in self.violations],
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


@dataclass
class PartitionResult:
    """单次分区运行的结果统计"""
    num_gates: int
    num_qubits: int
    k: int
    method: str
    blocks_raw: int
    blocks_merged: int
    elapsed_seconds: float
    valid: bool = True
    source: str = ""

    @property
    def merge_reduction(self) -> float:
        """合并后块数减少的比例"""
        if self.blocks_raw == 0:
            return 0.0
        return (self.blocks_raw - self.blocks_merged) / self.blocks_raw


@dataclass
class BenchRecord:
    """基准测试的一行记录"""
    circuit: str
    method: str
    k: int
    n: int
    g: int
    blocks_raw: int
    blocks_merged: int
    time_s: float
    reps: int
    status: str = "ok"

    CSV_COLUMNS = (
        'circuit', 'method', 'k', 'n', 'g',
        'blocks_raw', 'blocks_merged', 'time_s', 'reps', 'status',
    )

    def to_row(self) -> Dict[str, Any]:
        return {column: getattr(self, column) for column in self.CSV_COLUMNS}
