"""
基准线路生成器

生成与常用基准测试家族（QFT、TFIM、随机线路、QAOA、加法器、Heisenberg模型、
隐线性函数、乘法器、W态）结构等价的确定性线路，所有生成器都是其参数的纯函数
"""

import math
from typing import Callable, Dict, List, Tuple

import numpy as np

from ..core.models import Circuit, Gate


class GeneratorSpecError(ValueError):
    """生成器规格字符串格式错误"""
    pass


SINGLE_QUBIT_POOL = ('h', 'x', 'y', 'z', 's', 't', 'sdg', 'tdg', 'rx', 'ry', 'rz')
_ROTATIONS = ('rx', 'ry', 'rz')

# TFIM / Heisenberg 的默认物理参数
DEFAULT_TIME_STEP = 0.1
DEFAULT_COUPLING = 1.0
DEFAULT_FIELD = 1.0

_SEED_MASK = (1 << 64) - 1


def gen_qft(n: int) -> Circuit:
    """标准教科书QFT线路

    对每个目标比特i：一个h门，再加上来自每个j > i的受控相位 cp(π/2^(j−i))，
    最后是floor(n/2)个交换门

    Args:
        n: 量子比特数 (n >= 1)
    """
    if n < 1:
        raise ValueError(f"QFT需要至少1个量子比特: n={n}")

    gates: List[Gate] = []
    for target in range(n):
        gates.append(Gate('h', (target,)))
        for control in range(target + 1, n):
            angle = math.pi / (2 ** (control - target))
            gates.append(Gate('cp', (control, target), (angle,)))
    for i in range(n // 2):
        gates.append(Gate('swap', (i, n - 1 - i)))
    return Circuit(num_qubits=n, gates=tuple(gates))


def gen_tfim(n: int, steps: int,
             time_step: float = DEFAULT_TIME_STEP,
             coupling: float = DEFAULT_COUPLING,
             field: float = DEFAULT_FIELD) -> Circuit:
    """横场Ising模型的Trotter演化线路（线性链）

    每个Trotter步：所有比特上的rz+rx层，然后对i = 0..n−2依次施加
    cx(i,i+1), rz(i+1), cx(i,i+1) 实现最近邻ZZ相互作用

    Args:
        n: 量子比特数 (n >= 2)
        steps: Trotter步数 (steps >= 1)
    """
    if n < 2:
        raise ValueError(f"TFIM需要至少2个量子比特: n={n}")
    if steps < 1:
        raise ValueError(f"TFIM的步数必须为正整数: steps={steps}")

    z_angle = 2.0 * field * time_step
    x_angle = 2.0 * field * time_step
    zz_angle = 2.0 * coupling * time_step

    gates: List[Gate] = []
    for _ in range(steps):
        for q in range(n):
            gates.append(Gate('rz', (q,), (z_angle,)))
            gates.append(Gate('rx', (q,), (x_angle,)))
        for i in range(n - 1):
            gates.append(Gate('cx', (i, i + 1)))
            gates.append(Gate('rz', (i + 1,), (zz_angle,)))
            gates.append(Gate('cx', (i, i + 1)))
    return Circuit(num_qubits=n, gates=tuple(gates))


def gen_random(n: int, g: int, two_qubit_fraction: float, seed: int) -> Circuit:
    """随机线路

    每个门以two_qubit_fraction的概率为随机不同比特对上的cx，
    否则为随机比特上的随机单比特门；相同参数得到相同线路

    Args:
        n: 量子比特数
        g: 门数
        two_qubit_fraction: 双比特门比例 [0, 1]
        seed: 64位随机种子
    """
    if not 0.0 <= two_qubit_fraction <= 1.0:
        raise ValueError(f"双比特门比例必须在[0,1]之间: {two_qubit_fraction}")
    if g < 0:
        raise ValueError(f"门数不能为负数: g={g}")
    if two_qubit_fraction > 0 and n < 2 and g > 0:
        raise ValueError(f"生成双比特门需要至少2个量子比特: n={n}")
    if g > 0 and n < 1:
        raise ValueError(f"生成门需要至少1个量子比特: n={n}")

    rng = np.random.default_rng(int(seed) & _SEED_MASK)
    gates: List[Gate] = []
    for _ in range(g):
        if rng.random() < two_qubit_fraction:
            control, target = rng.choice(n, size=2, replace=False)
            gates.append(Gate('cx', (int(control), int(target))))
        else:
            name = SINGLE_QUBIT_POOL[int(rng.integers(len(SINGLE_QUBIT_POOL)))]
            qubit = int(rng.integers(n))
            params = (float(rng.uniform(0.0, 2.0 * math.pi)),) if name in _ROTATIONS else ()
            gates.append(Gate(name, (qubit,), params))
    return Circuit(num_qubits=max(n, 0), gates=tuple(gates))


def gen_qaoa(n: int, layers: int = 1, edge_probability: float = 0.5, seed: int = 0) -> Circuit:
    """QAOA风格线路（随机图上的MaxCut）

    h层之后，每层对随机图的每条边施加 cx(i,j), rz(j), cx(i,j)，再施加rx混合层
    """
    if n < 2:
        raise ValueError(f"QAOA需要至少2个量子比特: n={n}")
    if layers < 1:
        raise ValueError(f"QAOA的层数必须为正整数: layers={layers}")

    rng = np.random.default_rng(int(seed) & _SEED_MASK)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    gammas = rng.uniform(0.0, math.pi, size=layers)
    betas = rng.uniform(0.0, math.pi, size=layers)

    gates: List[Gate] = [Gate('h', (q,)) for q in range(n)]
    for layer in range(layers):
        for i, j in edges:
            gates.append(Gate('cx', (i, j)))
            gates.append(Gate('rz', (j,), (2.0 * float(gammas[layer]),)))
            gates.append(Gate('cx', (i, j)))
        for q in range(n):
            gates.append(Gate('rx', (q,), (2.0 * float(betas[layer]),)))
    return Circuit(num_qubits=n, gates=tuple(gates))


def gen_adder(bits: int) -> Circuit:
    """行波进位加法器（MAJ/UMA结构）

    比特布局：0为进位输入，a_i = 1 + 2i，b_i = 2 + 2i，最后一个比特为进位输出，
    共 2*bits+2 个量子比特
    """
    if bits < 1:
        raise ValueError(f"加法器位数必须为正整数: bits={bits}")

    n = 2 * bits + 2
    carry_out = n - 1

    def a(i: int) -> int:
        return 1 + 2 * i

    def b(i: int) -> int:
        return 2 + 2 * i

    def majority(x: int, y: int, z: int) -> List[Gate]:
        return [Gate('cx', (z, y)), Gate('cx', (z, x)), Gate('ccx', (x, y, z))]

    def unmajority(x: int, y: int, z: int) -> List[Gate]:
        return [Gate('ccx', (x, y, z)), Gate('cx', (z, x)), Gate('cx', (x, y))]

    gates: List[Gate] = []
    chain = [(0 if i == 0 else a(i - 1), b(i), a(i)) for i in range(bits)]
    for x, y, z in chain:
        gates.extend(majority(x, y, z))
    gates.append(Gate('cx', (a(bits - 1), carry_out)))
    for x, y, z in reversed(chain):
        gates.extend(unmajority(x, y, z))
    return Circuit(num_qubits=n, gates=tuple(gates))


def gen_heisenberg(n: int, steps: int, time_step: float = DEFAULT_TIME_STEP,
                   coupling: float = DEFAULT_COUPLING) -> Circuit:
    """Heisenberg模型的Trotter演化线路（线性链）

    每个最近邻比特对依次施加XX、YY、ZZ项，每项为基变换 + cx, rz, cx + 逆基变换
    """
    if n < 2:
        raise ValueError(f"Heisenberg模型需要至少2个量子比特: n={n}")
    if steps < 1:
        raise ValueError(f"Heisenberg模型的步数必须为正整数: steps={steps}")

    angle = 2.0 * coupling * time_step
    half_pi = math.pi / 2

    def zz(i: int, j: int) -> List[Gate]:
        return [Gate('cx', (i, j)), Gate('rz', (j,), (angle,)), Gate('cx', (i, j))]

    gates: List[Gate] = []
    for _ in range(steps):
        for i in range(n - 1):
            j = i + 1
            # XX
            gates.extend([Gate('h', (i,)), Gate('h', (j,))])
            gates.extend(zz(i, j))
            gates.extend([Gate('h', (i,)), Gate('h', (j,))])
            # YY
            gates.extend([Gate('rx', (i,), (half_pi,)), Gate('rx', (j,), (half_pi,))])
            gates.extend(zz(i, j))
            gates.extend([Gate('rx', (i,), (-half_pi,)), Gate('rx', (j,), (-half_pi,))])
            # ZZ
            gates.extend(zz(i, j))
    return Circuit(num_qubits=n, gates=tuple(gates))


def gen_hlf(n: int, seed: int = 0, edge_probability: float = 0.5) -> Circuit:
    """隐线性函数线路

    h层，随机对称邻接矩阵上三角的每条边施加cz(i,j)，
    对角线为1的比特施加s，最后再施加h层

    Args:
        n: 量子比特数 (n >= 2)
        seed: 随机种子
        edge_probability: 每条边出现的概率
    """
    if n < 2:
        raise ValueError(f"隐线性函数线路需要至少2个量子比特: n={n}")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError(f"边概率必须在[0,1]之间: {edge_probability}")

    rng = np.random.default_rng(int(seed) & _SEED_MASK)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    diagonal = rng.random(n) < 0.5

    gates: List[Gate] = [Gate('h', (q,)) for q in range(n)]
    gates.extend(Gate('cz', (i, j)) for i, j in edges)
    gates.extend(Gate('s', (q,)) for q in range(n) if diagonal[q])
    gates.extend(Gate('h', (q,)) for q in range(n))
    return Circuit(num_qubits=n, gates=tuple(gates))


def _fourier_layer(qubits: List[int], inverse: bool = False) -> List[Gate]:
    """不含末尾交换的QFT（inverse为True时为其逆）"""
    gates: List[Gate] = []
    for t, target in enumerate(qubits):
        gates.append(Gate('h', (target,)))
        for c in range(t + 1, len(qubits)):
            angle = math.pi / (2 ** (c - t))
            gates.append(Gate('cp', (qubits[c], target), (angle,)))
    if not inverse:
        return gates
    return [
        Gate(g.name, g.qubits, tuple(-p for p in g.params)) for g in reversed(gates)
    ]


def _doubly_controlled_phase(c1: int, c2: int, target: int, angle: float) -> List[Gate]:
    half = angle / 2
    return [
        Gate('cp', (c2, target), (half,)),
        Gate('cx', (c1, c2)),
        Gate('cp', (c2, target), (-half,)),
        Gate('cx', (c1, c2)),
        Gate('cp', (c1, target), (half,)),
    ]


def gen_multiply(bits: int) -> Circuit:
    """傅里叶空间乘法器 |a>|b>|0> -> |a>|b>|a*b>

    比特布局：a为0..bits−1，b为bits..2bits−1，积寄存器为2bits..4bits−1（低位在前）。
    对积寄存器做QFT，再对每对 (a_i, b_j) 用双控相位把2^(i+j)加到积上，最后做逆QFT；
    双控相位分解为3个cp与2个cx，角度为2π整数倍的项被省略

    Args:
        bits: 每个乘数的位数 (bits >= 1)
    """
    if bits < 1:
        raise ValueError(f"乘法器位数必须为正整数: bits={bits}")

    a = list(range(bits))
    b = list(range(bits, 2 * bits))
    product = list(range(2 * bits, 4 * bits))
    width = len(product)

    gates: List[Gate] = _fourier_layer(product)
    for i, control_a in enumerate(a):
        for j, control_b in enumerate(b):
            for position in range(width - i - j):
                angle = 2.0 * math.pi * 2 ** (i + j) / 2 ** (width - position)
                gates.extend(_doubly_controlled_phase(control_a, control_b, product[position], angle))
    gates.extend(_fourier_layer(product, inverse=True))
    return Circuit(num_qubits=4 * bits, gates=tuple(gates))


def gen_wstate(n: int) -> Circuit:
    """W态制备线路（线性级联）

    x(0)之后，对每个相邻比特对 (i, i+1) 施加受控ry（分解为2个ry与2个cx），
    旋转角为 2·arccos(sqrt(1/(n−i)))，再施加cx(i+1, i)

    Args:
        n: 量子比特数 (n >= 2)
    """
    if n < 2:
        raise ValueError(f"W态需要至少2个量子比特: n={n}")

    gates: List[Gate] = [Gate('x', (0,))]
    for i in range(n - 1):
        theta = 2.0 * math.acos(math.sqrt(1.0 / (n - i)))
        control, target = i, i + 1
        gates.extend([
            Gate('ry', (target,), (theta / 2,)),
            Gate('cx', (control, target)),
            Gate('ry', (target,), (-theta / 2,)),
            Gate('cx', (control, target)),
            Gate('cx', (target, control)),
        ])
    return Circuit(num_qubits=n, gates=tuple(gates))


# ==============================================================================
# 规格字符串


def _parse_fields(spec: str, expected: Tuple[Callable, ...], minimum: int) -> list:
    parts = spec.split(':')[1:]
    if not minimum <= len(parts) <= len(expected):
        raise GeneratorSpecError(f"生成器规格参数个数错误: {spec}")
    try:
        return [convert(part) for convert, part in zip(expected, parts)]
    except ValueError as e:
        raise GeneratorSpecError(f"生成器规格参数无效: {spec} ({e})") from e


def _spec_qft(spec: str) -> Circuit:
    (n,) = _parse_fields(spec, (int,), 1)
    return gen_qft(n)


def _spec_tfim(spec: str) -> Circuit:
    n, steps = _parse_fields(spec, (int, int), 2)
    return gen_tfim(n, steps)


def _spec_random(spec: str) -> Circuit:
    n, g, fraction, seed = _parse_fields(spec, (int, int, float, int), 4)
    return gen_random(n, g, fraction, seed)


def _spec_qaoa(spec: str) -> Circuit:
    fields = _parse_fields(spec, (int, int, int), 1)
    n = fields[0]
    layers = fields[1] if len(fields) > 1 else 1
    seed = fields[2] if len(fields) > 2 else 0
    return gen_qaoa(n, layers=layers, seed=seed)


def _spec_adder(spec: str) -> Circuit:
    (bits,) = _parse_fields(spec, (int,), 1)
    return gen_adder(bits)


def _spec_heisenberg(spec: str) -> Circuit:
    n, steps = _parse_fields(spec, (int, int), 2)
    return gen_heisenberg(n, steps)


def _spec_hlf(spec: str) -> Circuit:
    fields = _parse_fields(spec, (int, int), 1)
    seed = fields[1] if len(fields) > 1 else 0
    return gen_hlf(fields[0], seed=seed)


def _spec_multiply(spec: str) -> Circuit:
    (bits,) = _parse_fields(spec, (int,), 1)
    return gen_multiply(bits)


def _spec_wstate(spec: str) -> Circuit:
    (n,) = _parse_fields(spec, (int,), 1)
    return gen_wstate(n)


GENERATORS: Dict[str, Callable[[str], Circuit]] = {
    'qft': _spec_qft,
    'tfim': _spec_tfim,
    'random': _spec_random,
    'qaoa': _spec_qaoa,
    'adder': _spec_adder,
    'heisenberg': _spec_heisenberg,
    'hlf': _spec_hlf,
    'multiply': _spec_multiply,
    'wstate': _spec_wstate,
}


def circuit_from_spec(spec: str) -> Tuple[str, Circuit]:
    """根据规格字符串生成线路

    支持: qft:n, tfim:n:steps, random:n:g:frac:seed, qaoa:n[:layers[:seed]],
    adder:bits, heisenberg:n:steps, hlf:n[:seed], multiply:bits, wstate:n

    Returns:
        (name, circuit): 名称（即规格字符串本身）与生成的线路

    Raises:
        GeneratorSpecError: 规格格式错误或参数不满足前置条件
    """
    spec = spec.strip()
    family = spec.split(':', 1)[0]
    builder = GENERATORS.get(family)
    if builder is None:
        raise GeneratorSpecError(
            f"未知的生成器: {family} (支持: {', '.join(sorted(GENERATORS))})"
        )
    try:
        return spec, builder(spec)
    except GeneratorSpecError:
        raise
    except ValueError as e:
        raise GeneratorSpecError(f"生成器规格无效: {spec} ({e})") from e


def is_generator_spec(text: str) -> bool:
    """判断字符串是否为生成器规格"""
    return text.split(':', 1)[0] in GENERATORS and ':' in text
