"""
OpenQASM 2.0 子集解析器与生成器

使用pyparsing构建语法，支持单个量子寄存器以及常用门集合；
measure、barrier、creg语句被解析后忽略
"""

import logging
import math
import operator
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import pyparsing as pp

from ..core.models import GATE_SPECS, Circuit, Gate


logger = logging.getLogger(__name__)


class QasmError(Exception):
    """QASM处理相关错误"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"第{line}行第{column}列: {message}"
        super().__init__(message)


class QasmSyntaxError(QasmError):
    """语法错误"""
    pass


class QasmUnsupportedError(QasmError):
    """不支持的语句或门"""
    pass


class QasmSemanticError(QasmError):
    """语义错误（索引越界、多个量子寄存器等）"""
    pass


# 别名 -> 规范门名称
GATE_ALIASES = {
    'cu1': 'cp',
    'CX': 'cx',
    'U': 'u3',
    'u': 'u3',
}

_UNSUPPORTED_KEYWORDS = ('gate', 'opaque', 'if', 'reset')

_BINARY_OPERATORS = {
    '+': operator.add,
    '-': operator.sub,
    '*': operator.mul,
    '/': operator.truediv,
    '^': operator.pow,
}

_FUNCTIONS = {
    'sin': math.sin,
    'cos': math.cos,
    'tan': math.tan,
    'exp': math.exp,
    'ln': math.log,
    'sqrt': math.sqrt,
}


# ==============================================================================
# 语句对象


@dataclass
class _Argument:
    register: str
    index: Optional[int]
    loc: int


@dataclass
class _Statement:
    kind: str
    loc: int
    name: str = ""
    params: Tuple[float, ...] = ()
    args: Tuple[_Argument, ...] = ()
    size: int = 0
    version: str = ""


def _evaluate_unary(tokens):
    sign, value = tokens[0]
    return -value if sign == '-' else value


def _evaluate_binary(tokens):
    items = tokens[0]
    result = items[0]
    # '^' 为右结合
    if len(items) > 1 and items[1] == '^':
        result = items[-1]
        for index in range(len(items) - 2, 0, -2):
            result = _BINARY_OPERATORS['^'](items[index - 1], result)
        return result
    for index in range(1, len(items), 2):
        result = _BINARY_OPERATORS[items[index]](result, items[index + 1])
    return result


def _build_grammar() -> pp.ParserElement:
    """构建OpenQASM 2.0子集的pyparsing语法"""
    semi = pp.Suppress(';')
    lbra, rbra = pp.Suppress('['), pp.Suppress(']')
    lpar, rpar = pp.Suppress('('), pp.Suppress(')')

    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    ident = pp.Word(pp.alphas + '_', pp.alphanums + '_')

    # 参数表达式
    number = pp.Regex(r'(\d+\.\d*|\.\d+|\d+)([eE][-+]?\d+)?').set_parse_action(
        lambda t: float(t[0])
    )
    pi = pp.Keyword('pi').set_parse_action(lambda: math.pi)
    expr = pp.Forward()
    function_call = (
        pp.one_of(list(_FUNCTIONS), as_keyword=True) + lpar + expr + rpar
    ).set_parse_action(lambda t: _FUNCTIONS[t[0]](t[1]))
    operand = function_call | number | pi
    expr <<= pp.infix_notation(operand, [
        (pp.one_of('+ -'), 1, pp.OpAssoc.RIGHT, _evaluate_unary),
        ('^', 2, pp.OpAssoc.RIGHT, _evaluate_binary),
        (pp.one_of('* /'), 2, pp.OpAssoc.LEFT, _evaluate_binary),
        (pp.one_of('+ -'), 2, pp.OpAssoc.LEFT, _evaluate_binary),
    ])

    argument = (ident + pp.Optional(lbra + integer + rbra)).set_parse_action(
        lambda s, loc, t: _Argument(t[0], t[1] if len(t) > 1 else None, loc)
    )
    arguments = pp.Group(pp.DelimitedList(argument))

    header = (pp.Keyword('OPENQASM') + pp.Regex(r'\d+(\.\d+)?') + semi).set_parse_action(
        lambda s, loc, t: _Statement('header', loc, version=t[1])
    )
    include = (pp.Keyword('include') + pp.QuotedString('"') + semi).set_parse_action(
        lambda s, loc, t: _Statement('include', loc, name=t[1])
    )
    qreg = (pp.Keyword('qreg') + ident + lbra + integer + rbra + semi).set_parse_action(
        lambda s, loc, t: _Statement('qreg', loc, name=t[1], size=t[2])
    )
    creg = (pp.Keyword('creg') + ident + lbra + integer + rbra + semi).set_parse_action(
        lambda s, loc, t: _Statement('creg', loc, name=t[1], size=t[2])
    )
    measure = (pp.Keyword('measure') + argument + pp.Suppress('->') + argument + semi).set_parse_action(
        lambda s, loc, t: _Statement('measure', loc)
    )
    barrier = (pp.Keyword('barrier') + arguments + semi).set_parse_action(
        lambda s, loc, t: _Statement('barrier', loc)
    )
    unsupported = (
        pp.one_of(list(_UNSUPPORTED_KEYWORDS), as_keyword=True)
        + pp.Regex(r'[^;{}]*')
        + (semi | pp.nested_expr('{', '}'))
    ).set_parse_action(lambda s, loc, t: _Statement('unsupported', loc, name=t[0]))

    reserved = pp.MatchFirst([
        pp.Keyword(word) for word in
        ('OPENQASM', 'include', 'qreg', 'creg', 'measure', 'barrier') + _UNSUPPORTED_KEYWORDS
    ])
    parameters = pp.Group(pp.Optional(lpar + pp.Optional(pp.DelimitedList(expr)) + rpar))
    application = (~reserved + ident + parameters + arguments + semi).set_parse_action(
        lambda s, loc, t: _Statement(
            'gate', loc, name=t[0], params=tuple(t[1]), args=tuple(t[2])
        )
    )

    statement = header | include | qreg | creg | measure | barrier | unsupported | application
    program = pp.ZeroOrMore(statement) + pp.StringEnd()
    program.ignore(pp.cpp_style_comment)
    return program


_GRAMMAR = _build_grammar()


# ==============================================================================
# 解析


def parse_qasm(text: str) -> Circuit:
    """解析OpenQASM 2.0文本

    Args:
        text: QASM源文本

    Returns:
        Circuit: 按源码顺序排列的线路，q[i]映射为索引i

    Raises:
        QasmSyntaxError: 语法错误（报告行号与列号）
        QasmUnsupportedError: 不支持的语句或门
        QasmSemanticError: 索引越界、多个量子寄存器等
    """
    try:
        statements = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise QasmSyntaxError(f"语法错误: {e.msg}", e.lineno, e.col) from e

    def position(loc: int) -> Tuple[int, int]:
        return pp.lineno(loc, text), pp.col(loc, text)

    register: Optional[Tuple[str, int]] = None
    gates: List[Gate] = []

    for statement in statements:
        line, column = position(statement.loc)

        if statement.kind == 'header':
            if not statement.version.startswith('2'):
                raise QasmUnsupportedError(f"不支持的OpenQASM版本: {statement.version}", line, column)
        elif statement.kind == 'unsupported':
            raise QasmUnsupportedError(f"不支持的语句: {statement.name}", line, column)
        elif statement.kind == 'qreg':
            if register is not None:
                raise QasmSemanticError("只支持单个量子寄存器", line, column)
            register = (statement.name, statement.size)
        elif statement.kind == 'gate':
            if register is None:
                raise QasmSemanticError("量子寄存器声明之前出现了门操作", line, column)
            gates.extend(_build_gates(statement, register, position))
        # include / creg / measure / barrier 被忽略

    num_qubits = register[1] if register else 0
    circuit = Circuit(num_qubits=num_qubits, gates=tuple(gates))
    logger.debug(f"解析QASM完成: {num_qubits}个量子比特, {len(gates)}个门")
    return circuit


def _build_gates(statement: _Statement, register: Tuple[str, int], position) -> List[Gate]:
    """将门应用语句转换为Gate列表（整寄存器参数按位广播）"""
    line, column = position(statement.loc)
    name = GATE_ALIASES.get(statement.name, statement.name)
    spec = GATE_SPECS.get(name)
    if spec is None:
        raise QasmUnsupportedError(f"不支持的门: {statement.name}", line, column)

    num_params, arity = spec
    if len(statement.params) != num_params:
        raise QasmSemanticError(
            f"门 {statement.name} 需要 {num_params} 个参数，实际为 {len(statement.params)} 个",
            line, column,
        )
    if len(statement.args) != arity:
        raise QasmSemanticError(
            f"门 {statement.name} 需要 {arity} 个量子比特参数，实际为 {len(statement.args)} 个",
            line, column,
        )

    register_name, size = register
    for argument in statement.args:
        arg_line, arg_column = position(argument.loc)
        if argument.register != register_name:
            raise QasmSemanticError(f"未声明的量子寄存器: {argument.register}", arg_line, arg_column)
        if argument.index is not None and argument.index >= size:
            raise QasmSemanticError(
                f"量子比特索引越界: {argument.register}[{argument.index}] (寄存器大小 {size})",
                arg_line, arg_column,
            )

    # 不带索引的参数表示整个寄存器
    if all(argument.index is not None for argument in statement.args):
        qubit_lists = [[argument.index for argument in statement.args]]
    else:
        qubit_lists = [
            [i if argument.index is None else argument.index for argument in statement.args]
            for i in range(size)
        ]

    gates = []
    for qubits in qubit_lists:
        try:
            gates.append(Gate(name=name, qubits=tuple(qubits), params=statement.params))
        except ValueError as e:
            raise QasmSemanticError(str(e), line, column) from e
    return gates


# ==============================================================================
# 生成


def format_param(value: float) -> str:
    """以可无损往返的最短十进制形式输出参数"""
    return repr(float(value))


def emit_qasm(circuit: Circuit, register: str = 'q') -> str:
    """将线路输出为OpenQASM 2.0文本

    Args:
        circuit: 待输出的线路
        register: 量子寄存器名称

    Returns:
        str: QASM文本，门按列表顺序逐行输出

    Raises:
        QasmUnsupportedError: 线路包含不支持的门
    """
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";']
    if circuit.num_qubits > 0:
        lines.append(f'qreg {register}[{circuit.num_qubits}];')

    for index, gate in enumerate(circuit.gates):
        if gate.name not in GATE_SPECS:
            raise QasmUnsupportedError(f"第{index}个门 {gate.name} 不在支持的门集合中")
        head = gate.name
        if gate.params:
            head += '(' + ','.join(format_param(p) for p in gate.params) + ')'
        operands = ','.join(f'{register}[{q}]' for q in gate.qubits)
        lines.append(f'{head} {operands};')

    return '\n'.join(lines) + '\n'


def load_qasm_file(path: str) -> Circuit:
    """读取UTF-8编码的QASM文件"""
    with open(path, 'r', encoding='utf-8') as f:
        return parse_qasm(f.read())


def write_qasm_file(circuit: Circuit, path: str) -> None:
    """将线路写入UTF-8编码的QASM文件"""
    with open(path, 'w', encoding='utf-8') as f:
        f.write(emit_qasm(circuit))


def gate_counts(circuit: Circuit) -> Dict[str, int]:
    """按门名称统计数量"""
    counts: Dict[str, int] = {}
    for gate in circuit.gates:
        counts[gate.name] = counts.get(gate.name, 0) + 1
    return counts
