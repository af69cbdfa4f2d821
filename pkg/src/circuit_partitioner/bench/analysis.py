"""
基准测试结果分析
"""

from typing import Iterable, List, Sequence

import numpy as np
import pandas as pd

from ..core.models import BenchRecord


def median_time(samples: Sequence[float]) -> float:
    """多次重复计时的中位数"""
    if len(samples) == 0:
        raise ValueError("计时样本不能为空")
    return float(np.median(np.asarray(samples, dtype=float)))


def loglog_slope(sizes: Sequence[float], times: Sequence[float]) -> float:
    """对数坐标下的线性回归斜率（约为1时表示线性增长）

    Raises:
        ValueError: 点数少于2或存在非正值
    """
    x = np.asarray(sizes, dtype=float)
    y = np.asarray(times, dtype=float)
    if x.size < 2 or x.size != y.size:
        raise ValueError("至少需要两组长度相同的数据点")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("对数回归要求所有数据为正")
    slope, _ = np.polyfit(np.log(x), np.log(y), 1)
    return float(slope)


def max_adjacent_ratio(values: Sequence[float]) -> float:
    """相邻两项之比 values[i+1] / values[i] 的最大值"""
    data = np.asarray(values, dtype=float)
    if data.size < 2:
        raise ValueError("至少需要两个数据点")
    if np.any(data[:-1] <= 0):
        raise ValueError("比值的分母必须为正")
    return float(np.max(data[1:] / data[:-1]))


def improvement_ratio(reference: float, candidate: float) -> float:
    """相对于参考值的改进比例 (reference - candidate) / reference"""
    if reference == 0:
        return 0.0
    return (reference - candidate) / reference


def records_frame(records: Iterable[BenchRecord]) -> pd.DataFrame:
    """将基准记录转换为DataFrame（列顺序与CSV一致）"""
    return pd.DataFrame([r.to_row() for r in records], columns=list(BenchRecord.CSV_COLUMNS))


def summarize(records: List[BenchRecord], baseline: str = 'quick',
              target: str = 'gtqcp') -> pd.DataFrame:
    """按k汇总目标方法相对基线方法的合并后块数改进

    只比较两种方法都成功完成的 (circuit, k) 单元

    Returns:
        DataFrame: 列为 k, cells, mean_improvement, win_rate, total_improvement
    """
    columns = ['k', 'cells', 'mean_improvement', 'win_rate', 'total_improvement']
    frame = records_frame(records)
    frame = frame[frame['status'].isin(['ok', 'ok_parallel'])]
    frame = frame[frame['method'].isin([baseline, target])]
    if frame.empty:
        return pd.DataFrame(columns=columns)

    paired = frame.pivot_table(
        index=['circuit', 'k'], columns='method', values='blocks_merged', aggfunc='first'
    ).dropna()
    if paired.empty or baseline not in paired or target not in paired:
        return pd.DataFrame(columns=columns)

    paired = paired.reset_index()
    paired['improvement'] = [
        improvement_ratio(b, t) for b, t in zip(paired[baseline], paired[target])
    ]
    paired['win'] = paired[target] <= paired[baseline]

    rows = []
    for k, group in paired.groupby('k'):
        rows.append({
            'k': int(k),
            'cells': len(group),
            'mean_improvement': float(group['improvement'].mean()),
            'win_rate': float(group['win'].mean()),
            'total_improvement': improvement_ratio(
                float(group[baseline].sum()), float(group[target].sum())
            ),
        })
    return pd.DataFrame(rows, columns=columns)


SCALING_COLUMNS = ['analysis', 'method', 'subject', 'points', 'value']


def _family(circuit: str) -> str:
    return circuit.split(':', 1)[0]


def scaling_summary(records: List[BenchRecord]) -> pd.DataFrame:
    """计时增长形状分析

    k_response: 同一线路与方法下按k升序排列的中位计时，相邻两项之比的最大值；
    gate_slope: 同一方法、k与线路家族下计时对门数的对数回归斜率。
    只使用成功且计时为正的记录，点数不足2的组合不输出

    Returns:
        DataFrame: 列为 analysis, method, subject, points, value
    """
    frame = records_frame(records)
    frame = frame[frame['status'].isin(['ok', 'ok_parallel'])]
    frame = frame[frame['time_s'] > 0]

    rows = []
    for (circuit, method), group in frame.groupby(['circuit', 'method'], sort=True):
        if group['k'].nunique() < 2:
            continue
        group = group.sort_values('k')
        rows.append({
            'analysis': 'k_response',
            'method': method,
            'subject': circuit,
            'points': len(group),
            'value': max_adjacent_ratio(group['time_s'].tolist()),
        })

    frame = frame[frame['g'] > 0]
    frame = frame.assign(family=frame['circuit'].map(_family))
    for (method, k, family), group in frame.groupby(['method', 'k', 'family'], sort=True):
        if group['g'].nunique() < 2:
            continue
        rows.append({
            'analysis': 'gate_slope',
            'method': method,
            'subject': f"{family} k={k}",
            'points': len(group),
            'value': loglog_slope(group['g'].tolist(), group['time_s'].tolist()),
        })
    return pd.DataFrame(rows, columns=SCALING_COLUMNS)
