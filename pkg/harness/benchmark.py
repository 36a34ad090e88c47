"""
快速路径基准测试
度数公式（O(m)）与 n 次BFS（O(n·m)）的 closeness 对比；先比较取值，再报告耗时
"""

import logging
import time
from typing import Callable, List, Sequence, Tuple

from shared.constants import BenchFamily, Tolerance
from shared.error_codes import ConfigError, ErrorCode, InvalidParameterError
from shared.schemas import BenchmarkRow
from shared.utils import is_close
from algorithms.graph_core import Graph, distance_summary
from algorithms import bounds, generators
from algorithms.generators import TndSpec
from algorithms.invariants import closeness_from_counts, degree_sequence_m1, zagreb_m2

logger = logging.getLogger(__name__)

# 路径只有 n ≤ 5（直径 ≤ 4）时存在精确的度数公式
PATH_FORMULA_MAX_N = 5


def _no_formula(family: str, n: int, reason: str) -> InvalidParameterError:
    return InvalidParameterError(f"n: no exact formula for {family} with n={n} ({reason})", ErrorCode.NO_EXACT_FORMULA)


def _bistar_case(n: int) -> Tuple[Graph, str, Callable[[Graph], float]]:
    if n < 4:
        raise _no_formula(BenchFamily.BISTAR, n, "T(n,2) single-branch formula needs n >= 4")
    g = generators.bistar(n, 2)

    def formula(graph: Graph) -> float:
        m1 = degree_sequence_m1(graph.degrees())
        return bounds.formulas_tnd(graph.n, 2, m1, bounds.TndCase.SINGLE_BRANCH).closeness

    return g, "C3_10_case1", formula


def _tnd_case(n: int) -> Tuple[Graph, str, Callable[[Graph], float]]:
    if n < 5:
        raise _no_formula(BenchFamily.TND, n, "T(n,2) two-branch formula needs n >= 5")
    g = generators.t_tree(TndSpec(D=2, r=[n - 4, 1]))

    def formula(graph: Graph) -> float:
        m1 = degree_sequence_m1(graph.degrees())
        return bounds.formulas_tnd(graph.n, 2, m1, bounds.TndCase.TWO_BRANCHES).closeness

    return g, "C3_10_case2", formula


def _star_case(n: int) -> Tuple[Graph, str, Callable[[Graph], float]]:
    if n < 2:
        raise _no_formula(BenchFamily.STAR, n, "diameter bound needs n >= 2")
    g = generators.star(n)

    def formula(graph: Graph) -> float:
        return bounds.bounds_diameter(graph.n, graph.m, min(graph.n - 1, 2)).lower

    return g, "T3_2", formula


def _path_case(n: int) -> Tuple[Graph, str, Callable[[Graph], float]]:
    if n < 2 or n > PATH_FORMULA_MAX_N:
        raise _no_formula(BenchFamily.PATH, n, f"diameter {n - 1} exceeds 4")
    g = generators.path(n)

    def formula(graph: Graph) -> float:
        m1 = degree_sequence_m1(graph.degrees())
        return bounds.bounds_girth7_or_tree(graph.n, graph.m, m1, zagreb_m2(graph), graph.n - 1).lower

    return g, "T3_5", formula


_CASES = {
    BenchFamily.BISTAR: _bistar_case,
    BenchFamily.TND: _tnd_case,
    BenchFamily.STAR: _star_case,
    BenchFamily.PATH: _path_case,
}


def _timed(fn: Callable[[], float], repetitions: int) -> Tuple[float, float]:
    best = float("inf")
    value = 0.0
    for _ in range(repetitions):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return value, best


def fastpath_benchmark(
    family: str,
    sizes: Sequence[int],
    repetitions: int = 1,
    tolerance: float = Tolerance.RELATIVE,
) -> List[BenchmarkRow]:
    """
    对每个规模比较公式值与BFS值并计时

    Args:
        family: bistar / tnd / star / path
        sizes: 顶点数列表
        repetitions: 重复次数（取最短耗时）
        tolerance: 取值比较的相对容差

    Raises:
        ConfigError: 未知图族
        InvalidParameterError: 该规模没有精确公式（在任何计时之前检查全部规模）
    """
    if family not in _CASES:
        raise ConfigError(f"family: expected one of {BenchFamily.ALL}, got '{family}'", ErrorCode.UNKNOWN_FAMILY)
    if repetitions < 1:
        raise InvalidParameterError(f"repetitions: must be at least 1, got {repetitions}")

    cases = [(n, *_CASES[family](n)) for n in sizes]

    rows: List[BenchmarkRow] = []
    for n, g, formula_name, formula in cases:
        bfs_value, bfs_time = _timed(lambda: closeness_from_counts(distance_summary(g).dist_counts), repetitions)
        formula_value, formula_time = _timed(lambda: formula(g), repetitions)
        equal = is_close(formula_value, bfs_value, tolerance)
        if not equal:
            logger.error(f"Fast path mismatch for {family} n={n}: formula={formula_value}, bfs={bfs_value}")
        rows.append(BenchmarkRow(
            family=family,
            n=n,
            formula=formula_name,
            bfs_time=bfs_time,
            formula_time=formula_time,
            bfs_value=bfs_value,
            formula_value=formula_value,
            values_equal=equal,
        ))
        logger.info(f"Benchmark {family} n={n}: bfs {bfs_time:.4f}s, formula {formula_time:.6f}s, equal={equal}")
    return rows
