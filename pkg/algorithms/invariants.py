"""
图不变量模块
closeness、广义closeness、Zagreb指数 M1/M2/RM2、Wiener极性指数，
以及各定理所依赖的结构谓词
"""

import logging
import math
from typing import Dict, Iterable, Optional, Sequence

from shared.constants import AlphaGrid, Convention
from shared.schemas import InvariantSet, StructuralFlags
from shared.utils import format_real, validate_alpha
from algorithms.graph_core import DistanceSummary, Graph, distance_summary, girth

logger = logging.getLogger(__name__)


# ==================== 距离型度量 ====================

def _summary(g: Graph, summary: Optional[DistanceSummary]) -> DistanceSummary:
    return summary if summary is not None else distance_summary(g)


def closeness_from_counts(dist_counts: Dict[int, int]) -> float:
    """
    由距离分布精确求 closeness = 2·Σ_k d(G,k)·2^(−k)

    每一项都是二进有理数，用 ldexp + fsum 求和，结果与求和顺序无关
    """
    return math.fsum(math.ldexp(count, 1 - k) for k, count in sorted(dist_counts.items()))


def gc_from_counts(dist_counts: Dict[int, int], alpha: float) -> float:
    """由距离分布求 GC = 2·Σ_k d(G,k)·α^k（按 k 升序求和）"""
    total = 0.0
    for k in sorted(dist_counts):
        total += dist_counts[k] * alpha ** k
    return 2.0 * total


def closeness(g: Graph, summary: Optional[DistanceSummary] = None) -> float:
    """
    closeness C(G) = Σ_i Σ_{j≠i} 2^(−d(i,j))

    不可达顶点对贡献 0（α^∞ = 0 约定）
    """
    return closeness_from_counts(_summary(g, summary).dist_counts)


def generalized_closeness(g: Graph, alpha: float, summary: Optional[DistanceSummary] = None) -> float:
    """
    广义closeness GC(G;α) = Σ_i Σ_{j≠i} α^d(i,j)

    Raises:
        InvalidParameterError: α 不在 (0,1) 内
    """
    alpha = validate_alpha(alpha)
    return gc_from_counts(_summary(g, summary).dist_counts, alpha)


# ==================== 度型指数 ====================

def zagreb_m1(g: Graph) -> int:
    """第一Zagreb指数 M1 = Σ_v d_v²"""
    return sum(d * d for d in g.degrees())


def zagreb_m2(g: Graph) -> int:
    """第二Zagreb指数 M2 = Σ_{uv∈E} d_u·d_v"""
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges())


def reduced_zagreb_m2(g: Graph) -> int:
    """约化第二Zagreb指数 RM2 = Σ_{uv∈E} (d_u−1)(d_v−1)"""
    deg = g.degrees()
    return sum((deg[u] - 1) * (deg[v] - 1) for u, v in g.edges())


def wiener_polarity(g: Graph, summary: Optional[DistanceSummary] = None) -> int:
    """Wiener极性指数：距离恰为3的无序顶点对数"""
    return _summary(g, summary).count(3)


# ==================== 结构谓词 ====================

def count_triangles(g: Graph) -> int:
    """按边做邻居交集统计三角形个数"""
    total = 0
    for u, v in g.edges():
        total += len(g.neighbor_set(u) & g.neighbor_set(v))
    return total // 3


def has_quadrangle(g: Graph) -> bool:
    """存在两个顶点拥有至少两个公共邻居 ⇔ 存在4圈"""
    for u in range(g.n):
        seen = set()
        for w in g.adj[u]:
            for x in g.adj[w]:
                if x <= u:
                    continue
                if x in seen:
                    return True
                seen.add(x)
    return False


def _regular_degree(g: Graph) -> Optional[int]:
    degrees = g.degrees()
    if not degrees:
        return None
    k = degrees[0]
    return k if all(d == k for d in degrees) else None


def structural_flags(
    g: Graph,
    summary: Optional[DistanceSummary] = None,
    girth_value: Optional[int] = None,
    girth_known: bool = False,
) -> StructuralFlags:
    """
    计算各定理的结构前提

    Args:
        g: 图
        summary: 已有的距离摘要（可选，避免重复BFS）
        girth_value: 已知的围长
        girth_known: girth_value 是否有效（None 也是合法的无圈标记）

    Returns:
        StructuralFlags
    """
    summary = _summary(g, summary)
    g_value = girth_value if girth_known else girth(g)

    # 围长 ≥ 4 即无三角形；只有围长为3时才需要单独找4圈
    if g_value is None or g_value >= 5:
        triangle_free, quadrangle_free = True, True
    elif g_value == 4:
        triangle_free, quadrangle_free = True, False
    else:
        triangle_free, quadrangle_free = False, not has_quadrangle(g)
    is_tree = summary.connected and g.m == g.n - 1
    girth_ge_7 = g_value is None or g_value >= 7

    k = _regular_degree(g)
    is_moore = (
        k is not None
        and summary.connected
        and summary.diameter == 2
        and g_value == 5
        and g.n == k * k + 1
    )
    is_c6 = g.n == 6 and k == 2 and summary.connected and g_value == 6

    return StructuralFlags(
        is_tree=is_tree,
        triangle_free=triangle_free,
        quadrangle_free=quadrangle_free,
        girth_ge_7=girth_ge_7,
        is_moore_diam2=is_moore,
        is_cycle6=is_c6,
    )


# ==================== 汇总 ====================

def compute_invariants(g: Graph, alphas: Iterable[float] = AlphaGrid.DEFAULT) -> InvariantSet:
    """
    计算完整的不变量集合

    Args:
        g: 图
        alphas: 需要计算GC的α列表

    Returns:
        InvariantSet；不连通图的距离型取值标记为 alpha_inf_zero 约定
    """
    alphas = [validate_alpha(a) for a in alphas]
    summary = distance_summary(g)
    g_value = girth(g)

    result = InvariantSet(
        n=g.n,
        m=g.m,
        connected=summary.connected,
        convention=None if summary.connected else Convention.ALPHA_INF_ZERO,
        closeness=closeness(g, summary),
        gc_alpha={format_real(a): gc_from_counts(summary.dist_counts, a) for a in alphas},
        m1=zagreb_m1(g),
        m2=zagreb_m2(g),
        rm2=reduced_zagreb_m2(g),
        wiener_polarity=wiener_polarity(g, summary),
        girth=g_value,
        radius=summary.radius,
        diameter=summary.diameter,
        distance_distribution={str(k): v for k, v in sorted(summary.dist_counts.items())},
        flags=structural_flags(g, summary, g_value, girth_known=True),
    )

    logger.debug(f"Invariants computed: n={g.n}, m={g.m}, closeness={result.closeness}")
    return result


def degree_sequence_m1(degrees: Sequence[int]) -> int:
    """仅由度序列求 M1（快速路径使用）"""
    return sum(d * d for d in degrees)
