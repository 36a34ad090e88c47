"""
closeness / 广义closeness 的界与闭式公式

每个界都是标量恒等式，输入 (n, m, M1, M2, d, r) 而不是图本身；
graph_bound_reports 是从图中提取标量的适配层
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional

from shared.constants import AlphaGrid, Tolerance
from shared.error_codes import ErrorCode, InvalidParameterError, PreconditionError
from shared.schemas import BoundReport, Measure, StructuralFlags, TheoremId, TndFormulaValue
from shared.utils import is_close, validate_alpha
from algorithms.graph_core import DistanceSummary, Graph, distance_summary, girth
from algorithms.generators import TndSpec
from algorithms.invariants import (
    closeness_from_counts,
    gc_from_counts,
    structural_flags,
    zagreb_m1,
    zagreb_m2,
)

logger = logging.getLogger(__name__)


class TndCase:
    """T(n,D) 公式的两种情形"""
    SINGLE_BRANCH = "single_branch"   # r_2 = … = r_D = 0
    TWO_BRANCHES = "two_branches"     # r_1, r_2 > 0

    ALL = [SINGLE_BRANCH, TWO_BRANCHES]


def _measure(alpha: Optional[float]) -> Measure:
    return Measure.CLOSENESS if alpha is None else Measure.GENERALIZED_CLOSENESS


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"n: must be at least 1, got {n}")


# ==================== 标量区间 ====================
# 以下 *_interval 函数不做参数校验，供验证套件在热循环中直接调用；
# 对外的 bounds_* 负责校验并包装为 BoundReport


class Interval(NamedTuple):
    """界的标量形式，None 表示该侧无界"""
    lower: Optional[float]
    upper: Optional[float]
    equality_expected: bool


def _path_gc(n: int, alpha: float) -> float:
    return 2.0 * (n * alpha * (1.0 - alpha) - alpha * (1.0 - alpha ** n)) / (1.0 - alpha) ** 2


def global_interval(n: int, alpha: Optional[float]) -> Interval:
    if alpha is None:
        return Interval(2 * n - 4 + 0.5 ** (n - 2), n * (n - 1) / 2, n <= 2)
    # P_2 = K_2，是唯一上下界重合的情形
    return Interval(_path_gc(n, alpha), alpha * n * (n - 1), n <= 2)


def diameter_interval(n: int, m: int, d: int, alpha: Optional[float]) -> Interval:
    if alpha is None:
        lower = n * (n - 1) / 2 ** d + m * (1 - 0.5 ** (d - 1))
        upper = (n * (n - 1) + 2 * m) / 4
    else:
        lower = alpha ** d * n * (n - 1) + 2 * m * alpha * (1 - alpha ** (d - 1))
        upper = alpha ** 2 * n * (n - 1) + 2 * m * alpha * (1 - alpha)
    return Interval(lower, upper, d <= 2)


def tqfree_interval(n: int, m: int, m1: int, d: int, alpha: Optional[float]) -> Interval:
    if alpha is None:
        lower = (n * (n - 1) - m1) / 2 ** d + (m1 + 2 * m) / 4
        upper = (n * (n - 1) + m1 + 4 * m) / 8
    else:
        tail = alpha ** 2 * (m1 - 2 * m) + 2 * m * alpha
        lower = alpha ** d * (n * (n - 1) - m1) + tail
        upper = alpha ** 3 * (n * (n - 1) - m1) + tail
    return Interval(lower, upper, d <= 3)


def girth7_or_tree_interval(n: int, m: int, m1: int, m2: int, d: int, alpha: Optional[float]) -> Interval:
    base = n * (n - 1) + m1 - 2 * m - 2 * m2
    if alpha is None:
        lower = base / 2 ** d + (m2 + 3 * m) / 4
        upper = (n * (n - 1) + m1 + 2 * m2 + 10 * m) / 16
    else:
        tail = (
            2 * alpha ** 3 * (m2 + m)
            + alpha ** 2 * m1 * (1 - 2 * alpha)
            + 2 * m * alpha * (1 - alpha)
        )
        lower = alpha ** d * base + tail
        upper = alpha ** 4 * base + tail
    return Interval(lower, upper, d <= 4)


def _report(theorem_id: TheoremId, alpha: Optional[float], interval: Interval,
            applicable: bool = True) -> BoundReport:
    return BoundReport(
        theorem_id=theorem_id,
        measure=_measure(alpha),
        alpha=alpha,
        lower=interval.lower,
        upper=interval.upper,
        applicable=applicable,
        equality_expected=applicable and interval.equality_expected,
    )


# ==================== 全局界 ====================

def gc_path_closed_form(n: int, alpha: float) -> float:
    """
    GC(P_n) = 2·Σ_{k=1}^{n−1} (n−k)·α^k 的闭式
    2[nα(1−α) − α(1−α^n)] / (1−α)²
    """
    _check_n(n)
    return _path_gc(n, validate_alpha(alpha))


def bounds_global(n: int, alpha: Optional[float] = None) -> BoundReport:
    """
    对任意 n 顶点连通图成立的上下界
    下界由路径取到，上界由完全图取到

    closeness 形式为 [2n−4+0.5^(n−2), n(n−1)/2]，GC 形式为 [GC(P_n), α·n(n−1)]

    Args:
        n: 顶点数
        alpha: α；为空时给出closeness形式
    """
    _check_n(n)
    if alpha is not None:
        alpha = validate_alpha(alpha)
    return _report(TheoremId.T3_1, alpha, global_interval(n, alpha))


def bounds_diameter(n: int, m: int, d: int, alpha: Optional[float] = None) -> BoundReport:
    """
    直径界，d ≤ 2 时取等

    GC ∈ [α^d·n(n−1) + 2mα(1−α^(d−1)), α²·n(n−1) + 2mα(1−α)]
    """
    _check_n(n)
    if d < 1:
        raise InvalidParameterError(f"d: diameter must be at least 1, got {d}")
    if alpha is not None:
        alpha = validate_alpha(alpha)
    return _report(TheoremId.T3_2, alpha, diameter_interval(n, m, d, alpha))


def bounds_tqfree(
    n: int,
    m: int,
    m1: int,
    d: int,
    alpha: Optional[float] = None,
    triangle_quadrangle_free: bool = True,
) -> BoundReport:
    """
    无三角形无四边形图的界，d ≤ 3 时取等

    L = α^d(n(n−1)−M1) + α²(M1−2m) + 2mα，U 为将 α^d 换成 α³
    """
    _check_n(n)
    if alpha is not None:
        alpha = validate_alpha(alpha)
    return _report(TheoremId.T3_3, alpha, tqfree_interval(n, m, m1, d, alpha),
                   applicable=triangle_quadrangle_free)


def bound_moore(
    n: int,
    m: int,
    r: int,
    triangle_quadrangle_free: bool = True,
    connected: bool = True,
    is_moore_diam2: bool = False,
    is_cycle6: bool = False,
) -> BoundReport:
    """
    无三角形无四边形连通图的closeness上界 [n(2n−r) + 4m] / 8
    直径2的Moore图与 C6 取等
    """
    _check_n(n)
    applicable = triangle_quadrangle_free and connected
    return BoundReport(
        theorem_id=TheoremId.C3_4,
        measure=Measure.CLOSENESS,
        upper=(n * (2 * n - r) + 4 * m) / 8,
        applicable=applicable,
        equality_expected=applicable and (is_moore_diam2 or is_cycle6),
    )


def bounds_girth7_or_tree(
    n: int,
    m: int,
    m1: int,
    m2: int,
    d: int,
    alpha: Optional[float] = None,
    tree_or_girth7: bool = True,
) -> BoundReport:
    """
    树或围长 ≥ 7 的连通图的界，d ≤ 4 时取等

    L = α^d(n(n−1)+M1−2m−2M2) + 2α³(M2+m) + α²M1(1−2α) + 2mα(1−α)，U 为将 α^d 换成 α⁴
    """
    _check_n(n)
    if alpha is not None:
        alpha = validate_alpha(alpha)
    return _report(TheoremId.T3_5, alpha, girth7_or_tree_interval(n, m, m1, m2, d, alpha),
                   applicable=tree_or_girth7)


# ==================== T(n,D) 公式 ====================

def formulas_tnd(n: int, D: int, m1: int, case: str, alpha: float = AlphaGrid.CLOSENESS) -> TndFormulaValue:
    """
    T(n,D) 中树的GC与closeness闭式

    Args:
        n: 顶点数（须 > D+1）
        D: 分支数（≥ 2）
        m1: 第一Zagreb指数
        case: single_branch / two_branches
        alpha: α

    Raises:
        InvalidParameterError: n 与 D 的关系不合法或情形未知
    """
    if D < 2:
        raise InvalidParameterError(f"D: must be at least 2, got {D}")
    if n <= D + 1:
        raise InvalidParameterError(f"n: formula needs n > D+1 = {D + 1}, got {n}")
    if case == TndCase.TWO_BRANCHES and n < D + 3:
        raise InvalidParameterError(f"n: two_branches needs n ≥ D+3 = {D + 3}, got {n}")
    if m1 < 0:
        raise InvalidParameterError(f"m1: must be non-negative, got {m1}")
    alpha = validate_alpha(alpha)

    # RM2 = (D−1)(n−D−1)
    rm2 = (D - 1) * (n - D - 1)
    linear = 2 * (n - 1) * alpha * (1 - alpha)
    if case == TndCase.SINGLE_BRANCH:
        gc = 2 * alpha ** 3 * rm2 + alpha ** 2 * m1 + linear
        c = (rm2 + m1 + 2 * (n - 1)) / 4
    elif case == TndCase.TWO_BRANCHES:
        gc = (
            alpha ** 4 * (n * (n - 1) - m1)
            + 2 * alpha ** 3 * rm2 * (1 - alpha)
            + alpha ** 2 * m1
            + linear
        )
        c = ((n - 1) * (n + 8) + 2 * rm2 + 3 * m1) / 16
    else:
        raise InvalidParameterError(f"case: expected one of {TndCase.ALL}, got '{case}'")
    return TndFormulaValue(gc=gc, closeness=c, alpha=alpha)


def tnd_case(spec: TndSpec) -> Optional[str]:
    """TndSpec 适用的公式情形；星（全部 r_i = 0）没有公式"""
    if spec.branches == 0:
        return None
    return TndCase.SINGLE_BRANCH if spec.branches == 1 else TndCase.TWO_BRANCHES


def recognize_tnd(g: Graph, summary: Optional[DistanceSummary] = None) -> Optional[TndSpec]:
    """
    识别 T(n,D) 成员：半径 ≤ 2 的树，中心取离心率 ≤ 2、度 ≥ 2 且非叶邻居最多的顶点

    Returns:
        对应的 TndSpec，非成员返回 None
    """
    summary = summary if summary is not None else distance_summary(g)
    if not summary.connected or g.m != g.n - 1 or g.n < 3:
        return None
    candidates = [v for v in range(g.n) if summary.ecc[v] <= 2 and g.degree(v) >= 2]
    if not candidates:
        return None
    # 双分支树的中心唯一：优先选拥有最多非叶邻居的顶点
    center = max(candidates, key=lambda v: (sum(1 for w in g.adj[v] if g.degree(w) > 1), -v))
    r = [g.degree(w) - 1 for w in g.adj[center]]
    return TndSpec(D=len(r), r=sorted(r, reverse=True))


# ==================== 适配层 ====================

@dataclass
class GraphScalars:
    """界公式所需的图标量"""
    n: int
    m: int
    m1: int
    m2: int
    radius: int
    diameter: int
    flags: StructuralFlags
    dist_counts: dict


def extract_scalars(g: Graph, summary: Optional[DistanceSummary] = None) -> GraphScalars:
    """
    从连通图中提取标量

    Raises:
        PreconditionError: 图不连通
    """
    summary = summary if summary is not None else distance_summary(g)
    if not summary.connected:
        raise PreconditionError(
            "bounds require a connected graph (disconnected input)",
            ErrorCode.DISCONNECTED_GRAPH
        )
    flags = structural_flags(g, summary, girth(g), girth_known=True)
    return GraphScalars(
        n=g.n,
        m=g.m,
        m1=zagreb_m1(g),
        m2=zagreb_m2(g),
        radius=summary.radius or 0,
        diameter=summary.diameter or 0,
        flags=flags,
        dist_counts=summary.dist_counts,
    )


def _observe(report: BoundReport, truth: float, rel_tol: float) -> BoundReport:
    # 上下界分别判断：路径只取下界，完全图只取上界
    report.truth = truth
    if report.lower is not None:
        report.lower_attained = is_close(truth, report.lower, rel_tol)
    if report.upper is not None:
        report.upper_attained = is_close(truth, report.upper, rel_tol)
    report.equality_observed = bool(report.lower_attained or report.upper_attained)
    return report


def reports_for_scalars(
    s: GraphScalars,
    alpha: Optional[float],
    tnd: Optional[TndSpec] = None,
) -> List[BoundReport]:
    """单个α（None 表示closeness形式）下的全部界报告，不含真值"""
    # 直径至少为1才有意义；n = 1 时以1代入，界退化为0
    d = max(s.diameter, 1)
    reports = [
        bounds_global(s.n, alpha),
        bounds_diameter(s.n, s.m, d, alpha),
        bounds_tqfree(s.n, s.m, s.m1, d, alpha, s.flags.triangle_quadrangle_free),
        bounds_girth7_or_tree(s.n, s.m, s.m1, s.m2, d, alpha, s.flags.is_tree or s.flags.girth_ge_7),
    ]
    if alpha is None:
        reports.insert(3, bound_moore(
            s.n, s.m, s.radius,
            triangle_quadrangle_free=s.flags.triangle_quadrangle_free,
            connected=True,
            is_moore_diam2=s.flags.is_moore_diam2,
            is_cycle6=s.flags.is_cycle6,
        ))
    if tnd is not None:
        case = tnd_case(tnd)
        if case is not None:
            value = formulas_tnd(tnd.n, tnd.D, s.m1, case, alpha if alpha is not None else AlphaGrid.CLOSENESS)
            result = value.closeness if alpha is None else value.gc
            reports.append(BoundReport(
                theorem_id=TheoremId.C3_10_CASE1 if case == TndCase.SINGLE_BRANCH else TheoremId.C3_10_CASE2,
                measure=_measure(alpha),
                alpha=alpha,
                lower=result,
                upper=result,
                applicable=True,
                equality_expected=True,
            ))
    return reports


def graph_bound_reports(
    g: Graph,
    alphas: Iterable[float] = (),
    rel_tol: float = Tolerance.RELATIVE,
) -> List[BoundReport]:
    """
    图的全部界报告（closeness形式 + 每个α的GC形式），附带BFS真值

    Raises:
        PreconditionError: 图不连通
    """
    summary = distance_summary(g)
    s = extract_scalars(g, summary)
    tnd = recognize_tnd(g, summary)

    reports: List[BoundReport] = []
    truth = closeness_from_counts(s.dist_counts)
    for report in reports_for_scalars(s, None, tnd):
        reports.append(_observe(report, truth, rel_tol))
    for alpha in alphas:
        alpha = validate_alpha(alpha)
        truth = gc_from_counts(s.dist_counts, alpha)
        for report in reports_for_scalars(s, alpha, tnd):
            reports.append(_observe(report, truth, rel_tol))

    logger.info(f"Bound reports computed: n={g.n}, m={g.m}, reports={len(reports)}")
    return reports
