"""
验证检查项
每个检查函数接收一个图的 Profile，返回 Outcome（不适用时返回 None）
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, Optional, Sequence

from shared.constants import AlphaGrid, CheckId, Tolerance
from shared.utils import format_real, interval_slack, is_close, within
from algorithms.graph_core import DistanceSummary, Graph, build_graph, distance_summary, girth
from algorithms.generators import TndSpec, path
from algorithms.invariants import (
    closeness_from_counts,
    gc_from_counts,
    reduced_zagreb_m2,
    structural_flags,
    zagreb_m1,
    zagreb_m2,
)
from algorithms import bounds
from shared.schemas import StructuralFlags

logger = logging.getLogger(__name__)


@dataclass
class Profile:
    """一个语料图的全部预计算量"""
    graph: Graph
    label: str
    family: str
    summary: DistanceSummary
    girth: Optional[int]
    flags: StructuralFlags
    m1: int
    m2: int
    rm2: int
    closeness: float
    gc: Dict[float, float]
    tnd: Optional[TndSpec] = None

    @property
    def connected(self) -> bool:
        return self.summary.connected

    @property
    def diameter(self) -> int:
        return self.summary.diameter or 0

    @property
    def radius(self) -> int:
        return self.summary.radius or 0


@dataclass
class Outcome:
    """单个图在单个检查上的结果"""
    passed: bool
    slack: Optional[float] = None
    equality: bool = False
    detail: str = ""


@dataclass
class CheckContext:
    """检查运行参数"""
    alpha_grid: Sequence[float]
    tolerance: float = Tolerance.RELATIVE
    monotonicity_max_n: int = 6


def build_profile(graph: Graph, label: str = "", family: str = "",
                  alphas: Sequence[float] = AlphaGrid.DEFAULT,
                  tnd: Optional[TndSpec] = None) -> Profile:
    """一次BFS扫描，计算所有检查共用的量"""
    summary = distance_summary(graph)
    # 树无圈
    g_value = None if summary.connected and graph.m == graph.n - 1 else girth(graph)
    return Profile(
        graph=graph,
        label=label,
        family=family,
        summary=summary,
        girth=g_value,
        flags=structural_flags(graph, summary, g_value, girth_known=True),
        m1=zagreb_m1(graph),
        m2=zagreb_m2(graph),
        rm2=reduced_zagreb_m2(graph),
        closeness=closeness_from_counts(summary.dist_counts),
        gc={a: gc_from_counts(summary.dist_counts, a) for a in alphas},
        tnd=tnd,
    )


def _exact(holds: bool, detail: str, equality: bool = False) -> Outcome:
    return Outcome(passed=holds, equality=equality, detail="" if holds else detail)


# ==================== 第二节恒等式与不等式 ====================

@lru_cache(maxsize=None)
def _path_gc(n: int, alpha: float) -> float:
    return gc_from_counts(distance_summary(path(n)).dist_counts, alpha)


def check_path_minimality(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """树上 GC(P_n) ≤ GC(T)"""
    if not p.flags.is_tree:
        return None
    n = p.graph.n
    slack = float("inf")
    for alpha in AlphaGrid.PATH_MINIMALITY:
        value = p.gc[alpha] if alpha in p.gc else gc_from_counts(p.summary.dist_counts, alpha)
        floor = _path_gc(n, alpha)
        if not within(value, floor, None, ctx.tolerance):
            return Outcome(False, detail=f"alpha={alpha}: GC(T)={format_real(value)} < GC(P_n)={format_real(floor)}")
        slack = min(slack, value - floor)
    # 等号仅在 T 本身是路径时出现
    return Outcome(True, slack=max(slack, 0.0), equality=is_close(slack, 0.0, ctx.tolerance))


def check_d2_identity(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """无三角无四边形图：2·d(G,2) = M1 − 2m"""
    if not p.flags.triangle_quadrangle_free:
        return None
    d2 = p.summary.count(2)
    return _exact(2 * d2 == p.m1 - 2 * p.graph.m, f"d(G,2)={d2} but 0.5*M1-m={(p.m1 - 2 * p.graph.m) / 2}")


def check_m1_radius(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """连通无三角无四边形图：M1 ≤ n(n+1−r)，取等 ⇔ 直径2的Moore图或 C6"""
    if not (p.connected and p.flags.triangle_quadrangle_free):
        return None
    n = p.graph.n
    cap = n * (n + 1 - p.radius)
    if p.m1 > cap:
        return Outcome(False, detail=f"M1={p.m1} exceeds n(n+1-r)={cap}")
    attained = p.m1 == cap
    expected = p.flags.is_moore_diam2 or p.flags.is_cycle6
    if attained != expected:
        return Outcome(False, detail=f"equality M1=n(n+1-r) is {attained} but Moore/C6 is {expected}")
    return Outcome(True, slack=float(cap - p.m1), equality=attained)


def check_polarity(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """连通图：W_P ≤ M2 − M1 + m，取等 ⇔ 树或围长 ≥ 7"""
    if not p.connected:
        return None
    wp = p.summary.count(3)
    cap = p.m2 - p.m1 + p.graph.m
    if wp > cap:
        return Outcome(False, detail=f"W_P={wp} exceeds M2-M1+m={cap}")
    attained = wp == cap
    expected = p.flags.is_tree or p.flags.girth_ge_7
    if attained != expected:
        return Outcome(False, detail=f"equality W_P=M2-M1+m is {attained} but tree/girth>=7 is {expected}")
    return Outcome(True, slack=float(cap - wp), equality=attained)


# ==================== 第三节的界 ====================

def _sandwich(p: Profile, ctx: CheckContext, make: Callable[[Optional[float]], bounds.Interval],
              on_value: Optional[Callable[[Optional[float], float, bounds.Interval], Optional[str]]] = None) -> Outcome:
    """
    对closeness形式与每个α检查 L ≤ 真值 ≤ U，以及充分条件成立时的取等

    on_value 可对单个取值追加检查，返回非空字符串即判为失败
    """
    slack = float("inf")
    equality = True
    for alpha in [None, *ctx.alpha_grid]:
        interval = make(alpha)
        lower, upper = interval.lower, interval.upper
        truth = p.closeness if alpha is None else p.gc[alpha]
        where = "closeness" if alpha is None else f"alpha={alpha}"
        if not within(truth, lower, upper, ctx.tolerance):
            return Outcome(False, detail=(
                f"{where}: value {format_real(truth)} outside "
                f"[{format_real(lower) if lower is not None else '-inf'}, "
                f"{format_real(upper) if upper is not None else 'inf'}]"
            ))
        observed = all(is_close(truth, b, ctx.tolerance) for b in (lower, upper) if b is not None)
        if interval.equality_expected and not observed:
            return Outcome(False, detail=f"{where}: equality expected but value {format_real(truth)} differs from the bound")
        if on_value is not None:
            problem = on_value(alpha, truth, interval)
            if problem:
                return Outcome(False, detail=f"{where}: {problem}")
        equality = equality and observed
        slack = min(slack, interval_slack(truth, lower, upper))
    return Outcome(True, slack=max(slack, 0.0), equality=equality)


def check_global(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """全局界；路径取下界，完全图取上界"""
    if not p.connected:
        return None
    n, m = p.graph.n, p.graph.m
    is_path = p.flags.is_tree and p.diameter == max(n - 1, 0)
    is_complete = m == n * (n - 1) // 2

    def attained(alpha: Optional[float], truth: float, interval: bounds.Interval) -> Optional[str]:
        if is_path and not is_close(truth, interval.lower, ctx.tolerance):
            return "path misses the lower bound"
        if is_complete and not is_close(truth, interval.upper, ctx.tolerance):
            return "complete graph misses the upper bound"
        return None

    outcome = _sandwich(p, ctx, lambda a: bounds.global_interval(n, a), attained)
    if outcome.passed:
        outcome.equality = is_path or is_complete
    return outcome


def check_diameter(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    if not p.connected or p.graph.n < 2:
        return None
    n, m, d = p.graph.n, p.graph.m, p.diameter
    return _sandwich(p, ctx, lambda a: bounds.diameter_interval(n, m, d, a))


def check_tqfree(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    if not (p.connected and p.flags.triangle_quadrangle_free) or p.graph.n < 2:
        return None
    n, m, d = p.graph.n, p.graph.m, p.diameter
    return _sandwich(p, ctx, lambda a: bounds.tqfree_interval(n, m, p.m1, d, a))


def check_moore(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """closeness ≤ [n(2n−r)+4m]/8，Moore图与 C6 取等"""
    if not (p.connected and p.flags.triangle_quadrangle_free):
        return None
    report = bounds.bound_moore(
        p.graph.n, p.graph.m, p.radius,
        triangle_quadrangle_free=True,
        connected=True,
        is_moore_diam2=p.flags.is_moore_diam2,
        is_cycle6=p.flags.is_cycle6,
    )
    if not within(p.closeness, None, report.upper, ctx.tolerance):
        return Outcome(False, detail=f"closeness {format_real(p.closeness)} exceeds {format_real(report.upper)}")
    observed = is_close(p.closeness, report.upper, ctx.tolerance)
    if report.equality_expected and not observed:
        return Outcome(False, detail=f"equality expected but closeness {format_real(p.closeness)} "
                                     f"differs from {format_real(report.upper)}")
    return Outcome(True, slack=max(report.upper - p.closeness, 0.0), equality=observed)


def check_girth7_or_tree(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    if not (p.connected and (p.flags.is_tree or p.flags.girth_ge_7)) or p.graph.n < 2:
        return None
    n, m, d = p.graph.n, p.graph.m, p.diameter
    return _sandwich(p, ctx, lambda a: bounds.girth7_or_tree_interval(n, m, p.m1, p.m2, d, a))


def check_tnd_formulas(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """T(n,D) 闭式公式与BFS真值一致；未标注的树按半径 ≤ 2 识别"""
    spec = p.tnd
    if spec is None and p.flags.is_tree and p.graph.n >= 3 and p.radius <= 2:
        spec = bounds.recognize_tnd(p.graph, p.summary)
    if spec is None:
        return None
    case = bounds.tnd_case(spec)
    if case is None:
        return None
    for alpha in ctx.alpha_grid:
        value = bounds.formulas_tnd(spec.n, spec.D, p.m1, case, alpha)
        if not is_close(p.gc[alpha], value.gc, ctx.tolerance):
            return Outcome(False, detail=f"{case} alpha={alpha}: formula {format_real(value.gc)} "
                                         f"vs BFS {format_real(p.gc[alpha])}")
    value = bounds.formulas_tnd(spec.n, spec.D, p.m1, case)
    if not is_close(p.closeness, value.closeness, ctx.tolerance):
        return Outcome(False, detail=f"{case}: closeness formula {format_real(value.closeness)} "
                                     f"vs BFS {format_real(p.closeness)}")
    return Outcome(True, equality=True)


# ==================== 交叉校验 ====================

def check_rm2(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    expected = p.m2 - p.m1 + p.graph.m
    return _exact(p.rm2 == expected, f"RM2={p.rm2} but M2-M1+m={expected}")


def check_gc_closeness(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """GC(0.5) 与 closeness 走不同求和路径"""
    value = p.gc.get(AlphaGrid.CLOSENESS)
    if value is None:
        value = gc_from_counts(p.summary.dist_counts, AlphaGrid.CLOSENESS)
    if not is_close(value, p.closeness, Tolerance.SAME_SOURCE):
        return Outcome(False, detail=f"GC(0.5)={format_real(value)} but C={format_real(p.closeness)}")
    return Outcome(True, equality=True)


def check_path_closed_form(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """路径：闭式公式 = BFS，且 α=0.5 时为 2n−4+0.5^(n−2)"""
    n = p.graph.n
    if not (p.flags.is_tree and n >= 2 and p.diameter == n - 1):
        return None
    for alpha in ctx.alpha_grid:
        closed = bounds.gc_path_closed_form(n, alpha)
        if not is_close(p.gc[alpha], closed, ctx.tolerance):
            return Outcome(False, detail=f"alpha={alpha}: closed form {format_real(closed)} vs BFS {format_real(p.gc[alpha])}")
    closed = bounds.gc_path_closed_form(n, AlphaGrid.CLOSENESS)
    if not is_close(closed, 2 * n - 4 + 0.5 ** (n - 2), ctx.tolerance):
        return Outcome(False, detail=f"closed form at 0.5 is {format_real(closed)}")
    return Outcome(True, equality=True)


def check_edge_monotonicity(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """小连通图上加任意一条边，GC 不减"""
    g = p.graph
    if not p.connected or g.n > ctx.monotonicity_max_n:
        return None
    edges = list(g.edges())
    slack = float("inf")
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        counts = distance_summary(build_graph(g.n, edges + [(u, v)])).dist_counts
        for alpha in ctx.alpha_grid:
            grown = gc_from_counts(counts, alpha)
            if not within(grown, p.gc[alpha], None, ctx.tolerance):
                return Outcome(False, detail=f"adding edge ({u},{v}) lowers GC at alpha={alpha}")
            slack = min(slack, grown - p.gc[alpha])
    return Outcome(True, slack=max(slack, 0.0) if slack != float("inf") else None)


def check_distance_sanity(p: Profile, ctx: CheckContext) -> Optional[Outcome]:
    """Σ_k d(G,k) = C(n,2)，d(G,1) = m，r ≤ d ≤ 2r"""
    s = p.summary
    n, m = p.graph.n, p.graph.m
    if not s.connected:
        return None
    if s.finite_pairs != n * (n - 1) // 2:
        return Outcome(False, detail=f"distance distribution sums to {s.finite_pairs}, expected {n * (n - 1) // 2}")
    if s.count(1) != m:
        return Outcome(False, detail=f"d(G,1)={s.count(1)} but m={m}")
    if not (p.radius <= p.diameter <= 2 * p.radius):
        return Outcome(False, detail=f"radius {p.radius} and diameter {p.diameter} violate r <= d <= 2r")
    return Outcome(True)


CHECKS: Dict[str, Callable[[Profile, CheckContext], Optional[Outcome]]] = {
    CheckId.THM2_5: check_path_minimality,
    CheckId.THM2_6: check_d2_identity,
    CheckId.THM2_7: check_m1_radius,
    CheckId.THM2_8: check_polarity,
    CheckId.THM3_1: check_global,
    CheckId.THM3_2: check_diameter,
    CheckId.THM3_3: check_tqfree,
    CheckId.COR3_4: check_moore,
    CheckId.THM3_5: check_girth7_or_tree,
    CheckId.COR3_10: check_tnd_formulas,
    CheckId.RM2_IDENTITY: check_rm2,
    CheckId.GC_CLOSENESS: check_gc_closeness,
    CheckId.PATH_CLOSED_FORM: check_path_closed_form,
    CheckId.EDGE_MONOTONICITY: check_edge_monotonicity,
    CheckId.DISTANCE_SANITY: check_distance_sanity,
}
