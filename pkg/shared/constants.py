"""常量定义"""


class AlphaGrid:
    """α采样网格常量"""

    # 属性测试与验证套件统一使用的α网格（覆盖两端，0.5对应closeness）
    DEFAULT = (0.1, 0.25, 0.5, 0.75, 0.9)

    # 路径最小性检查使用的网格
    PATH_MINIMALITY = (0.1, 0.3, 0.5, 0.7, 0.9)

    # closeness对应的底数
    CLOSENESS = 0.5


class Tolerance:
    """数值比较容差"""

    # 浮点比较默认相对容差
    RELATIVE = 1e-9

    # 两侧来自同一份距离数据时的相对容差
    SAME_SOURCE = 1e-12

    # 零值附近的绝对容差尺度（绝对容差 = 相对容差 × ABS_FLOOR）
    ABS_FLOOR = 1.0

    # JSON中实数的有效数字位数
    SIGNIFICANT_DIGITS = 12


class GraphFamily:
    """图族名称"""

    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    BISTAR = "bistar"
    TND = "tnd"
    PETERSEN = "petersen"
    PENTAGON = "pentagon"
    RANDOM = "random"

    ALL = [PATH, CYCLE, COMPLETE, STAR, BISTAR, TND, PETERSEN, PENTAGON, RANDOM]

    # 各图族的最小顶点数
    MIN_VERTICES = {
        PATH: 1,
        CYCLE: 3,
        COMPLETE: 1,
        STAR: 1,
        RANDOM: 1,
    }


class CorpusFamily:
    """验证语料中的来源分组"""

    NAMED = "named"            # 五边形、Petersen、C6、小型标准图
    PATHS = "paths"            # P_2 .. P_64（闭式公式检查）
    TND = "tnd"                # T(n,D) 全量扫描
    EXHAUSTIVE = "exhaustive"  # n ≤ 6 的全部连通标号图
    TREES = "trees"            # n ≤ 8 的全部标号树（Prüfer）
    RANDOM = "random"          # 固定种子的随机连通图

    ALL = [NAMED, PATHS, TND, EXHAUSTIVE, TREES, RANDOM]


class CheckId:
    """验证检查项编号"""

    THM2_5 = "thm2_5"                    # 树上路径最小性
    THM2_6 = "thm2_6"                    # d(G,2) = 0.5·M1 − m
    THM2_7 = "thm2_7"                    # M1 ≤ n(n+1−r) 及等号条件
    THM2_8 = "thm2_8"                    # W_P ≤ M2 − M1 + m 及等号条件
    THM3_1 = "thm3_1"                    # 全局上下界
    THM3_2 = "thm3_2"                    # 直径界
    THM3_3 = "thm3_3"                    # 无三角无四边形界
    COR3_4 = "cor3_4"                    # 半径上界（Moore / C6 取等）
    THM3_5 = "thm3_5"                    # 树或围长≥7 的界
    COR3_10 = "cor3_10"                  # T(n,D) 闭式公式
    RM2_IDENTITY = "rm2_identity"        # RM2 = M2 − M1 + m
    GC_CLOSENESS = "gc_closeness"        # GC(0.5) = C
    PATH_CLOSED_FORM = "path_closed_form"
    EDGE_MONOTONICITY = "edge_monotonicity"
    DISTANCE_SANITY = "distance_sanity"

    ALL = [
        THM2_5, THM2_6, THM2_7, THM2_8,
        THM3_1, THM3_2, THM3_3, COR3_4, THM3_5, COR3_10,
        RM2_IDENTITY, GC_CLOSENESS, PATH_CLOSED_FORM,
        EDGE_MONOTONICITY, DISTANCE_SANITY,
    ]


class HarnessConfig:
    """验证套件配置常量"""

    # 每个检查项保留的反例上限
    MAX_COUNTEREXAMPLES = 10

    # 每个检查项保留的取等见证上限
    MAX_WITNESSES = 10

    # 穷举连通图的硬上限
    EXHAUSTIVE_MAX_N = 6

    # 标号树枚举的硬上限
    TREES_MAX_N = 9

    # 并行执行时每批处理的语料数
    BATCH_SIZE = 2048


class Convention:
    """不连通图的取值约定"""

    ALPHA_INF_ZERO = "alpha_inf_zero"


class BenchFamily:
    """快速路径基准测试支持的图族（均存在精确闭式公式）"""

    BISTAR = "bistar"   # T(n,2) 单分支公式
    TND = "tnd"         # T(n,D) 双分支公式
    STAR = "star"       # 直径 ≤ 2 的直径界
    PATH = "path"       # 仅 n ≤ 5（直径 ≤ 4 的树）

    ALL = [BISTAR, TND, STAR, PATH]
