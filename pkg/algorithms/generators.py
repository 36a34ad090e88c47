"""
图族生成模块
标准图族构造器，以及验证语料的枚举工具
"""

import heapq
import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from shared.constants import GraphFamily, HarnessConfig
from shared.error_codes import ErrorCode, InvalidParameterError
from algorithms.graph_core import Graph, build_graph

logger = logging.getLogger(__name__)


def _require(n: int, family: str) -> None:
    minimum = GraphFamily.MIN_VERTICES.get(family, 1)
    if n < minimum:
        raise InvalidParameterError(f"n: {family} needs at least {minimum} vertices, got {n}")


# ==================== 标准图族 ====================

def path(n: int) -> Graph:
    """路径 P_n"""
    _require(n, GraphFamily.PATH)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """圈 C_n（n ≥ 3）"""
    _require(n, GraphFamily.CYCLE)
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """完全图 K_n"""
    _require(n, GraphFamily.COMPLETE)
    return build_graph(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """星 S_n：中心0，叶子 1..n−1"""
    _require(n, GraphFamily.STAR)
    return build_graph(n, [(0, i) for i in range(1, n)])


def pentagon() -> Graph:
    """五边形（k=2 的Moore图）"""
    return cycle(5)


def petersen() -> Graph:
    """Petersen图：外圈 0–4，内部五角星 5–9，辐条 i↔i+5"""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


# ==================== T(n,D) ====================

@dataclass
class TndSpec:
    """
    T(r_1, …, r_D)：在星 S_{D+1} 的第 i 个叶子上挂 r_i 个悬挂点

    r 要求非增；乱序输入会被排序并通过 canonicalized 标记
    """
    D: int
    r: List[int]
    canonicalized: bool = field(default=False)

    def __post_init__(self):
        self.r = [int(x) for x in self.r]
        if self.D < 2:
            raise InvalidParameterError(f"D: branch count must be at least 2, got {self.D}")
        if len(self.r) != self.D:
            raise InvalidParameterError(f"r: expected {self.D} entries, got {len(self.r)}")
        if any(x < 0 for x in self.r):
            raise InvalidParameterError(f"r: entries must be non-negative, got {self.r}")
        ordered = sorted(self.r, reverse=True)
        if ordered != list(self.r):
            logger.warning(f"TndSpec r={self.r} is not non-increasing, canonicalized to {ordered}")
            self.r = ordered
            self.canonicalized = True

    @property
    def n(self) -> int:
        """顶点数 1 + D + Σ r_i"""
        return 1 + self.D + sum(self.r)

    @property
    def branches(self) -> int:
        """r_i > 0 的分支数"""
        return sum(1 for x in self.r if x > 0)


def t_tree(spec: TndSpec) -> Graph:
    """
    构造 T(r_1, …, r_D)

    中心为0，分支顶点为 1..D，随后按分支顺序依次追加叶子
    """
    edges: List[Tuple[int, int]] = [(0, i) for i in range(1, spec.D + 1)]
    next_vertex = spec.D + 1
    for i, count in enumerate(spec.r, start=1):
        for _ in range(count):
            edges.append((i, next_vertex))
            next_vertex += 1
    return build_graph(spec.n, edges)


def bistar(n: int, D: int) -> Graph:
    """双星 T(n−D−1, 0, …, 0) ∈ T(n,D)"""
    if n < D + 1:
        raise InvalidParameterError(f"n: bistar needs n ≥ D+1 = {D + 1}, got {n}")
    return t_tree(TndSpec(D=D, r=[n - D - 1] + [0] * (D - 1)))


def _partitions(total: int, parts: int, cap: int) -> Iterator[List[int]]:
    """total 拆成 parts 个非增非负整数（每个 ≤ cap）"""
    if parts == 0:
        if total == 0:
            yield []
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield [first] + rest


def tnd_sweep(max_D: int, max_leaves: int, min_D: int = 2) -> Iterator[TndSpec]:
    """全部 D ∈ [min_D, max_D]、Σ r_i ≤ max_leaves 的 TndSpec"""
    for D in range(min_D, max_D + 1):
        for total in range(max_leaves + 1):
            for r in _partitions(total, D, total):
                yield TndSpec(D=D, r=r)


# ==================== Prüfer ====================

def tree_from_pruefer(seq: Sequence[int]) -> Graph:
    """
    Prüfer序列解码为标号树

    Args:
        seq: 长度 n−2 的序列，每项 < n

    Raises:
        InvalidParameterError: 序列元素越界
    """
    n = len(seq) + 2
    for x in seq:
        if not (0 <= x < n):
            raise InvalidParameterError(
                f"seq: entry {x} is outside 0..{n - 1}",
                ErrorCode.VERTEX_OUT_OF_RANGE
            )

    degree = [1] * n
    for x in seq:
        degree[x] += 1

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """按Prüfer序列字典序枚举 n 顶点上的全部标号树（n^(n−2) 棵）"""
    if n < 1:
        raise InvalidParameterError(f"n: tree enumeration needs n ≥ 1, got {n}")
    if n > HarnessConfig.TREES_MAX_N:
        raise InvalidParameterError(f"n: tree enumeration is capped at {HarnessConfig.TREES_MAX_N}, got {n}")
    if n == 1:
        yield build_graph(1, [])
        return
    for seq in product(range(n), repeat=n - 2):
        yield tree_from_pruefer(seq)


# ==================== 穷举连通图 ====================

def _mask_connected(n: int, neighbor_masks: List[int]) -> bool:
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grown = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                grown |= neighbor_masks[v]
            f >>= 1
            v += 1
        frontier = grown & ~seen
        seen |= grown
    return seen == (1 << n) - 1


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """
    按边位掩码顺序枚举 n 顶点上的全部连通标号图

    边按字典序 (0,1),(0,2),…,(n−2,n−1) 编号，第 i 条边对应掩码第 i 位
    """
    if n < 1 or n > HarnessConfig.EXHAUSTIVE_MAX_N:
        raise InvalidParameterError(
            f"n: exhaustive enumeration supports 1 ≤ n ≤ {HarnessConfig.EXHAUSTIVE_MAX_N}, got {n}"
        )
    all_edges = list(combinations(range(n), 2))
    for mask in range(1 << len(all_edges)):
        neighbor_masks = [0] * n
        chosen = []
        for i, (u, v) in enumerate(all_edges):
            if mask >> i & 1:
                neighbor_masks[u] |= 1 << v
                neighbor_masks[v] |= 1 << u
                chosen.append((u, v))
        if _mask_connected(n, neighbor_masks):
            yield build_graph(n, chosen)


# ==================== 随机连通图 ====================

class RawStream:
    """PCG64 原始64位输出流（numpy 保证 random_raw 跨版本稳定）"""

    def __init__(self, seed: int):
        self._bitgen = np.random.PCG64(seed)

    def below(self, bound: int) -> int:
        """[0, bound) 内的整数"""
        return int(self._bitgen.random_raw()) % bound


def random_connected_graph(n: int, extra_edges: int, seed: int) -> Graph:
    """
    随机连通图：随机Prüfer序列得到均匀生成树，再加 extra_edges 条不同的非树边

    Args:
        n: 顶点数
        extra_edges: 额外边数
        seed: 随机种子（同种子输出完全一致）

    Raises:
        InvalidParameterError: extra_edges 不可行
    """
    _require(n, GraphFamily.RANDOM)
    capacity = n * (n - 1) // 2 - (n - 1)
    if extra_edges < 0 or extra_edges > capacity:
        raise InvalidParameterError(
            f"extra_edges: must lie in 0..{capacity} for n={n}, got {extra_edges}"
        )
    stream = RawStream(seed)
    if n == 1:
        return build_graph(1, [])

    tree = tree_from_pruefer([stream.below(n) for _ in range(n - 2)])
    tree_edges = list(tree.edges())
    non_edges = [(u, v) for u, v in combinations(range(n), 2) if not tree.has_edge(u, v)]

    # 部分 Fisher–Yates 洗牌
    for i in range(extra_edges):
        j = i + stream.below(len(non_edges) - i)
        non_edges[i], non_edges[j] = non_edges[j], non_edges[i]

    return build_graph(n, tree_edges + non_edges[:extra_edges])
