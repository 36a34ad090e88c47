"""
图核心模块
不可变简单无向图、构造校验、BFS 以及所有度量不变量
（距离、离心率、半径、直径、围长、距离分布）
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from shared.config import settings
from shared.error_codes import ErrorCode, InvalidGraphError, InvalidParameterError
from algorithms import bfs_kernels

logger = logging.getLogger(__name__)

# 不可达距离标记：None，从不使用大整数哨兵
Distance = Optional[int]


@dataclass(frozen=True)
class Graph:
    """不可变简单无向图，顶点为 0..n−1"""
    n: int
    adj: Tuple[Tuple[int, ...], ...]
    m: int

    def degree(self, u: int) -> int:
        """顶点度数 d_u"""
        return len(self.adj[u])

    def degrees(self) -> List[int]:
        """全部顶点度数"""
        return [len(neighbors) for neighbors in self.adj]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """按字典序遍历边 (u, v)，u < v"""
        for u, neighbors in enumerate(self.adj):
            for v in neighbors:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        """判断边是否存在"""
        return v in self._neighbor_sets[u]

    @property
    def _neighbor_sets(self) -> Tuple[frozenset, ...]:
        cached = self.__dict__.get("_sets")
        if cached is None:
            cached = tuple(frozenset(neighbors) for neighbors in self.adj)
            object.__setattr__(self, "_sets", cached)
        return cached

    def neighbor_set(self, u: int) -> frozenset:
        """邻居集合（缓存）"""
        return self._neighbor_sets[u]


@dataclass(frozen=True)
class DistanceSummary:
    """距离分布摘要"""
    dist_counts: Dict[int, int]
    ecc: Tuple[Distance, ...]
    radius: Distance
    diameter: Distance
    connected: bool
    # 各源点可达的顶点数（用于统计有限距离对）
    reached: Tuple[int, ...] = field(default=(), repr=False)

    def count(self, k: int) -> int:
        """距离恰为 k 的无序顶点对数 d(G,k)"""
        return self.dist_counts.get(k, 0)

    @property
    def finite_pairs(self) -> int:
        """有限距离的无序顶点对总数"""
        return sum(self.dist_counts.values())


# ==================== 构造 ====================

def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    构造并校验图

    Args:
        n: 顶点数
        edges: 顶点下标对列表

    Returns:
        校验后的 Graph（重复边合并，邻居表有序）

    Raises:
        InvalidGraphError: 自环或顶点越界
    """
    if n < 0:
        raise InvalidGraphError(f"vertex count must be non-negative, got {n}", ErrorCode.VERTEX_OUT_OF_RANGE)

    neighbor_sets: List[set] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(
                f"edge ({u},{v}) references a vertex outside 0..{n - 1}",
                ErrorCode.VERTEX_OUT_OF_RANGE
            )
        if u == v:
            raise InvalidGraphError(f"self-loop at vertex {u} is not allowed", ErrorCode.SELF_LOOP)
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
    m = sum(len(s) for s in neighbor_sets) // 2
    return Graph(n=n, adj=adj, m=m)


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise InvalidParameterError(
            f"source vertex {v} is outside 0..{g.n - 1}",
            ErrorCode.VERTEX_OUT_OF_RANGE
        )


# ==================== BFS ====================

def bfs_distances(g: Graph, source: int) -> List[Distance]:
    """
    单源BFS距离

    Returns:
        距离列表，不可达顶点为 None
    """
    _check_vertex(g, source)
    dist: List[Distance] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    """从顶点0出发的一次BFS能否到达全部顶点（n ≤ 1 视为连通）"""
    if g.n <= 1:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def count_components(g: Graph) -> int:
    """连通分量数"""
    seen = [False] * g.n
    components = 0
    for start in range(g.n):
        if seen[start]:
            continue
        components += 1
        seen[start] = True
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return components


def _python_sweep(g: Graph) -> Tuple[List[int], List[int], List[int]]:
    """纯Python的 n 次BFS扫描，返回 (按距离计数的有序对数, 离心率, 可达数)"""
    n = g.n
    adj = g.adj
    counts = [0] * max(n, 1)
    ecc = [0] * n
    reached = [0] * n
    for source in range(n):
        dist = [-1] * n
        dist[source] = 0
        frontier = [source]
        level = 0
        total = 1
        while frontier:
            next_frontier = []
            level += 1
            for u in frontier:
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = level
                        next_frontier.append(w)
            if next_frontier:
                counts[level] += len(next_frontier)
                total += len(next_frontier)
                ecc[source] = level
            frontier = next_frontier
        reached[source] = total
    return counts, ecc, reached


def distance_summary(g: Graph, engine: str = "auto") -> DistanceSummary:
    """
    计算距离分布、离心率、半径、直径

    Args:
        g: 图
        engine: "python" / "numba" / "auto"（顶点数达到阈值且numba可用时使用编译扫描）

    Returns:
        DistanceSummary；不连通时半径/直径/离心率为 None，仅统计有限距离对
    """
    if engine not in ("python", "numba", "auto"):
        raise InvalidParameterError(f"engine: unknown sweep engine '{engine}'")
    use_numba = engine == "numba" or (
        engine == "auto" and bfs_kernels.NUMBA_AVAILABLE and g.n >= settings.NUMBA_MIN_N
    )

    if use_numba:
        counts, ecc, reached = bfs_kernels.sweep(g)
    else:
        counts, ecc, reached = _python_sweep(g)

    # 有序对计数 -> 无序对计数
    dist_counts = {k: c // 2 for k, c in enumerate(counts) if k >= 1 and c > 0}
    connected = all(r == g.n for r in reached)

    if connected and g.n > 0:
        ecc_t: Tuple[Distance, ...] = tuple(int(e) for e in ecc)
        radius: Distance = min(ecc_t)
        diameter: Distance = max(ecc_t)
    elif g.n == 0:
        ecc_t, radius, diameter = (), None, None
    else:
        ecc_t = tuple(None for _ in range(g.n))
        radius, diameter = None, None

    return DistanceSummary(
        dist_counts=dist_counts,
        ecc=ecc_t,
        radius=radius,
        diameter=diameter,
        connected=connected,
        reached=tuple(int(r) for r in reached),
    )


# ==================== 围长 ====================

def girth(g: Graph) -> Optional[int]:
    """
    最短圈长度，无圈时返回 None

    对每个顶点做BFS，遇到非树边 (u, w) 时得到经过源点附近的圈长
    dist[u] + dist[w] + 1，所有源点取最小即为围长
    """
    if g.m == g.n - count_components(g):
        return None

    best: Optional[int] = None
    adj = g.adj
    for source in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            # 更深层不可能再改进
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best
