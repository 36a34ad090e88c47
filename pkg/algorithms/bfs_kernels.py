"""
BFS扫描内核
有numba时编译为机器码，否则退回解释器执行同一份代码
"""

import logging
from typing import List, Tuple

import numpy as np

logger = logging.getLogger(__name__)

try:
    from numba import njit

    NUMBA_AVAILABLE = True
    logger.debug("Numba compiler imported")
except ImportError:
    NUMBA_AVAILABLE = False
    logger.warning("Numba not available, distance sweeps fall back to the interpreter")

    def njit(pyfunc=None, **kwargs):
        """numba缺失时的空装饰器"""
        def wrap(func):
            return func
        return wrap if pyfunc is None else wrap(pyfunc)


def to_csr(adj) -> Tuple[np.ndarray, np.ndarray]:
    """邻接表 -> CSR (indptr, indices)"""
    n = len(adj)
    indptr = np.zeros(n + 1, dtype=np.int64)
    for u in range(n):
        indptr[u + 1] = indptr[u] + len(adj[u])
    indices = np.empty(indptr[n], dtype=np.int64)
    for u in range(n):
        indices[indptr[u]:indptr[u + 1]] = adj[u]
    return indptr, indices


@njit(cache=True)
def _sweep_kernel(indptr, indices, n):
    counts = np.zeros(max(n, 1), dtype=np.int64)
    ecc = np.zeros(n, dtype=np.int64)
    reached = np.zeros(n, dtype=np.int64)
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for source in range(n):
        for v in range(n):
            dist[v] = -1
        dist[source] = 0
        head = 0
        tail = 1
        queue[0] = source
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for p in range(indptr[u], indptr[u + 1]):
                w = indices[p]
                if dist[w] < 0:
                    dist[w] = du
                    queue[tail] = w
                    tail += 1
                    counts[du] += 1
        # 队尾顶点距离最大
        ecc[source] = dist[queue[tail - 1]]
        reached[source] = tail
    return counts, ecc, reached


def sweep(g) -> Tuple[List[int], List[int], List[int]]:
    """
    对图做 n 次BFS

    Returns:
        (有序对按距离计数, 离心率, 各源点可达顶点数)
    """
    indptr, indices = to_csr(g.adj)
    counts, ecc, reached = _sweep_kernel(indptr, indices, g.n)
    return counts.tolist(), ecc.tolist(), reached.tolist()
