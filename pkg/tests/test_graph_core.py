"""图核心模块测试"""

import pytest

from algorithms import generators
from algorithms.graph_core import (
    Graph,
    bfs_distances,
    build_graph,
    count_components,
    distance_summary,
    girth,
    is_connected,
)
from shared.error_codes import ErrorCode, InvalidGraphError, InvalidParameterError


# ==================== 构造测试 ====================

def test_build_graph_merges_duplicates():
    """测试重复边合并与邻居表有序"""
    g = build_graph(3, [(0, 1), (1, 0), (2, 1), (0, 1)])
    assert g.m == 2
    assert g.adj == ((1,), (0, 2), (1,))
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_build_graph_rejects_self_loop():
    """测试自环被拒绝"""
    with pytest.raises(InvalidGraphError) as exc:
        build_graph(3, [(1, 1)])
    assert exc.value.error_code == ErrorCode.SELF_LOOP


def test_build_graph_rejects_out_of_range():
    """测试顶点越界被拒绝"""
    with pytest.raises(InvalidGraphError) as exc:
        build_graph(3, [(0, 3)])
    assert exc.value.error_code == ErrorCode.VERTEX_OUT_OF_RANGE


def test_graph_is_immutable():
    """测试图不可修改"""
    g = generators.path(3)
    with pytest.raises(Exception):
        g.n = 5


def test_degrees_and_has_edge():
    """测试度数与邻接查询"""
    g = generators.star(5)
    assert g.degrees() == [4, 1, 1, 1, 1]
    assert g.has_edge(0, 3) and g.has_edge(3, 0)
    assert not g.has_edge(1, 2)


# ==================== BFS测试 ====================

def test_bfs_distances_path():
    """测试路径上的BFS距离"""
    assert bfs_distances(generators.path(4), 0) == [0, 1, 2, 3]


def test_bfs_unreachable_is_none():
    """测试不可达顶点标记为None而不是大整数"""
    g = build_graph(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0) == [0, 1, None, None]


def test_bfs_source_out_of_range():
    """测试源点越界"""
    with pytest.raises(InvalidParameterError):
        bfs_distances(generators.path(3), 3)


def test_connectivity_and_components():
    """测试连通性与连通分量"""
    g = build_graph(5, [(0, 1), (2, 3)])
    assert not is_connected(g)
    assert count_components(g) == 3
    assert is_connected(generators.petersen())
    assert is_connected(build_graph(1, []))


# ==================== 距离摘要测试 ====================

def test_distance_summary_path4():
    """测试 P4 的距离分布、离心率、半径与直径"""
    s = distance_summary(generators.path(4))
    assert s.dist_counts == {1: 3, 2: 2, 3: 1}
    assert s.ecc == (3, 2, 2, 3)
    assert s.radius == 2
    assert s.diameter == 3
    assert s.connected
    assert s.finite_pairs == 6


def test_distance_summary_petersen(petersen):
    """测试Petersen图：15对距离1，30对距离2"""
    s = distance_summary(petersen)
    assert s.dist_counts == {1: 15, 2: 30}
    assert s.radius == s.diameter == 2


def test_distance_summary_disconnected():
    """测试不连通图：半径直径为None，只统计有限距离对"""
    s = distance_summary(build_graph(4, [(0, 1), (1, 2)]))
    assert not s.connected
    assert s.radius is None and s.diameter is None
    assert s.ecc == (None, None, None, None)
    assert s.dist_counts == {1: 2, 2: 1}


def test_distance_summary_single_vertex():
    """测试单顶点图"""
    s = distance_summary(build_graph(1, []))
    assert s.connected
    assert s.dist_counts == {}
    assert s.radius == 0 and s.diameter == 0


@pytest.mark.parametrize("graph", [
    generators.path(7),
    generators.petersen(),
    generators.complete(5),
    build_graph(6, [(0, 1), (1, 2), (3, 4)]),
])
def test_engines_agree(graph):
    """测试编译扫描与纯Python扫描结果一致"""
    assert distance_summary(graph, engine="python") == distance_summary(graph, engine="numba")


def test_unknown_engine():
    """测试未知扫描引擎"""
    with pytest.raises(InvalidParameterError):
        distance_summary(generators.path(3), engine="gpu")


# ==================== 围长测试 ====================

@pytest.mark.parametrize("graph, expected", [
    (generators.cycle(5), 5),
    (generators.cycle(6), 6),
    (generators.petersen(), 5),
    (generators.complete(4), 3),
    (generators.path(6), None),
    (generators.star(5), None),
    (build_graph(5, [(0, 1), (1, 2), (2, 0), (3, 4)]), 3),
])
def test_girth(graph, expected):
    """测试围长（无圈为None）"""
    assert girth(graph) == expected


def test_girth_cycle_with_chord():
    """测试带弦的圈取最短圈"""
    g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    assert girth(g) == 4


# ==================== 穷举性质测试 ====================

@pytest.mark.parametrize("n", range(1, 7))
def test_bfs_distances_symmetric(n):
    """测试 n ≤ 6 的全部连通图上 dist(u→v) = dist(v→u)"""
    for g in generators.enumerate_connected_graphs(n):
        rows = [bfs_distances(g, source) for source in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                assert rows[u][v] == rows[v][u]
