"""图族生成模块测试"""

from itertools import combinations, product

import pytest

from algorithms import generators
from algorithms.generators import TndSpec
from algorithms.graph_core import build_graph, distance_summary, girth, is_connected
from algorithms.invariants import structural_flags, zagreb_m1
from shared.error_codes import InvalidParameterError


# ==================== 标准图族 ====================

def test_path_edges_and_diameter():
    """测试 path(4)"""
    g = generators.path(4)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert distance_summary(g).diameter == 3


def test_cycle_and_complete():
    """测试 cycle(6) 与 complete(5)"""
    c6 = generators.cycle(6)
    assert c6.degrees() == [2] * 6
    assert girth(c6) == 6
    k5 = generators.complete(5)
    assert k5.m == 10
    assert distance_summary(k5).diameter == 1


@pytest.mark.parametrize("builder, n", [
    (generators.cycle, 2),
    (generators.path, 0),
    (generators.star, 0),
    (generators.complete, 0),
])
def test_family_minimum(builder, n):
    """测试低于图族最小顶点数时报错"""
    with pytest.raises(InvalidParameterError) as exc:
        builder(n)
    assert str(exc.value).startswith("n:")


def test_petersen_structure(petersen):
    """测试Petersen图：n=10, m=15, 3正则, 围长5, 直径2"""
    assert (petersen.n, petersen.m) == (10, 15)
    assert petersen.degrees() == [3] * 10
    assert girth(petersen) == 5
    assert distance_summary(petersen).diameter == 2
    assert structural_flags(petersen).is_moore_diam2


def test_pentagon_is_moore(pentagon):
    """测试五边形为 k=2 的Moore图"""
    assert pentagon.n == 2 * 2 + 1
    assert structural_flags(pentagon).is_moore_diam2


# ==================== T(n,D) ====================

def test_t_tree_bistar(bistar_t10):
    """测试 T(5,0,0,0)：直径3，M1=60"""
    assert bistar_t10.n == 10 and bistar_t10.m == 9
    assert distance_summary(bistar_t10).diameter == 3
    assert zagreb_m1(bistar_t10) == 60


def test_t_tree_two_branches(two_branch_t10):
    """测试 T(4,1,0,0)：直径4，M1=52"""
    assert distance_summary(two_branch_t10).diameter == 4
    assert zagreb_m1(two_branch_t10) == 52


def test_t_tree_degenerate_star():
    """测试 T(0,0) 即 P3"""
    g = generators.t_tree(TndSpec(D=2, r=[0, 0]))
    assert list(g.edges()) == [(0, 1), (0, 2)]


def test_tnd_spec_canonicalizes_unordered():
    """测试乱序 r 被排序并标记"""
    spec = TndSpec(D=3, r=[0, 2, 1])
    assert spec.r == [2, 1, 0]
    assert spec.canonicalized
    assert spec.n == 7


@pytest.mark.parametrize("D, r", [(1, [3]), (3, [1, 0]), (2, [1, -1])])
def test_tnd_spec_rejects_invalid(D, r):
    """测试非法 TndSpec"""
    with pytest.raises(InvalidParameterError):
        TndSpec(D=D, r=r)


def test_t_tree_degree_audit_and_diameter():
    """测试度数审计 M1 = D² + Σ(1+r_i)² + Σr_i 与直径"""
    for spec in generators.tnd_sweep(5, 6):
        g = generators.t_tree(spec)
        expected_m1 = spec.D ** 2 + sum((1 + x) ** 2 for x in spec.r) + sum(spec.r)
        assert zagreb_m1(g) == expected_m1
        assert g.degree(0) == spec.D
        expected_d = {0: 2, 1: 3}.get(spec.branches, 4)
        assert distance_summary(g).diameter == expected_d


def test_bistar():
    """测试双星 T(n−D−1, 0, …, 0)"""
    g = generators.bistar(10, 4)
    assert g.n == 10
    assert zagreb_m1(g) == 60


def test_tnd_sweep_counts():
    """测试扫描枚举的 r 均非增且不重复"""
    specs = list(generators.tnd_sweep(3, 3))
    keys = [(s.D, tuple(s.r)) for s in specs]
    assert len(keys) == len(set(keys))
    assert all(s.r == sorted(s.r, reverse=True) for s in specs)
    # D=2: 0,1,2(2),3(2) -> 6；D=3: 1+1+2+3 -> 7
    assert len(specs) == 13


# ==================== Prüfer ====================

def _pruefer_encode(g):
    """测试用编码（反复删除最小叶子）"""
    neighbors = [set(a) for a in g.adj]
    seq = []
    for _ in range(g.n - 2):
        leaf = min(v for v in range(g.n) if len(neighbors[v]) == 1)
        parent = next(iter(neighbors[leaf]))
        seq.append(parent)
        neighbors[parent].discard(leaf)
        neighbors[leaf].clear()
    return seq


def test_pruefer_examples():
    """测试已知序列"""
    assert list(generators.tree_from_pruefer([]).edges()) == [(0, 1)]
    assert list(generators.tree_from_pruefer([0, 0]).edges()) == [(0, 1), (0, 2), (0, 3)]
    assert list(generators.tree_from_pruefer([1, 2]).edges()) == [(0, 1), (1, 2), (2, 3)]


def test_pruefer_out_of_range():
    """测试序列元素越界"""
    with pytest.raises(InvalidParameterError):
        generators.tree_from_pruefer([0, 4])


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_pruefer_bijection(n):
    """测试 decode∘encode 为恒等"""
    for seq in product(range(n), repeat=n - 2):
        assert _pruefer_encode(generators.tree_from_pruefer(list(seq))) == list(seq)


def test_enumerate_trees_count():
    """测试标号树数目 n^(n−2)"""
    for n in range(2, 7):
        trees = list(generators.enumerate_trees(n))
        assert len(trees) == n ** (n - 2)
        assert all(t.m == n - 1 and is_connected(t) for t in trees)


# ==================== 穷举连通图 ====================

def _brute_force_connected(n):
    pairs = list(combinations(range(n), 2))
    total = 0
    for mask in range(1 << len(pairs)):
        g = build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        total += is_connected(g)
    return total


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 4), (4, 38)])
def test_enumerate_connected_counts(n, expected):
    """测试连通标号图数目"""
    assert sum(1 for _ in generators.enumerate_connected_graphs(n)) == expected


def test_enumerate_connected_matches_brute_force():
    """测试 n=5 与独立暴力计数一致"""
    assert sum(1 for _ in generators.enumerate_connected_graphs(5)) == _brute_force_connected(5) == 728


def test_enumerate_connected_cap():
    """测试超出硬上限"""
    with pytest.raises(InvalidParameterError):
        next(generators.enumerate_connected_graphs(7))


# ==================== 随机连通图 ====================

def test_random_tree():
    """测试 extra_edges=0 得到树"""
    g = generators.random_connected_graph(5, 0, 42)
    assert g.m == 4 and is_connected(g)


def test_random_graph_edge_count():
    """测试边数由参数决定"""
    g = generators.random_connected_graph(8, 3, 7)
    assert g.m == 10 and is_connected(g)


def test_random_graph_deterministic():
    """测试同种子输出一致"""
    a = generators.random_connected_graph(12, 9, 2024)
    b = generators.random_connected_graph(12, 9, 2024)
    assert list(a.edges()) == list(b.edges())


def test_random_graph_infeasible():
    """测试额外边数不可行"""
    with pytest.raises(InvalidParameterError):
        generators.random_connected_graph(4, 4, 1)
