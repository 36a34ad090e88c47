"""验证套件与基准测试"""

import time

import pytest

from algorithms import bounds, generators
from cli.formats import decode_graph6, encode_graph6
from harness import checks
from harness.benchmark import fastpath_benchmark
from harness.checks import CheckContext, Outcome, build_profile
from harness.corpus import CorpusConfig, iter_corpus, load_corpus_config
from harness.runner import resolve_checks, run_suite
from shared.constants import AlphaGrid, CheckId, CorpusFamily
from shared.error_codes import ConfigError, ErrorCode, InvalidParameterError


@pytest.fixture
def small_config():
    """小规模语料：覆盖全部来源，几秒内完成"""
    return load_corpus_config(
        exhaustive_max_n=4,
        trees_max_n=5,
        paths_max_n=12,
        tnd_max_D=3,
        tnd_max_leaves=4,
        random_count=5,
    )


@pytest.fixture
def ctx():
    return CheckContext(alpha_grid=list(AlphaGrid.DEFAULT))


# ==================== 语料测试 ====================

def test_default_config_file():
    """测试默认YAML配置"""
    config = load_corpus_config()
    assert config.families == CorpusFamily.ALL
    assert config.exhaustive_max_n == 6
    assert config.trees_max_n == 8
    assert config.random.count == 100
    assert config.random.seed == 42


def test_config_unknown_family():
    """测试未知语料来源"""
    with pytest.raises(ConfigError) as exc:
        load_corpus_config(families=["bogus"])
    assert exc.value.error_code == ErrorCode.UNKNOWN_FAMILY


def test_config_cap():
    """测试穷举上限"""
    with pytest.raises(ConfigError) as exc:
        load_corpus_config(exhaustive_max_n=7)
    assert exc.value.error_code == ErrorCode.CORPUS_TOO_LARGE


def test_corpus_order_and_indices(small_config):
    """测试语料按固定来源顺序、下标连续"""
    items = list(iter_corpus(small_config))
    assert [item.index for item in items] == list(range(len(items)))
    order = [item.family for item in items]
    firsts = [order.index(f) for f in CorpusFamily.ALL]
    assert firsts == sorted(firsts)
    assert items[0].label == "pentagon"


def test_corpus_is_deterministic(small_config):
    """测试两次枚举完全一致"""
    first = [encode_graph6(item.graph) for item in iter_corpus(small_config)]
    second = [encode_graph6(item.graph) for item in iter_corpus(small_config)]
    assert first == second


# ==================== 检查项测试 ====================

def test_d2_identity_on_petersen(ctx, petersen):
    """测试 d(G,2) = 0.5·M1 − m"""
    outcome = checks.check_d2_identity(build_profile(petersen), ctx)
    assert outcome.passed


def test_d2_identity_not_applicable_with_triangle(ctx):
    """测试含三角形时不适用"""
    assert checks.check_d2_identity(build_profile(generators.complete(3)), ctx) is None


def test_m1_radius_equality_witnesses(ctx, petersen, pentagon, c6):
    """测试 M1 = n(n+1−r)：90, 20, 24"""
    for g in (petersen, pentagon, c6):
        outcome = checks.check_m1_radius(build_profile(g), ctx)
        assert outcome.passed and outcome.equality


def test_polarity_both_directions(ctx, two_branch_t10):
    """测试 W_P 与 M2−M1+m：树取等，C6 严格"""
    assert checks.check_polarity(build_profile(two_branch_t10), ctx).equality
    outcome = checks.check_polarity(build_profile(generators.cycle(6)), ctx)
    assert outcome.passed and not outcome.equality
    assert checks.check_polarity(build_profile(generators.cycle(7)), ctx).equality


def test_moore_check_equality(ctx, petersen):
    """测试半径上界在Petersen图上取等"""
    outcome = checks.check_moore(build_profile(petersen), ctx)
    assert outcome.passed and outcome.equality
    assert outcome.slack == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("graph, equality", [
    (generators.path(8), True),
    (generators.complete(5), True),
    (generators.cycle(5), False),
    (generators.star(6), False),
])
def test_global_check_attainment(ctx, graph, equality):
    """测试全局界检查：路径取下界、完全图取上界"""
    outcome = checks.check_global(build_profile(graph), ctx)
    assert outcome.passed
    assert outcome.equality == equality


def test_global_check_flags_missed_lower_bound(ctx, monkeypatch):
    """测试路径未取到下界时判为失败"""
    original = bounds.global_interval

    def shifted(n, alpha):
        interval = original(n, alpha)
        return interval._replace(lower=interval.lower * 0.5)

    monkeypatch.setattr(bounds, "global_interval", shifted)
    outcome = checks.check_global(build_profile(generators.path(6)), ctx)
    assert not outcome.passed
    assert "path misses the lower bound" in outcome.detail


def test_tnd_check_recognizes_unlabelled_tree(ctx):
    """测试未标注的半径2树也做公式检查"""
    g = generators.tree_from_pruefer([0, 0, 1, 1])
    outcome = checks.check_tnd_formulas(build_profile(g), ctx)
    assert outcome is not None and outcome.passed


def test_edge_monotonicity(ctx):
    """测试加边不降低GC"""
    outcome = checks.check_edge_monotonicity(build_profile(generators.path(5)), ctx)
    assert outcome.passed and outcome.slack > 0


def test_resolve_checks():
    """测试检查项过滤与排序"""
    assert resolve_checks(None) == CheckId.ALL
    assert resolve_checks(["rm2_identity", "thm2_6"]) == ["thm2_6", "rm2_identity"]
    with pytest.raises(ConfigError) as exc:
        resolve_checks(["thm9_9"])
    assert exc.value.error_code == ErrorCode.UNKNOWN_CHECK


# ==================== 套件测试 ====================

def test_run_suite_small_corpus(small_config):
    """测试小语料上全部检查通过"""
    report = run_suite(small_config, workers=1)
    assert report.passed
    assert report.total_failures == 0
    records = report.by_id()
    assert set(records) == set(CheckId.ALL)
    for record in report.checks:
        assert record.graphs_tested == record.passes + record.failures
        assert record.counterexamples == []
        if record.worst_slack is not None:
            assert record.worst_slack >= 0
    assert records[CheckId.COR3_4].equality_witnesses == ["pentagon", "petersen", "C6"]
    assert records[CheckId.PATH_CLOSED_FORM].graphs_tested >= 11
    assert records[CheckId.COR3_10].graphs_tested > 0


def test_run_suite_exact_checks_with_zero_tolerance(small_config):
    """测试整数恒等式在零容差下仍全部通过"""
    report = run_suite(small_config, tolerance=0.0,
                       checks=[CheckId.THM2_6, CheckId.THM2_8, CheckId.RM2_IDENTITY], workers=1)
    assert report.passed
    assert [r.check_id for r in report.checks] == [CheckId.THM2_6, CheckId.THM2_8, CheckId.RM2_IDENTITY]


def test_run_suite_is_deterministic(small_config):
    """测试两次运行报告逐字节一致"""
    first = run_suite(small_config, workers=1).model_dump_json()
    second = run_suite(small_config, workers=1).model_dump_json()
    assert first == second


def test_run_suite_workers_match_serial(small_config):
    """测试进程池结果与串行一致"""
    serial = run_suite(small_config, checks=[CheckId.THM3_2, CheckId.THM2_7], workers=1)
    parallel = run_suite(small_config, checks=[CheckId.THM3_2, CheckId.THM2_7], workers=2)
    assert serial.model_dump_json() == parallel.model_dump_json()


def test_counterexamples_capped_and_reproducible(small_config, monkeypatch):
    """测试反例按下标排序、上限10，且graph6可复现"""
    def fails_on_four_vertices(profile, ctx):
        if profile.graph.n == 4:
            return Outcome(False, detail="n == 4")
        return Outcome(True)

    monkeypatch.setitem(checks.CHECKS, CheckId.RM2_IDENTITY, fails_on_four_vertices)
    report = run_suite(small_config, checks=[CheckId.RM2_IDENTITY], workers=1)
    record = report.by_id()[CheckId.RM2_IDENTITY]
    assert not report.passed
    assert record.failures > 10
    assert len(record.counterexamples) == 10
    indices = [c.corpus_index for c in record.counterexamples]
    assert indices == sorted(indices)
    for c in record.counterexamples:
        assert decode_graph6(c.graph6).n == 4


@pytest.mark.slow
def test_acceptance_run():
    """测试默认配置的完整验收运行"""
    report = run_suite(CorpusConfig(), workers=2)
    assert report.passed
    assert report.by_id()[CheckId.COR3_4].equality_witnesses[:3] == ["pentagon", "petersen", "C6"]


@pytest.mark.slow
def test_tree_suite_single_process():
    """测试 n ≤ 8 全部标号树单进程运行在120秒内"""
    config = load_corpus_config(families=[CorpusFamily.TREES], trees_max_n=8)
    start = time.perf_counter()
    report = run_suite(config, workers=1)
    elapsed = time.perf_counter() - start
    assert report.passed
    assert report.corpus_size == sum(n ** (n - 2) for n in range(2, 9)) + 1
    assert elapsed < 120


# ==================== 基准测试 ====================

@pytest.mark.parametrize("family, sizes", [
    ("bistar", [10, 120]),
    ("tnd", [5, 60]),
    ("star", [2, 80]),
    ("path", [2, 5]),
])
def test_fastpath_values_equal(family, sizes):
    """测试公式值与BFS值一致"""
    rows = fastpath_benchmark(family, sizes)
    assert [row.n for row in rows] == sizes
    assert all(row.values_equal for row in rows)


def test_fastpath_long_path_has_no_formula():
    """测试 P50 没有精确公式"""
    with pytest.raises(InvalidParameterError) as exc:
        fastpath_benchmark("path", [50])
    assert exc.value.error_code == ErrorCode.NO_EXACT_FORMULA


def test_fastpath_unknown_family():
    """测试未知图族"""
    with pytest.raises(ConfigError):
        fastpath_benchmark("petersen", [10])


@pytest.mark.slow
def test_fastpath_bistar_at_scale():
    """测试万顶点双星的公式值与BFS一致"""
    rows = fastpath_benchmark("bistar", [10000])
    assert rows[0].values_equal
