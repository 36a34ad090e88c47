"""
验证套件编排器
枚举语料 -> 逐图预计算 -> 执行检查 -> 顺序无关的归并 -> VerificationReport
"""

import logging
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from shared.config import settings
from shared.constants import CheckId, CorpusFamily, HarnessConfig
from shared.error_codes import ConfigError, ErrorCode
from shared.schemas import CheckRecord, Counterexample, VerificationReport
from shared.utils import corpus_digest, validate_alpha
from harness.checks import CHECKS, CheckContext, build_profile
from harness.corpus import CorpusConfig, CorpusItem, iter_corpus
from cli.formats import encode_graph6

logger = logging.getLogger(__name__)


@dataclass
class _Tally:
    """单个检查项的累加器（可交换合并）"""
    tested: int = 0
    passes: int = 0
    failures: int = 0
    equality_hits: int = 0
    worst_slack: Optional[float] = None
    witnesses: List[tuple] = field(default_factory=list)
    counterexamples: List[tuple] = field(default_factory=list)

    def merge(self, other: "_Tally") -> None:
        self.tested += other.tested
        self.passes += other.passes
        self.failures += other.failures
        self.equality_hits += other.equality_hits
        if other.worst_slack is not None:
            self.worst_slack = other.worst_slack if self.worst_slack is None \
                else min(self.worst_slack, other.worst_slack)
        self.witnesses = sorted(self.witnesses + other.witnesses)[:HarnessConfig.MAX_WITNESSES]
        self.counterexamples = sorted(self.counterexamples + other.counterexamples)[:HarnessConfig.MAX_COUNTEREXAMPLES]


def resolve_checks(check_ids: Optional[Iterable[str]]) -> List[str]:
    """
    校验并按固定顺序排列检查项

    Raises:
        ConfigError: 未知检查项
    """
    if not check_ids:
        return list(CheckId.ALL)
    requested = list(check_ids)
    unknown = [c for c in requested if c not in CHECKS]
    if unknown:
        raise ConfigError(f"checks: unknown check ids {unknown}, expected from {CheckId.ALL}", ErrorCode.UNKNOWN_CHECK)
    return [c for c in CheckId.ALL if c in requested]


def evaluate_batch(
    items: Sequence[CorpusItem],
    check_ids: Sequence[str],
    ctx: CheckContext,
) -> Dict[str, _Tally]:
    """对一批语料执行检查（进程池的工作单元）"""
    tallies = {c: _Tally() for c in check_ids}
    for item in items:
        profile = build_profile(item.graph, item.label, item.family, ctx.alpha_grid, item.tnd)
        for check_id in check_ids:
            outcome = CHECKS[check_id](profile, ctx)
            if outcome is None:
                continue
            tally = tallies[check_id]
            tally.tested += 1
            if outcome.passed:
                tally.passes += 1
                if outcome.slack is not None:
                    tally.worst_slack = outcome.slack if tally.worst_slack is None \
                        else min(tally.worst_slack, outcome.slack)
                if outcome.equality:
                    tally.equality_hits += 1
                    if item.family == CorpusFamily.NAMED and len(tally.witnesses) < HarnessConfig.MAX_WITNESSES:
                        tally.witnesses.append((item.index, item.label))
            else:
                tally.failures += 1
                logger.debug(f"Check {check_id} failed on #{item.index} {item.label}: {outcome.detail}")
                if len(tally.counterexamples) < HarnessConfig.MAX_COUNTEREXAMPLES:
                    tally.counterexamples.append(
                        (item.index, item.label, encode_graph6(item.graph), outcome.detail)
                    )
    return tallies


def _batches(items: Iterator[CorpusItem], size: int) -> Iterator[List[CorpusItem]]:
    while True:
        batch = list(islice(items, size))
        if not batch:
            return
        yield batch


def _merge_into(totals: Dict[str, _Tally], partial: Dict[str, _Tally]) -> None:
    for check_id, tally in partial.items():
        totals[check_id].merge(tally)


def _record(check_id: str, tally: _Tally) -> CheckRecord:
    return CheckRecord(
        check_id=check_id,
        graphs_tested=tally.tested,
        passes=tally.passes,
        failures=tally.failures,
        equality_hits=tally.equality_hits,
        worst_slack=tally.worst_slack,
        equality_witnesses=[label for _, label in tally.witnesses],
        counterexamples=[
            Counterexample(corpus_index=index, label=label, graph6=g6, detail=detail)
            for index, label, g6, detail in tally.counterexamples
        ],
    )


def run_suite(
    corpus_config: Optional[CorpusConfig] = None,
    alpha_grid: Optional[Sequence[float]] = None,
    tolerance: Optional[float] = None,
    checks: Optional[Iterable[str]] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    """
    执行验证套件

    Args:
        corpus_config: 语料配置，默认使用内置配置
        alpha_grid: α网格，默认取语料配置中的网格
        tolerance: 浮点比较的相对容差，默认取语料配置
        checks: 需要运行的检查项，默认全部
        workers: 进程数，1 表示在当前进程执行

    Returns:
        VerificationReport（与 workers 无关，逐字节确定）
    """
    config = corpus_config or CorpusConfig()
    alphas = [validate_alpha(a) for a in (alpha_grid if alpha_grid is not None else config.alpha_grid)]
    tol = config.tolerance if tolerance is None else tolerance
    if tol < 0:
        raise ConfigError(f"tolerance: must be non-negative, got {tol}", ErrorCode.INVALID_PARAMETER)
    check_ids = resolve_checks(checks)
    workers = workers or settings.WORKERS

    ctx = CheckContext(alpha_grid=alphas, tolerance=tol, monotonicity_max_n=config.monotonicity_max_n)
    start_time = time.time()
    logger.info(f"Verification started: families={config.families}, checks={len(check_ids)}, workers={workers}")

    encodings: List[str] = []
    totals = {c: _Tally() for c in check_ids}

    def corpus() -> Iterator[CorpusItem]:
        for item in iter_corpus(config):
            encodings.append(encode_graph6(item.graph))
            yield item

    batches = _batches(corpus(), HarnessConfig.BATCH_SIZE)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pending: deque = deque()
            for batch in batches:
                pending.append(pool.submit(evaluate_batch, batch, check_ids, ctx))
                # 限制在途批次，避免整份语料驻留内存
                if len(pending) >= 2 * workers:
                    _merge_into(totals, pending.popleft().result())
            while pending:
                _merge_into(totals, pending.popleft().result())
    else:
        for batch in batches:
            _merge_into(totals, evaluate_batch(batch, check_ids, ctx))

    records = [_record(c, totals[c]) for c in check_ids]
    report = VerificationReport(
        corpus_digest=corpus_digest(encodings),
        corpus_size=len(encodings),
        alpha_grid=alphas,
        tolerance=tol,
        checks=records,
        total_failures=sum(r.failures for r in records),
    )

    for r in records:
        logger.info(
            f"Check {r.check_id}: tested={r.graphs_tested}, failures={r.failures}, equality_hits={r.equality_hits}"
        )
    logger.info(
        f"Verification complete: {report.corpus_size} graphs, "
        f"{report.total_failures} failures, {time.time() - start_time:.2f}s"
    )
    return report
