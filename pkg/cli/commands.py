"""
命令实现
每个 cmd_* 接收解析后的参数，写出结果并返回退出码
"""

import json
import logging
import sys
from argparse import Namespace
from pathlib import Path
from typing import Any, List, Optional

from shared.constants import GraphFamily
from shared.error_codes import ConfigError, ErrorCode, ExitCode, InvalidParameterError
from shared.schemas import BoundReport, InvariantSet
from shared.schemas.graph_document import GraphDocument
from shared.utils import parse_alpha_list
from algorithms import generators
from algorithms.bounds import graph_bound_reports
from algorithms.generators import TndSpec
from algorithms.invariants import compute_invariants
from harness.benchmark import fastpath_benchmark
from harness.corpus import load_corpus_config
from harness.runner import run_suite
from cli import formats

logger = logging.getLogger(__name__)


# ==================== 输入输出 ====================

def _parse_int_list(text: str, name: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise InvalidParameterError(f"{name}: expected comma-separated integers, got '{text}'")


def _require_param(value: Optional[Any], name: str, family: str) -> Any:
    if value is None:
        raise InvalidParameterError(f"{name}: required for family '{family}'")
    return value


def generate_document(args: Namespace) -> GraphDocument:
    """
    按图族参数生成图

    Raises:
        ConfigError: 未知图族
        InvalidParameterError: 参数缺失或非法（消息以参数名开头）
    """
    family = args.family
    if family not in GraphFamily.ALL:
        raise ConfigError(f"family: unknown family '{family}', expected one of {GraphFamily.ALL}",
                          ErrorCode.UNKNOWN_FAMILY)

    if family == GraphFamily.PETERSEN:
        graph, label = generators.petersen(), "petersen"
    elif family == GraphFamily.PENTAGON:
        graph, label = generators.pentagon(), "pentagon"
    elif family == GraphFamily.TND:
        r = _parse_int_list(_require_param(args.r, "r", family), "r")
        spec = TndSpec(D=len(r), r=r)
        graph, label = generators.t_tree(spec), "T(" + ",".join(str(x) for x in spec.r) + ")"
    elif family == GraphFamily.BISTAR:
        n = _require_param(args.n, "n", family)
        D = _require_param(args.D, "D", family)
        graph, label = generators.bistar(n, D), f"bistar n={n} D={D}"
    elif family == GraphFamily.RANDOM:
        n = _require_param(args.n, "n", family)
        graph = generators.random_connected_graph(n, args.extra_edges, args.seed)
        label = f"random n={n} extra={args.extra_edges} seed={args.seed}"
    else:
        n = _require_param(args.n, "n", family)
        builder = {
            GraphFamily.PATH: generators.path,
            GraphFamily.CYCLE: generators.cycle,
            GraphFamily.COMPLETE: generators.complete,
            GraphFamily.STAR: generators.star,
        }[family]
        graph, label = builder(n), f"{family} n={n}"

    return GraphDocument(source=f"family:{family}", format=formats.GRAPH6, graph=graph, label=label)


def input_document(args: Namespace) -> GraphDocument:
    """位置参数给出文件（"-" 为标准输入），或用 --family 内联生成"""
    if getattr(args, "family", None):
        if args.input is not None:
            raise ConfigError("input: give either an input file or --family, not both")
        return generate_document(args)
    if args.input is None:
        raise ConfigError("input: an input file (or '-') or --family is required")
    return formats.load_document(args.input, args.format)


def write_output(text: str, out: Optional[str]) -> None:
    """写到 --out 文件或标准输出"""
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Output written to {out}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _alphas(args: Namespace) -> List[float]:
    return parse_alpha_list(args.alpha) if args.alpha else []


# ==================== 命令 ====================

def cmd_generate(args: Namespace) -> int:
    """生成图族成员并按 --format 写出"""
    doc = generate_document(args)
    fmt = args.format or formats.GRAPH6
    logger.info(f"Generated {doc.label}: n={doc.graph.n}, m={doc.graph.m}")
    write_output(formats.serialize_document(doc, fmt), args.out)
    return ExitCode.SUCCESS


def invariant_payload(doc: GraphDocument, alphas: List[float]) -> dict:
    """InvariantSet 的JSON对象（附带标签映射）"""
    invariants: InvariantSet = compute_invariants(doc.graph, alphas)
    payload = {"label": doc.label}
    if doc.vertex_labels is not None:
        payload["vertex_labels"] = doc.vertex_labels
    payload.update(invariants.model_dump(mode="json"))
    return payload


def cmd_compute(args: Namespace) -> int:
    """计算全部不变量"""
    doc = input_document(args)
    write_output(_dump(invariant_payload(doc, _alphas(args))), args.out)
    return ExitCode.SUCCESS


def cmd_bounds(args: Namespace) -> int:
    """全部定理的界报告（附BFS真值）；不连通输入退出码3"""
    doc = input_document(args)
    reports: List[BoundReport] = graph_bound_reports(doc.graph, _alphas(args))
    payload = {"label": doc.label, "reports": [r.model_dump(mode="json") for r in reports]}
    write_output(_dump(payload), args.out)
    return ExitCode.SUCCESS


def cmd_verify(args: Namespace) -> int:
    """运行验证套件，全部通过时退出码0"""
    families = [f.strip() for f in args.families.split(",")] if args.families else None
    config = load_corpus_config(
        args.config,
        families=families,
        exhaustive_max_n=args.max_n,
        trees_max_n=args.trees_max_n,
        paths_max_n=args.paths_max_n,
        random_seed=args.seed,
        random_count=args.random_count,
    )
    checks = [c.strip() for c in args.checks.split(",")] if args.checks else None
    alphas = _alphas(args) or None
    report = run_suite(config, alphas, args.tolerance, checks, args.workers)
    write_output(report.model_dump_json(indent=2) + "\n", args.out)
    if not report.passed:
        logger.error(f"Verification failed: {report.total_failures} failures")
        return ExitCode.VERIFICATION_FAILED
    return ExitCode.SUCCESS


def cmd_bench(args: Namespace) -> int:
    """快速路径基准测试；任一规模取值不一致时退出码1"""
    sizes = _parse_int_list(args.sizes, "sizes")
    if not sizes:
        raise InvalidParameterError("sizes: at least one size is required")
    rows = fastpath_benchmark(args.family, sizes, args.repetitions, args.tolerance)
    write_output(_dump([row.model_dump(mode="json") for row in rows]), args.out)
    if not all(row.values_equal for row in rows):
        return ExitCode.VERIFICATION_FAILED
    return ExitCode.SUCCESS
