"""
命令行入口
generate / compute / bounds / verify / bench
"""

import argparse
import logging
import sys
from typing import List, Optional

from pythonjsonlogger import jsonlogger

from shared.config import settings
from shared.constants import BenchFamily, GraphFamily
from shared.error_codes import ExitCode, GraphVulnError, exit_code_for, get_error_message
from cli import commands, formats

logger = logging.getLogger(__name__)


def configure_logging(level: Optional[str] = None, json_logs: bool = False) -> None:
    """配置根日志器（输出到stderr，stdout只写结果）"""
    handler = logging.StreamHandler(sys.stderr)
    if json_logs:
        handler.setFormatter(jsonlogger.JsonFormatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
    else:
        handler.setFormatter(logging.Formatter(settings.LOG_FORMAT))
    logging.basicConfig(level=(level or settings.LOG_LEVEL).upper(), handlers=[handler], force=True)


def _family_options(parser: argparse.ArgumentParser, positional: bool) -> None:
    if positional:
        parser.add_argument("family", choices=GraphFamily.ALL, help="图族")
    else:
        parser.add_argument("--family", default=None, choices=GraphFamily.ALL, help="内联生成的图族（代替输入文件）")
    parser.add_argument("--n", type=int, default=None, help="顶点数")
    parser.add_argument("--r", default=None, help="T(n,D) 的 r_1,…,r_D（逗号分隔）")
    parser.add_argument("--D", type=int, default=None, help="双星的分支数")
    parser.add_argument("--extra-edges", type=int, default=0, help="随机图的额外边数")
    parser.add_argument("--seed", type=int, default=42, help="随机种子")


def build_parser() -> argparse.ArgumentParser:
    """构造参数解析器"""
    parser = argparse.ArgumentParser(
        prog="graphvuln",
        description=f"{settings.PROJECT_NAME} - closeness/generalized closeness 与 Zagreb 指数的界",
    )
    parser.add_argument("--log-level", default=None, help="日志级别（默认取 GRAPHVULN_LOG_LEVEL）")
    parser.add_argument("--log-json", action="store_true", help="以JSON格式输出日志")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="生成图族成员")
    _family_options(p, positional=True)
    p.add_argument("--format", choices=formats.FORMATS, default=formats.GRAPH6)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=commands.cmd_generate)

    for name, handler, help_text in (
        ("compute", commands.cmd_compute, "计算不变量"),
        ("bounds", commands.cmd_bounds, "计算界报告"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default=None, help="输入文件，'-' 为标准输入")
        p.add_argument("--format", choices=formats.FORMATS, default=None, help="输入格式（默认自动判断）")
        _family_options(p, positional=False)
        p.add_argument("--alpha", default=None, help="α列表，逗号分隔")
        p.add_argument("--out", default=None)
        p.set_defaults(handler=handler)

    p = sub.add_parser("verify", help="运行验证套件")
    p.add_argument("--config", default=None, help="语料配置YAML")
    p.add_argument("--families", default=None, help="语料来源，逗号分隔")
    p.add_argument("--max-n", type=int, default=None, help="穷举连通图的最大顶点数")
    p.add_argument("--trees-max-n", type=int, default=None, help="标号树的最大顶点数")
    p.add_argument("--paths-max-n", type=int, default=None, help="路径检查的最大顶点数")
    p.add_argument("--seed", type=int, default=None, help="随机语料种子")
    p.add_argument("--random-count", type=int, default=None, help="随机图数量")
    p.add_argument("--alpha", default=None, help="α网格，逗号分隔")
    p.add_argument("--tolerance", type=float, default=None, help="相对容差")
    p.add_argument("--checks", default=None, help="只运行指定检查项，逗号分隔")
    p.add_argument("--workers", type=int, default=None, help="进程数（默认取 GRAPHVULN_WORKERS）")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=commands.cmd_verify)

    p = sub.add_parser("bench", help="快速路径基准测试")
    p.add_argument("--family", required=True, choices=BenchFamily.ALL)
    p.add_argument("--sizes", required=True, help="顶点数列表，逗号分隔")
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--tolerance", type=float, default=settings.TOLERANCE)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=commands.cmd_bench)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    执行命令并返回退出码

    0 成功；1 验证失败或未预期错误；2 用法/解析/参数/配置错误；3 前置条件不满足
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.USAGE_ERROR if e.code else ExitCode.SUCCESS

    configure_logging(args.log_level, args.log_json)
    try:
        return args.handler(args)
    except GraphVulnError as e:
        logger.error(f"[{e.error_code}] {get_error_message(e.error_code)}: {e}")
        return exit_code_for(e)
    except Exception as e:
        logger.error(f"Unexpected error: {str(e)}", exc_info=True)
        return ExitCode.VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
