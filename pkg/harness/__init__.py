"""验证套件：语料、检查项、编排与基准测试"""

from .corpus import CorpusConfig, load_corpus_config
from .runner import run_suite
from .benchmark import fastpath_benchmark

__all__ = [
    "CorpusConfig",
    "load_corpus_config",
    "run_suite",
    "fastpath_benchmark",
]
