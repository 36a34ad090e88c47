"""
验证语料
CorpusConfig（YAML + 命令行覆盖）以及确定性的语料流
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from shared.config import settings
from shared.constants import AlphaGrid, CorpusFamily, HarnessConfig, Tolerance
from shared.error_codes import ConfigError, ErrorCode
from shared.utils import validate_alpha
from algorithms.graph_core import Graph
from algorithms import generators
from algorithms.generators import RawStream, TndSpec

logger = logging.getLogger(__name__)


class RandomCorpusConfig(BaseModel):
    """随机连通图参数"""
    count: int = Field(100, ge=0)
    seed: int = Field(42, ge=0)
    min_n: int = Field(4, ge=1)
    max_n: int = Field(16, ge=1)
    max_extra_edges: int = Field(12, ge=0)

    @model_validator(mode="after")
    def check_range(self):
        if self.min_n > self.max_n:
            raise ValueError(f"random.min_n ({self.min_n}) exceeds random.max_n ({self.max_n})")
        return self


class CorpusConfig(BaseModel):
    """语料配置"""
    families: List[str] = Field(default_factory=lambda: list(CorpusFamily.ALL))
    exhaustive_max_n: int = Field(HarnessConfig.EXHAUSTIVE_MAX_N, ge=1)
    trees_max_n: int = Field(8, ge=1)
    paths_max_n: int = Field(64, ge=2)
    tnd_max_D: int = Field(6, ge=2)
    tnd_max_leaves: int = Field(12, ge=0)
    random: RandomCorpusConfig = Field(default_factory=RandomCorpusConfig)
    monotonicity_max_n: int = Field(6, ge=1)
    alpha_grid: List[float] = Field(default_factory=lambda: list(AlphaGrid.DEFAULT))
    tolerance: float = Field(Tolerance.RELATIVE, ge=0)

    @field_validator("families")
    @classmethod
    def check_families(cls, v: List[str]) -> List[str]:
        unknown = [f for f in v if f not in CorpusFamily.ALL]
        if unknown:
            raise ValueError(f"unknown corpus families {unknown}, expected a subset of {CorpusFamily.ALL}")
        # 固定枚举顺序
        return [f for f in CorpusFamily.ALL if f in v]

    @field_validator("alpha_grid")
    @classmethod
    def check_alphas(cls, v: List[float]) -> List[float]:
        return [validate_alpha(a) for a in v]

    @field_validator("exhaustive_max_n")
    @classmethod
    def check_exhaustive_cap(cls, v: int) -> int:
        if v > HarnessConfig.EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive_max_n is capped at {HarnessConfig.EXHAUSTIVE_MAX_N}, got {v}")
        return v

    @field_validator("trees_max_n")
    @classmethod
    def check_trees_cap(cls, v: int) -> int:
        if v > HarnessConfig.TREES_MAX_N:
            raise ValueError(f"trees_max_n is capped at {HarnessConfig.TREES_MAX_N}, got {v}")
        return v


def load_corpus_config(path: Optional[Union[str, Path]] = None, **overrides: Any) -> CorpusConfig:
    """
    读取YAML语料配置并应用覆盖项

    Args:
        path: 配置文件路径，默认 settings.CORPUS_CONFIG；文件不存在时使用内置默认值
        overrides: 覆盖字段（值为 None 的项忽略；random 子字段用 random_seed 等形式）

    Raises:
        ConfigError: YAML无法解析或字段不合法
    """
    path = Path(path) if path is not None else settings.CORPUS_CONFIG
    data: Dict[str, Any] = {}
    if path.exists():
        try:
            data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"cannot parse corpus config {path}: {e}", ErrorCode.INVALID_PARAMETER)
        logger.debug(f"Corpus config loaded from {path}")
    elif path != settings.CORPUS_CONFIG:
        raise ConfigError(f"corpus config {path} does not exist", ErrorCode.INVALID_PARAMETER)

    random_section = dict(data.get("random") or {})
    for key, value in overrides.items():
        if value is None:
            continue
        if key.startswith("random_"):
            random_section[key[len("random_"):]] = value
        else:
            data[key] = value
    data["random"] = random_section

    try:
        return CorpusConfig(**data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        if "capped" in first["msg"]:
            code = ErrorCode.CORPUS_TOO_LARGE
        elif location == "families":
            code = ErrorCode.UNKNOWN_FAMILY
        else:
            code = ErrorCode.INVALID_PARAMETER
        raise ConfigError(f"{location}: {first['msg']}", code)


@dataclass
class CorpusItem:
    """语料中的一个图"""
    index: int
    family: str
    label: str
    graph: Graph
    tnd: Optional[TndSpec] = None


def _tnd_label(spec: TndSpec) -> str:
    return "T(" + ",".join(str(x) for x in spec.r) + ")"


def named_graphs() -> List[tuple]:
    """命名图：(标签, 图, TndSpec或None)"""
    bistar_spec = TndSpec(D=4, r=[5, 0, 0, 0])
    two_branch_spec = TndSpec(D=4, r=[4, 1, 0, 0])
    return [
        ("pentagon", generators.pentagon(), None),
        ("petersen", generators.petersen(), None),
        ("C6", generators.cycle(6), None),
        ("C7", generators.cycle(7), None),
        ("C8", generators.cycle(8), None),
        ("K3", generators.complete(3), None),
        ("K4", generators.complete(4), None),
        ("K5", generators.complete(5), None),
        ("S5", generators.star(5), None),
        ("P10", generators.path(10), None),
        (_tnd_label(bistar_spec), generators.t_tree(bistar_spec), bistar_spec),
        (_tnd_label(two_branch_spec), generators.t_tree(two_branch_spec), two_branch_spec),
    ]


def _random_items(config: RandomCorpusConfig) -> Iterator[tuple]:
    for i in range(config.count):
        seed = config.seed + i
        stream = RawStream(seed)
        n = config.min_n + stream.below(config.max_n - config.min_n + 1)
        capacity = n * (n - 1) // 2 - (n - 1)
        extra = stream.below(min(capacity, config.max_extra_edges) + 1)
        yield f"random n={n} extra={extra} seed={seed}", generators.random_connected_graph(n, extra, seed)


def iter_corpus(config: CorpusConfig) -> Iterator[CorpusItem]:
    """
    按固定顺序枚举语料：named, paths, tnd, exhaustive, trees, random

    同一配置两次枚举得到完全相同的序列
    """
    index = 0

    def item(family: str, label: str, graph: Graph, tnd: Optional[TndSpec] = None) -> CorpusItem:
        nonlocal index
        result = CorpusItem(index=index, family=family, label=label, graph=graph, tnd=tnd)
        index += 1
        return result

    for family in config.families:
        if family == CorpusFamily.NAMED:
            for label, graph, spec in named_graphs():
                yield item(family, label, graph, spec)
        elif family == CorpusFamily.PATHS:
            for n in range(2, config.paths_max_n + 1):
                yield item(family, f"P{n}", generators.path(n))
        elif family == CorpusFamily.TND:
            for spec in generators.tnd_sweep(config.tnd_max_D, config.tnd_max_leaves):
                yield item(family, _tnd_label(spec), generators.t_tree(spec), spec)
        elif family == CorpusFamily.EXHAUSTIVE:
            for n in range(1, config.exhaustive_max_n + 1):
                for k, graph in enumerate(generators.enumerate_connected_graphs(n)):
                    yield item(family, f"connected n={n} #{k}", graph)
        elif family == CorpusFamily.TREES:
            for n in range(1, config.trees_max_n + 1):
                for k, graph in enumerate(generators.enumerate_trees(n)):
                    yield item(family, f"tree n={n} #{k}", graph)
        elif family == CorpusFamily.RANDOM:
            for label, graph in _random_items(config.random):
                yield item(family, label, graph)
        logger.debug(f"Corpus family '{family}' enumerated, running total {index}")
