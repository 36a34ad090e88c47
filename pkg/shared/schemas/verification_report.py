"""验证报告数据模型"""

from pydantic import BaseModel, Field
from typing import Dict, List, Optional

from ._types import Real


class Counterexample(BaseModel):
    """反例（graph6序列化，可重新读入复现）"""
    corpus_index: int
    label: str
    graph6: str
    detail: str


class CheckRecord(BaseModel):
    """单项检查的统计"""
    check_id: str
    graphs_tested: int = 0
    passes: int = 0
    failures: int = 0
    equality_hits: int = 0
    worst_slack: Optional[Real] = Field(None, description="最紧的余量，未测试时为空")
    equality_witnesses: List[str] = Field(default_factory=list, description="取等的命名图")
    counterexamples: List[Counterexample] = Field(default_factory=list)


class VerificationReport(BaseModel):
    """验证套件报告"""
    corpus_digest: str
    corpus_size: int
    alpha_grid: List[Real]
    tolerance: Real
    checks: List[CheckRecord]
    total_failures: int

    @property
    def passed(self) -> bool:
        """全部检查通过"""
        return self.total_failures == 0

    def by_id(self) -> Dict[str, CheckRecord]:
        """按检查项编号索引"""
        return {record.check_id: record for record in self.checks}


class BenchmarkRow(BaseModel):
    """快速路径基准测试的一行"""
    family: str
    n: int
    formula: str
    bfs_time: float
    formula_time: float
    bfs_value: Real
    formula_value: Real
    values_equal: bool
