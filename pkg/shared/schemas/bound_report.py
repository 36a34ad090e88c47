"""界报告数据模型"""

from enum import Enum
from pydantic import BaseModel, Field
from typing import Optional

from ._types import Real


class TheoremId(str, Enum):
    """界/公式编号"""
    T3_1 = "T3_1"                  # 全局界（路径/完全图取等）
    T3_2 = "T3_2"                  # 直径界
    T3_3 = "T3_3"                  # 无三角无四边形界
    C3_4 = "C3_4"                  # 半径上界
    T3_5 = "T3_5"                  # 树或围长≥7 的界
    C3_10_CASE1 = "C3_10_case1"    # T(n,D) 单分支公式
    C3_10_CASE2 = "C3_10_case2"    # T(n,D) 双分支公式


class Measure(str, Enum):
    """被约束的度量"""
    CLOSENESS = "closeness"
    GENERALIZED_CLOSENESS = "generalized_closeness"


class BoundReport(BaseModel):
    """单个定理的区间报告"""
    theorem_id: TheoremId
    measure: Measure
    alpha: Optional[Real] = Field(None, description="GC的α；closeness形式为空")
    lower: Optional[Real] = Field(None, description="下界")
    upper: Optional[Real] = Field(None, description="上界")
    applicable: bool = Field(..., description="前置条件是否成立")
    equality_expected: bool = Field(..., description="充分取等条件是否成立")
    truth: Optional[Real] = Field(None, description="BFS计算的真值")
    lower_attained: Optional[bool] = Field(None, description="真值是否取到下界")
    upper_attained: Optional[bool] = Field(None, description="真值是否取到上界")
    equality_observed: Optional[bool] = Field(None, description="真值是否取到任一侧的界")


class TndFormulaValue(BaseModel):
    """T(n,D) 闭式公式取值"""
    gc: Real
    closeness: Real
    alpha: Real
