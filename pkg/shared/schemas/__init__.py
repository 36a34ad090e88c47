"""共享数据模型"""

from .invariant_set import InvariantSet, StructuralFlags
from .bound_report import BoundReport, Measure, TheoremId, TndFormulaValue
from .verification_report import BenchmarkRow, CheckRecord, Counterexample, VerificationReport

__all__ = [
    "InvariantSet",
    "StructuralFlags",
    "BoundReport",
    "Measure",
    "TheoremId",
    "TndFormulaValue",
    "BenchmarkRow",
    "CheckRecord",
    "Counterexample",
    "VerificationReport",
]
