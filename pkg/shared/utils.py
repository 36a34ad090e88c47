"""共享工具函数"""

import hashlib
import math
from typing import Iterable, Optional
from .constants import Tolerance
from .error_codes import ErrorCode, InvalidParameterError


def format_real(value: float) -> str:
    """
    将实数格式化为12位有效数字的十进制字符串
    保证报告在不同运行之间逐字节一致
    """
    if value == 0:
        return "0"
    return format(value, f".{Tolerance.SIGNIFICANT_DIGITS}g")


def _margin(bound: float, rel_tol: float) -> float:
    return max(rel_tol * abs(bound), rel_tol * Tolerance.ABS_FLOOR)


def is_close(a: float, b: float, rel_tol: float = Tolerance.RELATIVE) -> bool:
    """
    相对容差比较

    绝对容差取 rel_tol × ABS_FLOOR，只在两侧都接近0时起作用；rel_tol = 0 时为精确比较
    """
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=rel_tol * Tolerance.ABS_FLOOR)


def within(value: float, lower: Optional[float], upper: Optional[float],
           rel_tol: float = Tolerance.RELATIVE) -> bool:
    """判断 value 是否落在 [lower, upper] 内（带相对容差）"""
    if lower is not None and value < lower - _margin(lower, rel_tol):
        return False
    if upper is not None and value > upper + _margin(upper, rel_tol):
        return False
    return True


def interval_slack(value: float, lower: Optional[float], upper: Optional[float]) -> float:
    """区间余量 min(value − lower, upper − value)，缺失的一侧视为无穷"""
    slack = math.inf
    if lower is not None:
        slack = min(slack, value - lower)
    if upper is not None:
        slack = min(slack, upper - value)
    return slack


def validate_alpha(alpha: float) -> float:
    """验证 α ∈ (0,1)"""
    if not (0.0 < alpha < 1.0):
        raise InvalidParameterError(
            f"alpha must lie in the open interval (0,1), got {alpha}",
            ErrorCode.ALPHA_OUT_OF_RANGE
        )
    return float(alpha)


def parse_alpha_list(text: str) -> list:
    """解析逗号分隔的α列表"""
    alphas = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            alphas.append(validate_alpha(float(token)))
        except ValueError as e:
            if isinstance(e, InvalidParameterError):
                raise
            raise InvalidParameterError(f"alpha: cannot parse '{token}'", ErrorCode.ALPHA_OUT_OF_RANGE)
    return alphas


def corpus_digest(encodings: Iterable[str]) -> str:
    """语料枚举的确定性摘要（按顺序对graph6串做SHA-256）"""
    digest = hashlib.sha256()
    for text in encodings:
        digest.update(text.encode("ascii"))
        digest.update(b"\n")
    return digest.hexdigest()
