"""错误码规范"""

from typing import Optional


class ErrorCode:
    """统一错误码定义"""

    # 通用错误 (1000-1999)
    UNKNOWN_ERROR = "ERR_1000"
    INVALID_REQUEST = "ERR_1001"
    VALIDATION_ERROR = "ERR_1002"

    # 图输入错误 (2000-2999)
    SELF_LOOP = "ERR_2001"             # 自环
    VERTEX_OUT_OF_RANGE = "ERR_2002"   # 顶点编号越界
    PARSE_ERROR = "ERR_2003"           # 边表/graph6 解析失败

    # 参数与前置条件错误 (3000-3999)
    ALPHA_OUT_OF_RANGE = "ERR_3001"    # α 不在 (0,1) 内
    INVALID_PARAMETER = "ERR_3002"     # 图族参数无效
    DISCONNECTED_GRAPH = "ERR_3003"    # 定理要求连通图
    NO_EXACT_FORMULA = "ERR_3004"      # 基准测试中无精确公式

    # 验证套件错误 (4000-4999)
    UNKNOWN_FAMILY = "ERR_4001"
    UNKNOWN_CHECK = "ERR_4002"
    CORPUS_TOO_LARGE = "ERR_4003"
    VERIFICATION_FAILED = "ERR_4004"


# 错误消息映射
ERROR_MESSAGES = {
    ErrorCode.UNKNOWN_ERROR: "未知错误",
    ErrorCode.INVALID_REQUEST: "请求参数无效",
    ErrorCode.VALIDATION_ERROR: "数据验证失败",

    ErrorCode.SELF_LOOP: "不允许自环",
    ErrorCode.VERTEX_OUT_OF_RANGE: "顶点编号越界",
    ErrorCode.PARSE_ERROR: "图数据解析失败",

    ErrorCode.ALPHA_OUT_OF_RANGE: "α 必须位于开区间 (0,1)",
    ErrorCode.INVALID_PARAMETER: "参数无效",
    ErrorCode.DISCONNECTED_GRAPH: "该操作要求连通图",
    ErrorCode.NO_EXACT_FORMULA: "该图族/规模没有精确公式",

    ErrorCode.UNKNOWN_FAMILY: "未知的图族",
    ErrorCode.UNKNOWN_CHECK: "未知的检查项",
    ErrorCode.CORPUS_TOO_LARGE: "语料规模超出上限",
    ErrorCode.VERIFICATION_FAILED: "验证未通过",
}


def get_error_message(error_code: str) -> str:
    """获取错误消息"""
    return ERROR_MESSAGES.get(error_code, ERROR_MESSAGES[ErrorCode.UNKNOWN_ERROR])


# ==================== 异常类型 ====================

class GraphVulnError(ValueError):
    """所有领域异常的基类，携带错误码"""

    error_code: str = ErrorCode.UNKNOWN_ERROR

    def __init__(self, message: str, error_code: Optional[str] = None):
        super().__init__(message)
        if error_code is not None:
            self.error_code = error_code


class InvalidGraphError(GraphVulnError):
    """图构造输入非法（自环、顶点越界）"""

    error_code = ErrorCode.VALIDATION_ERROR


class InvalidParameterError(GraphVulnError):
    """数值参数非法"""

    error_code = ErrorCode.INVALID_PARAMETER


class GraphParseError(GraphVulnError):
    """边表或graph6解析失败"""

    error_code = ErrorCode.PARSE_ERROR

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(GraphVulnError):
    """定理前置条件不满足（例如不连通）"""

    error_code = ErrorCode.DISCONNECTED_GRAPH


class ConfigError(GraphVulnError):
    """语料配置或命令行配置错误"""

    error_code = ErrorCode.INVALID_REQUEST


# 进程退出码
class ExitCode:
    """命令行退出码"""

    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
    PRECONDITION_VIOLATION = 3


def exit_code_for(exc: BaseException) -> int:
    """将异常映射为退出码"""
    if isinstance(exc, PreconditionError):
        return ExitCode.PRECONDITION_VIOLATION
    if isinstance(exc, GraphVulnError):
        return ExitCode.USAGE_ERROR
    return ExitCode.VERIFICATION_FAILED
