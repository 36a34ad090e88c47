"""序列化用的字段类型"""

from typing import Annotated
from pydantic import PlainSerializer

from shared.utils import format_real

# JSON中以12位有效数字十进制字符串输出的实数，Python侧仍为float
Real = Annotated[float, PlainSerializer(format_real, return_type=str, when_used="json")]
