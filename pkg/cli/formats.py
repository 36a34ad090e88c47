"""
图数据格式
边表（任意顶点标签）与graph6（短格式 n ≤ 62，长格式 n ≤ 258047）的读写
"""

import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from shared.error_codes import ErrorCode, GraphParseError, InvalidParameterError
from shared.schemas.graph_document import GraphDocument
from algorithms.graph_core import Graph, build_graph

logger = logging.getLogger(__name__)

EDGELIST = "edgelist"
GRAPH6 = "graph6"
FORMATS = [EDGELIST, GRAPH6]

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_SHORT_MAX_N = 62
GRAPH6_LONG_MAX_N = 258047

_GRAPH6_SUFFIXES = {".g6", ".graph6"}


# ==================== graph6 ====================

def _size_prefix(n: int) -> List[int]:
    if n <= GRAPH6_SHORT_MAX_N:
        return [n + 63]
    if n <= GRAPH6_LONG_MAX_N:
        return [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    raise InvalidParameterError(f"n: graph6 supports at most {GRAPH6_LONG_MAX_N} vertices, got {n}")


def encode_graph6(g: Graph) -> str:
    """
    编码为graph6（不带头部）

    上三角按列展开：(0,1),(0,2),(1,2),(0,3)…，每6位一组加63
    """
    out = _size_prefix(g.n)
    value = 0
    width = 0
    for j in range(1, g.n):
        for i in range(j):
            value = value << 1 | (1 if g.has_edge(i, j) else 0)
            width += 1
            if width == 6:
                out.append(value + 63)
                value = 0
                width = 0
    if width:
        out.append((value << (6 - width)) + 63)
    return bytes(out).decode("ascii")


def decode_graph6(text: str) -> Graph:
    """
    解码graph6（可带 >>graph6<< 头部）

    Raises:
        GraphParseError: 字符越界、长度不符或使用了不支持的8字节长格式
    """
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphParseError("empty graph6 string")
    codes = [ord(c) - 63 for c in data]
    if any(not (0 <= c <= 63) for c in codes):
        raise GraphParseError("graph6 characters must lie in the range '?'..'~'")

    if codes[0] == 63:
        if len(codes) < 2 or codes[1] == 63:
            raise GraphParseError(f"graph6 sizes above {GRAPH6_LONG_MAX_N} vertices are not supported")
        if len(codes) < 4:
            raise GraphParseError("truncated graph6 size field")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]

    bits = n * (n - 1) // 2
    expected = (bits + 5) // 6
    if len(body) != expected:
        raise GraphParseError(f"graph6 body for n={n} needs {expected} characters, got {len(body)}")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


# ==================== 边表 ====================

def parse_edgelist(text: str) -> Tuple[Graph, List[str]]:
    """
    解析边表

    每行 "u v"，顶点标签为任意记号，按首次出现映射为 0.. 下标；
    空行与 # 注释忽略，其余格式报带行号的错误

    Returns:
        (图, 按下标排列的顶点标签)
    """
    index: Dict[str, int] = {}
    labels: List[str] = []
    edges: List[Tuple[int, int]] = []

    def vertex(token: str) -> int:
        if token not in index:
            index[token] = len(labels)
            labels.append(token)
        return index[token]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got '{raw.strip()}'", line=lineno)
        u, v = tokens
        if u == v:
            raise GraphParseError(f"self-loop at vertex '{u}' is not allowed", line=lineno)
        edges.append((vertex(u), vertex(v)))

    return build_graph(len(labels), edges), labels


def format_edgelist(g: Graph, labels: Optional[List[str]] = None) -> str:
    """写出边表（每行一条边，使用原始标签）"""
    names = labels or [str(i) for i in range(g.n)]
    lines = [f"{names[u]} {names[v]}" for u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


# ==================== GraphDocument ====================

def detect_format(source: str, text: str) -> str:
    """按文件后缀判断格式，否则按内容判断：只有一行且无空白时视为graph6（边表每行两个标签）"""
    if Path(source).suffix.lower() in _GRAPH6_SUFFIXES:
        return GRAPH6
    lines = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if len(lines) == 1 and len(lines[0].split()) == 1:
        return GRAPH6
    return EDGELIST


def parse_document(text: str, fmt: str, source: str = "-", label: Optional[str] = None) -> GraphDocument:
    """将文本解析为GraphDocument"""
    if fmt == GRAPH6:
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise GraphParseError(f"expected exactly one graph6 line, got {len(lines)}")
        graph, vertex_labels = decode_graph6(lines[0]), None
    elif fmt == EDGELIST:
        graph, vertex_labels = parse_edgelist(text)
    else:
        raise GraphParseError(f"unknown input format '{fmt}', expected one of {FORMATS}")
    return GraphDocument(
        source=source,
        format=fmt,
        graph=graph,
        label=label or (Path(source).stem if source != "-" else "stdin"),
        vertex_labels=vertex_labels,
    )


def load_document(source: str, fmt: Optional[str] = None) -> GraphDocument:
    """
    读取文件（"-" 为标准输入）

    Raises:
        GraphParseError: 文件无法读取或内容非法
    """
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphParseError(f"cannot read '{source}': {e.strerror}")
    fmt = fmt or detect_format(source, text)
    logger.debug(f"Loading graph from {source} as {fmt}")
    return parse_document(text, fmt, source)


def serialize_document(doc: GraphDocument, fmt: str) -> str:
    """按指定格式序列化"""
    if fmt == GRAPH6:
        return encode_graph6(doc.graph) + "\n"
    if fmt == EDGELIST:
        return format_edgelist(doc.graph, doc.vertex_labels)
    raise InvalidParameterError(f"format: expected one of {FORMATS}, got '{fmt}'", ErrorCode.INVALID_PARAMETER)
