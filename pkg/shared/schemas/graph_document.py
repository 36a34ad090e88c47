"""图文档数据模型"""

from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional

from algorithms.graph_core import Graph


class GraphDocument(BaseModel):
    """带来源与格式信息的图"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    source: str = Field(..., description="文件路径或内联图族描述")
    format: str = Field(..., description="edgelist / graph6")
    graph: Graph
    label: str = Field(..., description="显示名称")
    vertex_labels: Optional[List[str]] = Field(None, description="边表中的原始顶点标签（按下标）")
