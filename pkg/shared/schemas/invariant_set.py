"""不变量集合数据模型"""

from pydantic import BaseModel, Field
from typing import Dict, Optional

from ._types import Real


class StructuralFlags(BaseModel):
    """结构谓词"""
    is_tree: bool = Field(..., description="连通且 m = n−1")
    triangle_free: bool = Field(..., description="无3圈")
    quadrangle_free: bool = Field(..., description="无4圈")
    girth_ge_7: bool = Field(..., description="围长 ≥ 7 或无圈")
    is_moore_diam2: bool = Field(..., description="k正则、直径2、围长5、n = k²+1")
    is_cycle6: bool = Field(default=False, description="同构于 C6")

    @property
    def triangle_quadrangle_free(self) -> bool:
        """无三角形且无四边形"""
        return self.triangle_free and self.quadrangle_free


class InvariantSet(BaseModel):
    """图的全部不变量"""
    n: int = Field(..., ge=0, description="顶点数")
    m: int = Field(..., ge=0, description="边数")
    connected: bool = Field(..., description="是否连通")
    convention: Optional[str] = Field(None, description="不连通时的取值约定")
    closeness: Real = Field(..., ge=0.0, description="closeness C(G)")
    gc_alpha: Dict[str, Real] = Field(default_factory=dict, description="各α下的广义closeness")
    m1: int = Field(..., ge=0, description="第一Zagreb指数")
    m2: int = Field(..., ge=0, description="第二Zagreb指数")
    rm2: int = Field(..., ge=0, description="约化第二Zagreb指数")
    wiener_polarity: int = Field(..., ge=0, description="距离为3的顶点对数")
    girth: Optional[int] = Field(None, description="围长，无圈为null")
    radius: Optional[int] = Field(None, description="半径，不连通为null")
    diameter: Optional[int] = Field(None, description="直径，不连通为null")
    distance_distribution: Dict[str, int] = Field(default_factory=dict, description="d(G,k)")
    flags: StructuralFlags

    class Config:
        json_schema_extra = {
            "example": {
                "n": 3,
                "m": 3,
                "connected": True,
                "convention": None,
                "closeness": "3",
                "gc_alpha": {"0.5": "3"},
                "m1": 12,
                "m2": 12,
                "rm2": 3,
                "wiener_polarity": 0,
                "girth": 3,
                "radius": 1,
                "diameter": 1,
                "distance_distribution": {"1": 3},
                "flags": {
                    "is_tree": False,
                    "triangle_free": False,
                    "quadrangle_free": True,
                    "girth_ge_7": False,
                    "is_moore_diam2": False,
                    "is_cycle6": False
                }
            }
        }
