"""配置文件"""
import os
from pathlib import Path
from dotenv import load_dotenv

# 加载项目根目录的.env文件（可选）
env_path = Path(__file__).parent.parent / ".env"
load_dotenv(dotenv_path=env_path)


class Settings:
    """应用配置"""

    # 项目信息
    PROJECT_NAME: str = os.getenv("PROJECT_NAME", "GraphVuln")

    # 日志配置
    LOG_LEVEL: str = os.getenv("GRAPHVULN_LOG_LEVEL", "INFO")
    LOG_FORMAT: str = os.getenv(
        "GRAPHVULN_LOG_FORMAT",
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    # 验证套件
    # 未设置或为0时使用全部CPU
    WORKERS: int = int(os.getenv("GRAPHVULN_WORKERS", "0")) or (os.cpu_count() or 1)
    TOLERANCE: float = float(os.getenv("GRAPHVULN_TOLERANCE", "1e-9"))
    CORPUS_CONFIG: Path = Path(
        os.getenv("GRAPHVULN_CORPUS_CONFIG", str(Path(__file__).parent.parent / "harness" / "config.yaml"))
    )

    # 顶点数达到该值时使用编译后的BFS扫描
    NUMBA_MIN_N: int = int(os.getenv("GRAPHVULN_NUMBA_MIN_N", "200"))


settings = Settings()
