"""
GraphVuln - 共享模块
包含所有模块共享的数据模型、常量、配置和工具函数
"""

__version__ = "1.0.0"
