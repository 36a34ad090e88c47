"""测试公共配置与夹具"""

import sys
from pathlib import Path

import pytest
from hypothesis import settings

# 添加项目根目录到Python路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from algorithms import generators  # noqa: E402
from algorithms.generators import TndSpec  # noqa: E402


# 首次调用会触发numba编译，不设单例时限
settings.register_profile("graphvuln", deadline=None)
settings.load_profile("graphvuln")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 完整验收规模的慢速测试")


@pytest.fixture
def petersen():
    """Petersen图"""
    return generators.petersen()


@pytest.fixture
def pentagon():
    """五边形"""
    return generators.pentagon()


@pytest.fixture
def c6():
    """六圈"""
    return generators.cycle(6)


@pytest.fixture
def bistar_t10():
    """双星 T(5,0,0,0) ∈ T(10,4)"""
    return generators.t_tree(TndSpec(D=4, r=[5, 0, 0, 0]))


@pytest.fixture
def two_branch_t10():
    """T(4,1,0,0) ∈ T(10,4)"""
    return generators.t_tree(TndSpec(D=4, r=[4, 1, 0, 0]))
