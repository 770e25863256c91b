"""hankelzeta 测试的公共夹具"""

import pytest

from hankelzeta import HankelZeta
from hankelzeta.hankel_oracle import ContourSpec


@pytest.fixture(scope="session")
def spec():
    """默认围道参数"""
    return ContourSpec()


@pytest.fixture(scope="session")
def engine():
    """按随包默认配置构造的主类实例"""
    return HankelZeta()


@pytest.fixture
def config_file(tmp_path):
    """写入临时 JSON5 配置文件，返回路径"""
    def write(text):
        path = tmp_path / "hankelzeta_test.json"
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
