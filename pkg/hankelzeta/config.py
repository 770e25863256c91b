# hankelzeta - 配置加载
# 默认配置随包发布，用户文件按键深度合并覆盖

import copy
import logging
import os
from typing import Any, Dict, Optional

import json5

from hankelzeta.errors import DomainError

logger = logging.getLogger(__name__)

# 默认配置路径
DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'hankelzeta_config.json')

# 指定配置文件的环境变量
CONFIG_ENV_VAR = 'HANKELZETA_CONFIG'


def _read_json5(path: str) -> Dict[str, Any]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json5.load(f)
    except OSError as e:
        raise DomainError(f"无法读取配置文件 {path}: {e}")
    except ValueError as e:
        raise DomainError(f"配置文件 {path} 格式错误: {e}")
    if not isinstance(data, dict):
        raise DomainError(f"配置文件 {path} 的顶层必须是对象")
    return data


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if key not in base:
            logger.warning("忽略未知配置项: %s%s", prefix, key)
            continue
        if isinstance(base[key], dict):
            if not isinstance(value, dict):
                raise DomainError(f"配置项 {prefix}{key} 必须是对象")
            merged[key] = _deep_merge(base[key], value, prefix=f"{prefix}{key}.")
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    加载配置

    优先级：显式路径 > 环境变量 HANKELZETA_CONFIG > 随包默认配置。

    Args:
        path: 配置文件路径

    Returns:
        config: 合并后的配置字典
    """
    config = _read_json5(DEFAULT_CONFIG_PATH)
    user_path = path or os.environ.get(CONFIG_ENV_VAR)
    if user_path:
        logger.debug("加载用户配置: %s", user_path)
        config = _deep_merge(config, _read_json5(user_path))
    return config


def apply_overrides(config: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    """
    以 "section.key" 形式的覆盖项更新配置（值为 None 的项跳过）

    Args:
        config: 基础配置
        overrides: 覆盖项，例如 {"contour.epsilon": 0.5, "workers": 2}

    Returns:
        config: 新的配置字典
    """
    nested: Dict[str, Any] = {}
    for dotted, value in overrides.items():
        if value is None:
            continue
        node = nested
        parts = dotted.split('.')
        for part in parts[:-1]:
            node = node.setdefault(part, {})
        node[parts[-1]] = value
    return _deep_merge(config, nested)
