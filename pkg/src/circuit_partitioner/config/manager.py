"""
基础配置管理系统

提供配置文件加载、环境变量处理和配置验证功能
"""

import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..core.interfaces import ConfigManagerInterface


class ConfigManager(ConfigManagerInterface):
    """配置管理器实现"""

    # 默认配置
    DEFAULT_CONFIG = {
        'partition': {
            'default_method': 'gtqcp',
            'default_k': 4,
        },
        'scan': {
            'max_groups': 1_000_000,
        },
        'oracle': {
            'max_gates': 12,
            'time_budget': 30.0,
        },
        'bench': {
            'repetitions': 5,
            'parallel_workers': 1,
            'suite': 'standard',
        },
        'output': {
            'json_indent': 2,
            'emit_block_qasm': False,
        },
        'logging': {
            'level': 'INFO',
            'file': None,
        },
    }

    METHOD_NAMES = ('gtqcp', 'quick', 'scan')

    def __init__(self, config_path: Optional[str] = None):
        """初始化配置管理器

        Args:
            config_path: 配置文件路径，如果为None则搜索默认路径
        """
        self.logger = logging.getLogger(__name__)
        self._config = copy.deepcopy(self.DEFAULT_CONFIG)
        self._config_path = config_path

        # 尝试加载配置文件
        if config_path and Path(config_path).exists():
            self.load_config(config_path)
        else:
            self._try_load_default_config()

        # 应用环境变量覆盖
        self._apply_env_overrides()

    def get(self, key: str, default=None) -> Any:
        """获取配置值

        支持点号分隔的嵌套键，如 'scan.max_groups'
        """
        value = self._config
        try:
            for k in key.split('.'):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any):
        """设置配置值

        支持点号分隔的嵌套键
        """
        keys = key.split('.')
        config = self._config

        # 导航到父级字典
        for k in keys[:-1]:
            if k not in config or not isinstance(config[k], dict):
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def load_config(self, config_path: Optional[str] = None):
        """加载配置文件"""
        if config_path is None:
            config_path = self._config_path

        if not config_path or not Path(config_path).exists():
            return

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                user_config = yaml.safe_load(f)
            if isinstance(user_config, dict):
                self._merge_config(self._config, user_config)
        except (OSError, yaml.YAMLError) as e:
            self.logger.warning(f"无法加载配置文件 {config_path}: {e}")

    def validate_config(self) -> bool:
        """验证配置的有效性，第一个无效的键以警告形式记录"""
        checks = (
            ('partition.default_method', lambda v: v in self.METHOD_NAMES),
            ('partition.default_k', lambda v: int(v) >= 1),
            ('scan.max_groups', lambda v: int(v) >= 1),
            ('oracle.max_gates', lambda v: int(v) >= 0),
            ('oracle.time_budget', lambda v: float(v) > 0),
            ('bench.repetitions', lambda v: int(v) >= 1),
            ('bench.parallel_workers', lambda v: int(v) >= 1),
        )
        for key, check in checks:
            value = self.get(key)
            try:
                valid = check(value)
            except (TypeError, ValueError):
                valid = False
            if not valid:
                self.logger.warning(f"配置项 {key} 的值无效: {value!r}")
                return False
        return True

    def _try_load_default_config(self):
        """尝试加载默认位置的配置文件"""
        default_paths = [
            'partitioner.yaml',
            'partitioner.yml',
            os.path.expanduser('~/.circuit_partitioner/config.yaml'),
            '/etc/circuit_partitioner/config.yaml',
        ]

        for path in default_paths:
            if Path(path).exists():
                self.load_config(path)
                self._config_path = path
                break

    def _apply_env_overrides(self):
        """应用环境变量覆盖"""
        env_mappings = {
            'PARTITION_DEFAULT_K': ('partition.default_k', int),
            'PARTITION_DEFAULT_METHOD': ('partition.default_method', str),
            'PARTITION_SCAN_MAX_GROUPS': ('scan.max_groups', int),
            'PARTITION_ORACLE_MAX_GATES': ('oracle.max_gates', int),
            'PARTITION_ORACLE_TIME_BUDGET': ('oracle.time_budget', float),
            'PARTITION_BENCH_REPETITIONS': ('bench.repetitions', int),
            'PARTITION_LOG_LEVEL': ('logging.level', str),
        }

        for env_key, (config_key, converter) in env_mappings.items():
            env_value = os.getenv(env_key)
            if env_value is None:
                continue
            try:
                self.set(config_key, converter(env_value))
            except ValueError:
                self.logger.warning(f"环境变量 {env_key} 的值无效: {env_value}")

    def _merge_config(self, base: Dict, update: Dict):
        """递归合并配置字典"""
        for key, value in update.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    @property
    def config_path(self) -> Optional[str]:
        return self._config_path

    @property
    def config(self) -> Dict:
        """获取完整配置字典（只读副本）"""
        return copy.deepcopy(self._config)
