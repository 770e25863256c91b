# hankelzeta - Hurwitz zeta、Lerch 超越函数与 Hankel 围道积分

__version__ = '0.2.0'

import logging
from typing import Any, Dict, Iterable, List, Optional, Tuple

from hankelzeta.check_suites import CheckContext, CheckReport, available_identities, run_checks
from hankelzeta.config import apply_overrides, load_config
from hankelzeta.domain import EvalResult
from hankelzeta.errors import (
    BudgetExhaustedError, ConsistencyError, ConvergenceError, DomainError, HankelZetaError,
    OrderTooLargeError, PoleError, PoleProximityError, SlowConvergenceError, UnknownIdentifierError,
)
from hankelzeta.hankel_oracle import ContourSpec
from hankelzeta.series_eval import SeriesConfig
from hankelzeta.special_core import EulerMaclaurinParams
from hankelzeta.statistics import PerformanceMonitor
from hankelzeta.targets import as_result, available_oracles, available_targets, lookup_oracle, lookup_target

logger = logging.getLogger(__name__)


class HankelZeta:
    """主类：按配置构造各模块参数，统一提供求值、预言机比对与恒等式校验"""

    def __init__(self, config: Optional[Dict[str, Any]] = None, config_path: Optional[str] = None):
        """
        初始化

        Args:
            config: 已加载的配置字典（优先）
            config_path: 配置文件路径，config 为 None 时使用
        """
        self.config = config if config is not None else load_config(config_path)

        self.contour_spec = ContourSpec(**self.config['contour'])
        self.series_config = SeriesConfig(**self.config['series'])
        self.em_params = EulerMaclaurinParams(**self.config['euler_maclaurin'])
        self.lerch_budget = int(self.config['lerch']['term_budget'])
        self.slow_threshold = float(self.config['lerch']['slow_threshold'])
        self.quad_tol = float(self.config['quadrature']['tol'])
        self.workers = max(1, int(self.config['workers']))

        self.performance_monitor = PerformanceMonitor()
        logger.debug("HankelZeta 初始化: %s", self.contour_spec)

    @classmethod
    def from_overrides(cls, config_path: Optional[str] = None, **overrides) -> 'HankelZeta':
        """
        加载配置并应用 "section.key" 覆盖项

        Args:
            config_path: 配置文件路径
            overrides: 例如 {"contour.epsilon": 0.5}（值为 None 的项忽略）
        """
        config = apply_overrides(load_config(config_path), overrides)
        return cls(config)

    def evaluate(self, target: str, **params) -> EvalResult:
        """
        按名称求值

        Args:
            target: 目标名称，如 hurwitz_zeta、S、log_gamma_moment
            params: 目标需要的参数

        Returns:
            result: EvalResult
        """
        entry = lookup_target(target)
        bound = entry.bind(params)
        start = self.performance_monitor.start_timer(target)
        try:
            return as_result(entry.func(self, **bound))
        finally:
            self.performance_monitor.end_timer(target, start)

    def oracle(self, name: str, **params) -> Tuple[EvalResult, EvalResult]:
        """
        计算围道表示及其对应的级数 / Euler-Maclaurin 结果

        Args:
            name: 预言机名称，如 zeta_neg、phi_one、log_G
            params: 表示所需参数

        Returns:
            (contour, reference): 两条路径的 EvalResult
        """
        entry = lookup_oracle(name)
        bound = entry.bind(params)
        start = self.performance_monitor.start_timer(f"oracle:{name}")
        try:
            contour = entry.contour(self.contour_spec, **bound)
            reference = as_result(entry.reference(self, **bound))
        finally:
            self.performance_monitor.end_timer(f"oracle:{name}", start)
        return contour, reference

    def check_context(self) -> CheckContext:
        return CheckContext(contour_spec=self.contour_spec, series_config=self.series_config,
                            em_params=self.em_params, quad_tol=self.quad_tol)

    def check(self, identities: Iterable[str] = ("all",), workers: Optional[int] = None) -> List[CheckReport]:
        """
        运行恒等式校验

        Args:
            identities: 恒等式编号，all 表示全部
            workers: 线程数，默认取配置

        Returns:
            reports: CheckReport 列表
        """
        return run_checks(identities, self.check_context(), workers or self.workers,
                          self.performance_monitor)

    def get_stats(self) -> Dict[str, Any]:
        return self.performance_monitor.get_stats()


__all__ = [
    '__version__', 'HankelZeta', 'CheckReport', 'EvalResult',
    'BudgetExhaustedError', 'ConsistencyError', 'ConvergenceError', 'DomainError', 'HankelZetaError',
    'OrderTooLargeError', 'PoleError', 'PoleProximityError', 'SlowConvergenceError',
    'UnknownIdentifierError', 'available_identities', 'available_oracles', 'available_targets',
]
