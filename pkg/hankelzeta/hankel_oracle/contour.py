# hankel_oracle - 沿 Hankel 围道 L = L₋ ∪ L_ε ∪ L₊ 的数值积分
#
# (1/2πi)∮_L f(z) dz = (1/2πi)[∫_ε^∞ (f₋(x) − f₊(x)) dx + ∫_{−π}^{π} f(εe^{iθ}) iεe^{iθ} dθ]
# 其中 f∓(x) 取 z = −x、Log z = ln x ∓ iπ。

import logging
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from hankelzeta.domain import EvalResult, Method, as_order
from hankelzeta.errors import ConvergenceError, DomainError, PoleProximityError
from hankelzeta.hankel_oracle.integrands import HankelIntegrand, IntegrandKind

logger = logging.getLogger(__name__)

# 极点离圆周不足该距离时缩小半径
POLE_MARGIN = 0.5

# 靠近 x = ε 的二进加密层数
GRADING_LEVELS = 4


@dataclass(frozen=True)
class ContourSpec:
    """
    围道参数

    Attributes:
        epsilon: 圆周半径 ε，0 < ε < 2π
        ray_cutoff: 射线截断半径 R；None 时取 max(40, 40/衰减率) 并按 tail_tol 延长
        n_circle: 圆周节点数（偶数）
        n_ray: 射线上每个 Gauss 面板的节点数
        panel_width: 射线面板宽度
        tail_tol: 截断处被积函数的容许幅值
        rel_tol: 节点加倍比较的相对容差
        max_cutoff: R 的上限
        pole_tol: 节点处 |1 − λe^z| 的下限
        max_doublings: 节点加倍的最大次数
    """
    epsilon: float = 1.0
    ray_cutoff: Optional[float] = None
    n_circle: int = 64
    n_ray: int = 16
    panel_width: float = 1.0
    tail_tol: float = 1e-16
    rel_tol: float = 1e-10
    max_cutoff: float = 4000.0
    pole_tol: float = 1e-6
    max_doublings: int = 3

    def __post_init__(self):
        if not 0.0 < self.epsilon < 2.0 * math.pi:
            raise DomainError(f"epsilon 需满足 0 < ε < 2π，实际为 {self.epsilon}")
        if self.ray_cutoff is not None and not self.ray_cutoff > self.epsilon:
            raise DomainError(f"ray_cutoff={self.ray_cutoff} 必须大于 epsilon={self.epsilon}")
        n_circle = as_order(self.n_circle, "n_circle", minimum=8)
        if n_circle % 2:
            raise DomainError(f"n_circle 必须是偶数，实际为 {n_circle}")
        as_order(self.n_ray, "n_ray", minimum=2)
        as_order(self.max_doublings, "max_doublings", minimum=1)
        for name in ("panel_width", "tail_tol", "rel_tol", "max_cutoff", "pole_tol"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"{name} 必须为正数，实际为 {getattr(self, name)}")


@dataclass(frozen=True)
class ContourPieces:
    """
    围道积分的分解（未除以 2πi）

    Attributes:
        ray: 两条射线贡献之和 ∫(f₋ − f₊)dx
        circle: 圆周贡献
        epsilon: 实际使用的半径
        cutoff: 实际使用的截断半径
    """
    ray: complex
    circle: complex
    epsilon: float
    cutoff: float

    @property
    def total(self) -> complex:
        return (self.ray + self.circle) / (2j * math.pi)


@lru_cache(maxsize=None)
def _gauss_legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _panel_nodes(breaks: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = _gauss_legendre(n)
    lo = breaks[:-1, None]
    half = 0.5 * (breaks[1:, None] - lo)
    x = lo + half * (nodes[None, :] + 1.0)
    w = half * weights[None, :]
    return x.ravel(), w.ravel()


def _check_poles(integrand: HankelIntegrand, z: np.ndarray, spec: ContourSpec):
    denominator = integrand.denominator(z)
    if denominator is None:
        return
    closest = float(np.min(np.abs(denominator)))
    if closest < spec.pole_tol:
        raise PoleProximityError(f"围道节点处 |1 − λe^z| = {closest:.3e} 小于 {spec.pole_tol:.1e}")


def _circle(integrand: HankelIntegrand, epsilon: float, n: int, spec: ContourSpec) -> complex:
    if integrand.single_valued:
        # 周期被积函数：梯形公式
        theta = -math.pi + 2.0 * math.pi * np.arange(n) / n
        weights = np.full(n, 2.0 * math.pi / n)
    else:
        panels = max(2, n // spec.n_ray)
        breaks = np.linspace(-math.pi, math.pi, panels + 1)
        theta, weights = _panel_nodes(breaks, spec.n_ray)
    z = epsilon * np.exp(1j * theta)
    log_z = math.log(epsilon) + 1j * theta
    _check_poles(integrand, z, spec)
    values = integrand.evaluate(z, log_z) * 1j * z
    return complex(np.sum(weights * values))


def _ray_breaks(epsilon: float, cutoff: float, width: float) -> np.ndarray:
    graded = [epsilon + width * 2.0 ** -k for k in range(GRADING_LEVELS, 0, -1)]
    uniform = epsilon + width * np.arange(1, math.ceil((cutoff - epsilon) / width) + 1)
    return np.concatenate(([epsilon], graded, uniform))


def _ray_difference(integrand: HankelIntegrand, x: np.ndarray) -> np.ndarray:
    z = -x + 0j
    log_x = np.log(x)
    return integrand.evaluate(z, log_x - 1j * math.pi) - integrand.evaluate(z, log_x + 1j * math.pi)


def _ray(integrand: HankelIntegrand, epsilon: float, cutoff: float, width: float,
         spec: ContourSpec) -> complex:
    x, weights = _panel_nodes(_ray_breaks(epsilon, cutoff, width), spec.n_ray)
    _check_poles(integrand, -x + 0j, spec)
    return complex(np.sum(weights * _ray_difference(integrand, x)))


def _ray_cutoff(integrand: HankelIntegrand, epsilon: float, spec: ContourSpec, scale: float) -> float:
    decay = integrand.decay
    if not decay > 0.0:
        raise DomainError(f"被积函数在负实轴上不衰减（衰减率 {decay}），需要 Re(a) > 0")
    cutoff = spec.ray_cutoff or max(40.0, 40.0 / decay)
    cutoff = max(cutoff, 2.0 * epsilon)
    while True:
        edge = np.array([cutoff])
        tail = float(np.max(np.abs(_ray_difference(integrand, edge)))) / decay
        if tail <= spec.tail_tol * max(1.0, scale):
            return cutoff
        if cutoff >= spec.max_cutoff:
            raise ConvergenceError(f"射线截断达到上限 {spec.max_cutoff} 时尾项仍为 {tail:.3e}")
        cutoff = min(1.5 * cutoff, spec.max_cutoff)


def _effective_epsilon(integrand: HankelIntegrand, spec: ContourSpec) -> float:
    epsilon = spec.epsilon
    distance = integrand.pole_distance()
    if distance is not None and distance < epsilon + POLE_MARGIN:
        reduced = 0.5 * distance
        if reduced < epsilon:
            logger.warning("分母极点距原点 %.4g，围道半径由 %.4g 缩小为 %.4g", distance, epsilon, reduced)
            epsilon = reduced
    return epsilon


def contour_pieces(kind: IntegrandKind, spec: Optional[ContourSpec] = None,
                   level: int = 0) -> ContourPieces:
    """
    在给定加密层级下计算射线与圆周贡献

    Args:
        kind: 被积函数种类
        spec: 围道参数
        level: 加密层级，每级圆周节点加倍、射线面板宽度减半

    Returns:
        pieces: ContourPieces
    """
    spec = spec or ContourSpec()
    integrand = kind.build()
    epsilon = _effective_epsilon(integrand, spec)
    factor = 2 ** level
    circle = _circle(integrand, epsilon, spec.n_circle * factor, spec)
    cutoff = _ray_cutoff(integrand, epsilon, spec, abs(circle))
    ray = _ray(integrand, epsilon, cutoff, spec.panel_width / factor, spec)
    logger.debug("围道 %s: ε=%.4g R=%.4g level=%d", kind.tag.value, epsilon, cutoff, level)
    return ContourPieces(ray=ray, circle=circle, epsilon=epsilon, cutoff=cutoff)


def contour_integrate(kind: IntegrandKind, spec: Optional[ContourSpec] = None) -> EvalResult:
    """
    (1/2πi)∮_L f(z) dz

    先在基础节点上积分，再逐级加倍节点，直到相邻两级之差低于
    rel_tol·max(1, |I|)；该差值即误差估计。

    Args:
        kind: 被积函数种类
        spec: 围道参数

    Returns:
        result: EvalResult（method 为 contour）
    """
    spec = spec or ContourSpec()
    previous = contour_pieces(kind, spec, level=0).total
    for level in range(1, spec.max_doublings + 1):
        current = contour_pieces(kind, spec, level=level).total
        difference = abs(current - previous)
        if difference <= spec.rel_tol * max(1.0, abs(current)):
            return EvalResult(current, difference, Method.CONTOUR)
        logger.debug("围道 %s 第 %d 级加倍差 %.3e", kind.tag.value, level, difference)
        previous = current
    raise ConvergenceError(
        f"围道积分 {kind.tag.value} 在 {spec.max_doublings} 次节点加倍后差值 {difference:.3e} 仍未稳定")


def with_epsilon(spec: ContourSpec, epsilon: float) -> ContourSpec:
    """复制围道参数并替换半径"""
    return replace(spec, epsilon=epsilon)
