# lerch - Lerch 超越函数 Φ(λ, s, a)

import cmath
import logging
import math
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from hankelzeta.domain import AParam, DBL_EPS, EvalResult, LambdaParam, Method, as_complex, as_order
from hankelzeta.errors import DomainError, OrderTooLargeError, SlowConvergenceError
from hankelzeta.lerch.series import sum_geometric_series
from hankelzeta.special_core.combinatorics import binomial, geometric_poly
from hankelzeta.special_core.hurwitz import hurwitz_zeta

logger = logging.getLogger(__name__)

DEFAULT_TERM_BUDGET = 200000
DEFAULT_SLOW_THRESHOLD = 0.95

LERCH_NEG_MAX_ORDER = 30

# |λ| = 1 时尾部渐近展开的阶数与相邻项比值上限
UNIT_CIRCLE_ORDER = 40
UNIT_CIRCLE_RATIO = 0.35


def _phi_tail_bound(lam_abs, s, a):
    sigma = s.real
    tau = abs(s.imag)

    def bound(n):
        w = n + a.real
        arg_factor = math.exp(tau * abs(cmath.phase(n + a)))
        if sigma >= 0.0:
            return lam_abs ** n * w ** -sigma * arg_factor / (1.0 - lam_abs)
        # Re(s) < 0：权重多项式增长，比值上界 q
        base = n + abs(a)
        q = lam_abs * ((base + 1.0) / base) ** -sigma
        if q >= 1.0:
            return float('inf')
        return lam_abs ** n * base ** -sigma * arg_factor / (1.0 - q)

    return bound


def _circle_position(lam: complex) -> float:
    # λ = e^{2πix}，x ∈ (0, 1)
    return (cmath.phase(lam) / (2.0 * math.pi)) % 1.0


@lru_cache(maxsize=64)
def _unit_circle_moments(lam: complex) -> Tuple[complex, ...]:
    """
    c_k = Σ_{n≥0} λⁿ nᵏ（Abel 意义），|λ| = 1，λ ≠ 1

    c_0 = 1/(1−λ)；k ≥ 1 时
    c_k = Li_{−k}(λ) = k! (−i)^{k+1} (2π)^{−k−1} [ζ(k+1, 1−x) + (−1)^{k+1} ζ(k+1, x)]
    """
    x = _circle_position(lam)
    moments = [1.0 / (1.0 - lam)]
    for k in range(1, UNIT_CIRCLE_ORDER + 1):
        q = k + 1
        inner = hurwitz_zeta(q, 1.0 - x).value + (-1) ** q * hurwitz_zeta(q, x).value
        moments.append(math.factorial(k) * (-1j) ** q * (2.0 * math.pi) ** -q * inner)
    return tuple(moments)


def _phi_unit_circle(lam: complex, s: complex, a: complex, budget: int):
    """
    |λ| = 1 时 Φ(λ,s,a) = Σ_{n<N} λⁿ(n+a)^{−s} + λᴺ Φ(λ,s,w)，w = a + N

    尾部用 Boole 型渐近展开 Φ(λ,s,w) ~ Σ_k (−1)^k (s)_k/k! w^{−s−k} c_k；
    N 取到相邻项比值 (|s|+k)/(θw) 不超过 UNIT_CIRCLE_RATIO，θ 为 λ 到 1 的辐角距离。
    """
    x = _circle_position(lam)
    theta = 2.0 * math.pi * min(x, 1.0 - x)
    w_min = (abs(s) + UNIT_CIRCLE_ORDER) / (UNIT_CIRCLE_RATIO * theta)
    head = max(0, math.ceil(w_min - a.real))
    if head > budget:
        raise SlowConvergenceError(
            f"lerch_phi: λ={lam} 距 1 过近，单位圆展开需要 {head} 项直接求和，超过预算 {budget}",
            partial_sum=None, bound=float('inf'), terms=0)

    log_lam = 1j * cmath.phase(lam)
    n = np.arange(head, dtype=float)
    terms = np.exp(n * log_lam - s * np.log(n + a))
    total = complex(np.sum(terms))
    scale = float(np.sum(np.abs(terms)))

    w = a + head
    coef = cmath.exp(-s * cmath.log(w))
    tail = 0j
    tail_scale = 0.0
    last = 0.0
    for k, c in enumerate(_unit_circle_moments(lam)):
        term = coef * c
        tail += term
        last = abs(term)
        tail_scale += last
        coef *= -(s + k) / ((k + 1) * w)
    total += cmath.exp(head * log_lam) * tail
    err = 2.0 * last + 4 * DBL_EPS * (scale + tail_scale)
    logger.debug("lerch_phi 单位圆: λ=%s N=%d 尾项估计 %.3e", lam, head, last)
    return total, err


def lerch_phi(lam, s, a, term_budget: Optional[int] = None,
              slow_threshold: float = DEFAULT_SLOW_THRESHOLD) -> EvalResult:
    """
    Lerch 超越函数 Φ(λ, s, a) = Σ λⁿ (n+a)^{−s}

    Args:
        lam: λ，|λ| < 1；|λ| = 1 时要求 Re(s) > 0
        s: 复数自变量
        a: 参数，Re(a) > 0
        term_budget: 项数预算
        slow_threshold: |λ| 超过该值时预算耗尽视为收敛过慢

    Returns:
        result: EvalResult
    """
    lam = LambdaParam.of(lam)
    s = as_complex(s, "s")
    a = AParam.of(a).value
    on_circle = lam.on_unit_circle
    if on_circle and not s.real > 0.0:
        raise DomainError(f"|λ| = 1 时 lerch_phi 要求 Re(s) > 0，实际 s={s}")
    budget = term_budget or DEFAULT_TERM_BUDGET
    if on_circle:
        total, err = _phi_unit_circle(lam.value, s, a, budget)
        return EvalResult(total, err, Method.SERIES)

    def weights(n):
        return np.exp(-s * np.log(n + a))

    total, bound, terms = sum_geometric_series(
        lam.value, weights, _phi_tail_bound(abs(lam.value), s, a),
        rel_tol=DBL_EPS, budget=budget, slow_threshold=slow_threshold, label="lerch_phi")
    return EvalResult(total, bound, Method.SERIES)


def lerch_phi_neg(lam, m: int, a) -> complex:
    """
    Φ(λ, −m, a) 的几何多项式闭式

    Φ(λ,−m,a) = 1/(1−λ) Σ_j C(m,j) a^{m−j} ω_j(λ/(1−λ))

    Args:
        lam: λ，|λ| < 1
        m: 非负整数，m ≤ 30
        a: 参数，Re(a) > 0

    Returns:
        value: Φ(λ, −m, a)
    """
    lam = LambdaParam.of(lam).require_inside("lerch_phi_neg")
    m = as_order(m, "m")
    if m > LERCH_NEG_MAX_ORDER:
        raise OrderTooLargeError(f"lerch_phi_neg 阶数 m={m} 超过上限 {LERCH_NEG_MAX_ORDER}")
    a = AParam.of(a).value
    c = 1.0 / (1.0 - lam)
    x = lam * c
    total = 0j
    for j in range(m + 1):
        total += binomial(m, j) * a ** (m - j) * geometric_poly(j, x)
    return c * total


def polylog_check(lam, s) -> Tuple[complex, complex]:
    """
    λ Φ(λ, s, 1) 与多重对数级数 Σ_{m≥1} λᵐ/mˢ 的两种计算

    Returns:
        (via_lerch, direct): 两条路径的结果
    """
    lam_value = LambdaParam.of(lam).require_inside("polylog_check")
    s = as_complex(s, "s")
    via_lerch = lam_value * lerch_phi(lam_value, s, 1).value
    direct = 0j
    power = 1 + 0j
    m = 0
    while True:
        m += 1
        power *= lam_value
        term = power * cmath.exp(-s * math.log(m))
        direct += term
        if abs(power) * max(1.0, m ** -s.real) < DBL_EPS * max(abs(direct), DBL_EPS) * (1.0 - abs(lam_value)):
            break
        if m > DEFAULT_TERM_BUDGET:
            break
    return via_lerch, direct
