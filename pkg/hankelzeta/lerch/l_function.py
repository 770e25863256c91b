# lerch - 辅助函数 l(λ,a) 与 Φ′ₛ(λ, −m, a)

import cmath
import enum
import logging
import math
from typing import Callable, Dict, Optional

import numpy as np

from hankelzeta.domain import AParam, DBL_EPS, EvalResult, LambdaParam, Method, as_order
from hankelzeta.errors import DomainError, OrderTooLargeError
from hankelzeta.hankel_oracle.quadrature import real_axis_quadrature
from hankelzeta.lerch.lerch_phi import DEFAULT_TERM_BUDGET
from hankelzeta.lerch.series import sum_geometric_series
from hankelzeta.special_core.combinatorics import binomial, geometric_poly, stirling2

logger = logging.getLogger(__name__)

OPERATOR_MAX_ORDER = 12
SDERIV_MAX_ORDER = 12

# t 小于该值时被积函数改用 t→0 的解析极限
SMALL_T = 1e-6


class LMethod(str, enum.Enum):
    SERIES = "series"
    INTEGRAL = "integral"


class SDerivMethod(str, enum.Enum):
    PROP2 = "prop2"
    PROP3 = "prop3"


def _l_derivative_tail(lam_abs, p, a_abs):
    def bound(n):
        base = max(n + p, 1)
        log_bound = math.log(n + p + a_abs) + math.pi / 2
        if log_bound <= 0.0:
            return float('inf')
        q = lam_abs * ((base + 1.0) / base) ** p * (1.0 + 1.0 / ((n + p + a_abs) * log_bound))
        if q >= 1.0:
            return float('inf')
        return lam_abs ** n * float(base) ** p * log_bound / (1.0 - q)

    return bound


def l_derivative(p: int, lam, a, term_budget: Optional[int] = None) -> EvalResult:
    """
    l(λ,a) 对 λ 的 p 阶导数，逐项求导

    l^{(p)}(λ) = −Σ_{k≥0} (k+1)(k+2)…(k+p) λᵏ log(k+p+a)

    Args:
        p: 导数阶数
        lam: λ，|λ| < 1
        a: 参数，Re(a) > 0
        term_budget: 项数预算

    Returns:
        result: EvalResult
    """
    p = as_order(p, "p")
    lam = LambdaParam.of(lam).require_inside("l_derivative")
    a = AParam.of(a).value

    def weights(k):
        rising = np.ones(k.shape, dtype=float)
        for i in range(1, p + 1):
            rising *= k + i
        return -rising * np.log(k + p + a)

    total, bound, _ = sum_geometric_series(
        lam, weights, _l_derivative_tail(abs(lam), p, abs(a)),
        rel_tol=DBL_EPS, budget=term_budget or DEFAULT_TERM_BUDGET, label=f"l^({p})")
    return EvalResult(total, bound, Method.SERIES)


def _l_integrand(lam, a, q):
    """
    [e^{−at} F_q(λe^{−t}) − e^{−t} F_q(λ)]/t，F_q(u) = ω_q(u/(1−u))/(1−u) = Σ nᵠ uⁿ
    """
    c0 = 1.0 / (1.0 - lam)
    x0 = lam * c0
    f0 = c0 * geometric_poly(q, x0)
    # t→0 时括号项 ≈ t·[(1−a)F_q(λ) − F_{q+1}(λ)]
    limit = (1.0 - a) * f0 - c0 * geometric_poly(q + 1, x0)

    def integrand(t):
        if t < SMALL_T:
            return limit
        e = math.exp(-t)
        c = 1.0 / (1.0 - lam * e)
        bracket = cmath.exp(-a * t) * c * geometric_poly(q, lam * e * c) - e * f0
        return bracket / t

    return integrand


def l_integral(q: int, lam, a, tol: float = 1e-12) -> EvalResult:
    """−Σ λⁿ nᵠ log(n+a) 的积分表示（q=0 即 l(λ,a)）"""
    q = as_order(q, "q")
    lam = LambdaParam.of(lam).require_inside("l_integral")
    a = AParam.of(a).value
    return real_axis_quadrature(_l_integrand(lam, a, q), tol=tol)


def l_function(lam, a, method="series") -> EvalResult:
    """
    l(λ, a) = −Σ λⁿ log(n+a)

    Args:
        lam: λ，|λ| < 1
        a: 参数，Re(a) > 0
        method: series（级数）或 integral（在 (0,∞) 上积分）

    Returns:
        result: EvalResult
    """
    try:
        method = LMethod(method)
    except ValueError:
        raise DomainError(f"未知方法 {method!r}，可选 series / integral")
    if method is LMethod.SERIES:
        return l_derivative(0, lam, a)
    return l_integral(0, lam, a)


def lambda_derivative_operator(q: int, lam, derivative: Callable[[int], complex]) -> complex:
    """
    (λ d/dλ)^q f = Σ_p {q p} λᵖ f^{(p)}(λ)

    Args:
        q: 算子阶数，q ≤ 12
        lam: λ
        derivative: derivative(p) 返回 f 在 λ 处的 p 阶导数

    Returns:
        value: (λ d/dλ)^q f 在 λ 处的值
    """
    q = as_order(q, "q")
    if q > OPERATOR_MAX_ORDER:
        raise OrderTooLargeError(f"算子阶数 q={q} 超过上限 {OPERATOR_MAX_ORDER}")
    lam = complex(lam.value if isinstance(lam, LambdaParam) else lam)
    if q == 0:
        return complex(derivative(0))
    total = 0j
    for p in range(1, q + 1):
        total += stirling2(q, p) * lam ** p * derivative(p)
    return total


def _sderiv_prop2(lam, m, a):
    cache: Dict[int, EvalResult] = {}

    def derivative(p):
        if p not in cache:
            cache[p] = l_derivative(p, lam, a)
        return cache[p].value

    total = 0j
    abs_err = 0.0
    for q in range(m + 1):
        weight = binomial(m, q) * a ** (m - q)
        total += weight * lambda_derivative_operator(q, lam, derivative)
        abs_err += abs(weight) * sum(stirling2(q, p) * abs(lam) ** p * cache[p].abs_err
                                     for p in range(q + 1) if p in cache)
    return EvalResult(total, abs_err + 8 * DBL_EPS * abs(total), Method.SERIES)


def _sderiv_prop3(lam, m, a):
    total = 0j
    abs_err = 0.0
    for q in range(m + 1):
        weight = binomial(m, q) * a ** (m - q)
        part = l_integral(q, lam, a)
        total += weight * part.value
        abs_err += abs(weight) * part.abs_err
    return EvalResult(total, abs_err, Method.QUADRATURE)


def lerch_phi_sderiv_neg(lam, m: int, a, method="prop2") -> EvalResult:
    """
    Φ′ₛ(λ, −m, a) = −Σ λⁿ (n+a)ᵐ log(n+a)

    prop2：Σ_q C(m,q) a^{m−q} (λ d/dλ)^q l(λ,a)，l 的导数逐项求和；
    prop3：同样的二项展开，每个 (λ d/dλ)^q l 用带 ω_q 权重的积分表示。

    Args:
        lam: λ，|λ| < 1
        m: 非负整数，m ≤ 12
        a: 参数，Re(a) > 0
        method: prop2 或 prop3

    Returns:
        result: EvalResult
    """
    lam = LambdaParam.of(lam).require_inside("lerch_phi_sderiv_neg")
    m = as_order(m, "m")
    if m > SDERIV_MAX_ORDER:
        raise OrderTooLargeError(f"lerch_phi_sderiv_neg 阶数 m={m} 超过上限 {SDERIV_MAX_ORDER}")
    a = AParam.of(a).value
    try:
        method = SDerivMethod(method)
    except ValueError:
        raise DomainError(f"未知方法 {method!r}，可选 prop2 / prop3")
    if method is SDerivMethod.PROP2:
        return _sderiv_prop2(lam, m, a)
    return _sderiv_prop3(lam, m, a)
