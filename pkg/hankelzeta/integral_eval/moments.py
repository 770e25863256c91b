# integral_eval - log Γ 矩积分及相关闭式
# 所有 ∫₀ᵗ 都沿直线段 [0, t] 计算

import cmath
import enum
import logging
import math
from dataclasses import dataclass
from typing import Dict, Tuple

from hankelzeta.domain import AParam, EvalResult, as_complex, as_order
from hankelzeta.errors import ConsistencyError, DomainError, OrderTooLargeError
from hankelzeta.hankel_oracle.quadrature import segment_quadrature
from hankelzeta.series_eval.series import SeriesQuery, s_closed
from hankelzeta.special_core.combinatorics import binomial
from hankelzeta.special_core.constants import constants
from hankelzeta.special_core.g_family import barnes_log_g, barnes_poly_p, g
from hankelzeta.special_core.gamma_functions import LOG_SQRT_2PI, digamma, log_gamma
from hankelzeta.special_core.hurwitz import hurwitz_zeta_sderiv

logger = logging.getLogger(__name__)

MOMENT_MAX_ORDER = 20
NEGATIVE_POLYGAMMA_MAX_ORDER = 10

# g 积分法则与求积结果的一致性容差
RULE_TOL = 1e-8


class M0Form(str, enum.Enum):
    G_FORM = "g_form"
    ZETA_FORM = "zeta_form"
    BARNES_FORM = "barnes_form"


@dataclass(frozen=True)
class MomentQuery:
    """
    矩积分 ∫₀ᵗ sᵐ f(a+s) ds 的参数

    线段 [a, a+t] 需整体落在 Re > 0 内（即 Re(a+t) > 0）。

    Attributes:
        t: 积分上限
        a: 参数
        m: 矩的阶数，m ≤ 20
    """
    t: complex
    a: AParam
    m: int = 0

    def __post_init__(self):
        t = as_complex(self.t, "t")
        a = AParam.of(self.a)
        m = as_order(self.m, "m")
        if m > MOMENT_MAX_ORDER:
            raise OrderTooLargeError(f"矩的阶数 m={m} 超过上限 {MOMENT_MAX_ORDER}")
        if not (a.value + t).real > 0.0:
            raise DomainError(f"积分线段需满足 Re(a+t) > 0，实际 a+t={a.value + t}")
        object.__setattr__(self, 't', t)
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'm', m)


def _theorem4(t, a, m, gamma_value, g_at_end, g_at_start) -> complex:
    total = -gamma_value * t ** (m + 2) / (m + 2)
    total += (LOG_SQRT_2PI - gamma_value * (a - 0.5)) * t ** (m + 1) / (m + 1)
    for k in range(m + 1):
        total += (-1) ** k / (k + 1) * binomial(m, k) * t ** (m - k) * g_at_end(k + 1)
    return total - (-1) ** m / (m + 1) * g_at_start(m + 1)


def log_gamma_moment(q: MomentQuery) -> complex:
    """
    ∫₀ᵗ sᵐ log Γ(a+s) ds

    = −γ t^{m+2}/(m+2) + [ln√(2π) − γ(a−½)] t^{m+1}/(m+1)
      + Σ_k ((−1)ᵏ/(k+1)) C(m,k) t^{m−k} g(k+1, a+t) − ((−1)ᵐ/(m+1)) g(m+1, a)
    """
    t, a, m = q.t, q.a.value, q.m
    if t == 0:
        return 0j
    return _theorem4(t, a, m, constants().gamma,
                     lambda n: g(n, a + t).value,
                     lambda n: g(n, a).value)


def log_gamma_integral_m0(q: MomentQuery, form="g_form") -> complex:
    """
    ∫₀ᵗ log Γ(a+s) ds 的三种等价形式

    g_form: g(1,·) 之差；zeta_form: ζ′(−1,·) 之差加多项式；
    barnes_form: log Γ 与 log G 的组合。
    """
    try:
        form = M0Form(form)
    except ValueError:
        raise DomainError(f"未知形式 {form!r}，可选 g_form / zeta_form / barnes_form")
    if q.m != 0:
        raise DomainError(f"log_gamma_integral_m0 要求 m = 0，实际 m={q.m}")
    t, a = q.t, q.a.value
    if t == 0:
        return 0j
    if form is M0Form.G_FORM:
        gamma_value = constants().gamma
        return (-gamma_value * t * t / 2 + (LOG_SQRT_2PI - gamma_value * (a - 0.5)) * t
                + g(1, a + t).value - g(1, a).value)
    polynomial = -t * t / 2 + (LOG_SQRT_2PI - a + 0.5) * t
    if form is M0Form.ZETA_FORM:
        return polynomial + hurwitz_zeta_sderiv(-1, a + t).value - hurwitz_zeta_sderiv(-1, a).value
    end = a + t
    return (polynomial
            + (end - 1.0) * log_gamma(end).value - barnes_log_g(end).value
            - (a - 1.0) * log_gamma(a).value + barnes_log_g(a).value)


def psi_moment(t, a, p: int) -> complex:
    """
    ∫₀ᵗ s^{p−1} ψ(a−s) ds = ψ(a) tᵖ/p − S(t,a,p)，|t| < Re(a)，p ≥ 1
    """
    q = SeriesQuery(t, a, p)
    if q.p < 1:
        raise DomainError("psi_moment 要求 p ≥ 1")
    return digamma(q.a.value).value * q.t ** q.p / q.p - s_closed(q)


def _moment_at_zero(j: int, t: float) -> complex:
    # ∫₀ᵗ sʲ log Γ(s) ds：a → 0⁺ 时 g(n, 0⁺) = g(n, 1)，n ≥ 1
    return _theorem4(t, 0.0, j, constants().gamma,
                     lambda n: g(n, t).value,
                     lambda n: g(n, 1.0).value)


def negative_polygamma(k: int, t) -> complex:
    """
    负阶多伽马函数 Ψ^{(−k)}(t)

    Ψ^{(−1)} = log Γ；k ≥ 2 时 (1/(k−2)!) ∫₀ᵗ (t−s)^{k−2} log Γ(s) ds，
    按二项式展开成各阶矩后用 a → 0⁺ 的矩公式求值。

    Args:
        k: 1 ≤ k ≤ 10
        t: 正实数

    Returns:
        value: Ψ^{(−k)}(t)
    """
    k = as_order(k, "k", minimum=1)
    if k > NEGATIVE_POLYGAMMA_MAX_ORDER:
        raise OrderTooLargeError(f"负阶多伽马函数阶数 k={k} 超过上限 {NEGATIVE_POLYGAMMA_MAX_ORDER}")
    t = as_complex(t, "t")
    if t.imag != 0.0 or not t.real > 0.0:
        raise DomainError(f"negative_polygamma 要求 t 为正实数，实际 t={t}")
    t = t.real
    if k == 1:
        return log_gamma(t).value
    n = k - 2
    total = 0j
    for j in range(n + 1):
        total += binomial(n, j) * t ** (n - j) * (-1) ** j * _moment_at_zero(j, t)
    return total / math.factorial(n)


def g_integral_rule(m: int, a, t, verify: bool = True) -> complex:
    """
    ∫₀ᵗ g(m−1, a+s) ds = (1/m)[g(m, a+t) − g(m, a)]，m ≥ 1

    Args:
        m: 正整数
        a: 参数
        t: 积分上限，Re(a+t) > 0
        verify: 是否与沿线段的数值积分比对

    Returns:
        value: 积分值
    """
    m = as_order(m, "m", minimum=1)
    q = MomentQuery(t, a, 0)
    t, a = q.t, q.a.value
    value = (g(m, a + t).value - g(m, a).value) / m
    if verify and t != 0:
        check = segment_quadrature(lambda s: g(m - 1, a + s).value, t)
        deviation = abs(check.value - value)
        if deviation > RULE_TOL * (1.0 + abs(check.value)):
            raise ConsistencyError(f"g 积分法则与数值积分相差 {deviation:.3e}（m={m}, a={a}, t={t}）")
    return value


def integration_rule_73(m: int, t, z) -> complex:
    """
    ∫₀ᵗ yᵐ e^{zy} dy = e^{tz} Σ_k (−1)ᵏ k! C(m,k) t^{m−k}/z^{k+1} − (−1)ᵐ m!/z^{m+1}
    """
    m = as_order(m, "m")
    t = as_complex(t, "t")
    z = as_complex(z, "z")
    if z == 0:
        raise DomainError("integration_rule_73 要求 z ≠ 0")
    total = 0j
    for k in range(m + 1):
        total += (-1) ** k * math.factorial(k) * binomial(m, k) * t ** (m - k) / z ** (k + 1)
    return cmath.exp(t * z) * total - (-1) ** m * math.factorial(m) / z ** (m + 1)


def log_g_moment(q: MomentQuery) -> complex:
    """
    ∫₀ᵗ sᵐ log G(a+s) ds

    在 log G(x) = p(x) + (x−1)g(0,x) − g(1,x) 上反复使用 g 积分法则：
    J(0,k) = [g(k+1,a+t) − g(k+1,a)]/(k+1)，
    J(j,k) = tʲ g(k+1,a+t)/(k+1) − (j/(k+1)) J(j−1,k+1)，
    其中 J(j,k) = ∫₀ᵗ sʲ g(k, a+s) ds。
    """
    t, a, m = q.t, q.a.value, q.m
    if t == 0:
        return 0j
    end_cache: Dict[int, complex] = {}
    memo: Dict[Tuple[int, int], complex] = {}

    def g_end(n):
        if n not in end_cache:
            end_cache[n] = g(n, a + t).value
        return end_cache[n]

    def moment(j, k):
        if (j, k) not in memo:
            if j == 0:
                memo[(j, k)] = (g_end(k + 1) - g(k + 1, a).value) / (k + 1)
            else:
                memo[(j, k)] = t ** j * g_end(k + 1) / (k + 1) - j / (k + 1) * moment(j - 1, k + 1)
        return memo[(j, k)]

    c = constants()
    c2 = -0.5 * (1.0 + c.gamma)
    slope = 2.0 * c2 * a + (c.log_sqrt_2pi + c.gamma + 0.5)
    polynomial = (barnes_poly_p(a) * t ** (m + 1) / (m + 1)
                  + slope * t ** (m + 2) / (m + 2)
                  + c2 * t ** (m + 3) / (m + 3))
    return polynomial + (a - 1.0) * moment(m, 0) + moment(m + 1, 0) - moment(m, 1)


# ---------------------------------------------------------------------------
# 数值积分预言机
# ---------------------------------------------------------------------------

def log_gamma_moment_quadrature(q: MomentQuery) -> EvalResult:
    """沿线段对 sᵐ log Γ(a+s) 数值积分"""
    a, m = q.a.value, q.m
    return segment_quadrature(lambda s: s ** m * log_gamma(a + s).value, q.t)


def log_g_moment_quadrature(q: MomentQuery) -> EvalResult:
    """沿线段对 sᵐ log G(a+s) 数值积分"""
    a, m = q.a.value, q.m
    return segment_quadrature(lambda s: s ** m * barnes_log_g(a + s).value, q.t)


def psi_moment_quadrature(t, a, p: int) -> EvalResult:
    """沿线段对 s^{p−1} ψ(a−s) 数值积分"""
    q = SeriesQuery(t, a, p)
    a = q.a.value
    return segment_quadrature(lambda s: s ** (q.p - 1) * digamma(a - s).value, q.t)


def negative_polygamma_quadrature(k: int, t: float) -> EvalResult:
    """(1/(k−2)!) ∫₀ᵗ (t−s)^{k−2} log Γ(s) ds 的数值积分，k ≥ 2"""
    k = as_order(k, "k", minimum=2)
    n = k - 2
    result = segment_quadrature(lambda s: (t - s) ** n * log_gamma(s).value, t)
    scale = 1.0 / math.factorial(n)
    return EvalResult(result.value * scale, result.abs_err * scale, result.method)
