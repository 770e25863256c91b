# series_eval - S(t,a,p)、T(t,a,p) 与 Lerch 级数的闭式及暴力求和

import cmath
import enum
import logging
import math
from dataclasses import dataclass
from typing import Optional

from hankelzeta.domain import AParam, DBL_EPS, EvalResult, LambdaParam, Method, as_complex, as_order
from hankelzeta.errors import BudgetExhaustedError, DomainError
from hankelzeta.lerch.l_function import lerch_phi_sderiv_neg
from hankelzeta.lerch.lerch_phi import lerch_phi, lerch_phi_neg
from hankelzeta.special_core.combinatorics import binomial
from hankelzeta.special_core.g_family import g
from hankelzeta.special_core.gamma_functions import digamma, euler_gamma, log_gamma, psi_int
from hankelzeta.special_core.hurwitz import hurwitz_zeta

logger = logging.getLogger(__name__)


class Family(str, enum.Enum):
    S = "S"
    T = "T"
    LERCH = "LERCH"


@dataclass(frozen=True)
class SeriesQuery:
    """
    级数查询参数

    Attributes:
        t: 级数变量，|t| < Re(a)
        a: 参数
        p: 非负整数
        lam: Lerch 级数的 λ（其余族为 None）
    """
    t: complex
    a: AParam
    p: int
    lam: Optional[LambdaParam] = None

    def __post_init__(self):
        t = as_complex(self.t, "t")
        a = AParam.of(self.a)
        p = as_order(self.p, "p")
        if not abs(t) < a.value.real:
            raise DomainError(f"级数要求 |t| < Re(a)，实际 |t|={abs(t):g}, Re(a)={a.value.real:g}")
        object.__setattr__(self, 't', t)
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'p', p)
        if self.lam is not None:
            object.__setattr__(self, 'lam', LambdaParam.of(self.lam))


@dataclass(frozen=True)
class SeriesConfig:
    """
    暴力求和配置

    Attributes:
        max_terms: 最大项数
        rel_tol: 尾项上界的相对容差
    """
    max_terms: int = 100000
    rel_tol: float = 1e-12

    def __post_init__(self):
        as_order(self.max_terms, "max_terms", minimum=10)
        if not self.rel_tol > 0.0:
            raise DomainError(f"rel_tol 必须为正数，实际为 {self.rel_tol}")


def _psi_plus_gamma(a):
    return digamma(a).value + euler_gamma()


def s_closed(q: SeriesQuery) -> complex:
    """
    S(t,a,p) = Σ_{n≥1} ζ(n+1,a) t^{n+p}/(n+p) 的闭式

    p = 0 时为 Σ_{n≥1} ζ(n+1,a) tⁿ = ψ(a) − ψ(a−t)；p ≥ 1 时
    S = (tᵖ/p)(ψ(a)+γ) + Σ_k C(p−1,k) g(k,a−t) t^{p−1−k} − g(p−1,a)。
    """
    t, a, p = q.t, q.a.value, q.p
    if p == 0:
        return digamma(a).value - digamma(a - t).value
    if t == 0:
        return 0j
    total = t ** p / p * _psi_plus_gamma(a)
    for k in range(p):
        total += binomial(p - 1, k) * g(k, a - t).value * t ** (p - 1 - k)
    return total - g(p - 1, a).value


def s_closed_log_gamma_form(t, a) -> complex:
    """S(t,a,1) = tψ(a) + log Γ(a−t) − log Γ(a)"""
    q = SeriesQuery(t, a, 1)
    a = q.a.value
    return q.t * digamma(a).value + log_gamma(a - q.t).value - log_gamma(a).value


def s_t_derivative(q: SeriesQuery) -> complex:
    """∂S(t,a,p)/∂t = t^{p−1}(ψ(a) − ψ(a−t))，p ≥ 1"""
    if q.p < 1:
        raise DomainError("s_t_derivative 要求 p ≥ 1")
    a = q.a.value
    return q.t ** (q.p - 1) * (digamma(a).value - digamma(a - q.t).value)


def t_closed(q: SeriesQuery) -> complex:
    """
    T(t,a,p) = Σ_{n≥1} ζ(n+1,a) t^{n+p}/((n+1)…(n+p)) 的闭式，p ≥ 1

    T = (tᵖ/p!)(ψ(a)+γ) + (1/(p−1)!) Σ_k (−1)^{k+1} C(p−1,k) g(k,a) t^{p−1−k}
        − ((−1)ᵖ/(p−1)!) g(p−1, a−t)
    """
    t, a, p = q.t, q.a.value, q.p
    if p < 1:
        raise DomainError("T(t,a,p) 要求 p ≥ 1")
    if t == 0:
        return 0j
    total = t ** p / math.factorial(p) * _psi_plus_gamma(a)
    inner = 0j
    for k in range(p):
        inner += (-1) ** (k + 1) * binomial(p - 1, k) * g(k, a).value * t ** (p - 1 - k)
    total += inner / math.factorial(p - 1)
    return total - (-1) ** p / math.factorial(p - 1) * g(p - 1, a - t).value


def _phi_g(lam, k, x, method):
    # Φ′ₛ(λ,−k,x) + ψ(k+1)Φ(λ,−k,x)
    return lerch_phi_sderiv_neg(lam, k, x, method).value + psi_int(k) * lerch_phi_neg(lam, k, x)


def lerch_series_closed(q: SeriesQuery, method: str = "prop2") -> complex:
    """
    Σ_{n≥0} Φ(λ,n+1,a) t^{n+p}/(n+p) 的闭式（p = 0 时为 Σ Φ(λ,n+1,a) tⁿ = Φ(λ,1,a−t)）

    p ≥ 1 时等于
    Σ_k C(p−1,k)[Φ′ₛ(λ,−k,a−t) + ψ(k+1)Φ(λ,−k,a−t)] t^{p−1−k} − [Φ′ₛ(λ,1−p,a) + ψ(p)Φ(λ,1−p,a)]。

    Args:
        q: 带 λ 的查询，|λ| < 1
        method: Φ′ₛ 的计算方法 prop2 / prop3

    Returns:
        value: 级数值
    """
    if q.lam is None:
        raise DomainError("Lerch 级数需要参数 lam")
    lam = q.lam.require_inside("lerch_series_closed")
    t, a, p = q.t, q.a.value, q.p
    if p == 0:
        return lerch_phi(lam, 1, a - t).value
    if t == 0:
        return 0j
    total = 0j
    for k in range(p):
        total += binomial(p - 1, k) * _phi_g(lam, k, a - t, method) * t ** (p - 1 - k)
    return total - _phi_g(lam, p - 1, a, method)


def lemma4_antiderivative(p: int, t, z) -> complex:
    """
    ∫₀ᵗ y^{p−1}(1 − e^{−zy}) dy 的闭式

    tᵖ/p + e^{−tz} Σ_k k! C(p−1,k) t^{p−1−k}/z^{k+1} − (p−1)!/zᵖ
    """
    p = as_order(p, "p", minimum=1)
    t = as_complex(t, "t")
    z = as_complex(z, "z")
    if z == 0:
        raise DomainError("lemma4_antiderivative 要求 z ≠ 0")
    total = 0j
    for k in range(p):
        total += math.factorial(k) * binomial(p - 1, k) * t ** (p - 1 - k) / z ** (k + 1)
    return t ** p / p + cmath.exp(-t * z) * total - math.factorial(p - 1) / z ** p


def _coefficient(family, q, n):
    a = q.a.value
    if family is Family.LERCH:
        return lerch_phi(q.lam, n + 1, a).value
    return hurwitz_zeta(n + 1, a).value


def _denominator(family, n, p):
    if p == 0:
        return 1.0
    if family is Family.T:
        return float(math.prod(range(n + 1, n + p + 1)))
    return float(n + p)


def series_bruteforce(family, q: SeriesQuery, cfg: Optional[SeriesConfig] = None) -> EvalResult:
    """
    逐项求和的预言机

    n ≥ 1 时 |ζ(n+1,a)| 与 |Φ(λ,n+1,a)| 都不超过
    ζ(n+1, b) ≤ b^{−(n+1)}(1 + b/n)，b = Re(a)；因此第 n 项的上界 M_n 相邻比值
    不超过 ρ = |t|/b，从 N 起的尾项 ≤ M_N/(1−ρ)。

    Args:
        family: S | T | LERCH
        q: 查询参数
        cfg: 求和配置

    Returns:
        result: EvalResult，abs_err 为尾项上界
    """
    try:
        family = Family(family)
    except ValueError:
        raise DomainError(f"未知的级数族 {family!r}，可选 S / T / LERCH")
    cfg = cfg or SeriesConfig()
    if family is Family.T and q.p < 1:
        raise DomainError("T(t,a,p) 要求 p ≥ 1")
    if family is Family.LERCH and q.lam is None:
        raise DomainError("Lerch 级数需要参数 lam")

    t, p = q.t, q.p
    b = q.a.value.real
    rho = abs(t) / b

    def majorant(n):
        return b ** -(n + 1) * (1.0 + b / n) * abs(t) ** (n + p) / _denominator(family, n, p)

    start = 0 if family is Family.LERCH else 1
    total = 0j
    scale = 0.0
    bound = float('inf')
    for n in range(start, start + cfg.max_terms):
        term = _coefficient(family, q, n) * t ** (n + p) / _denominator(family, n, p)
        total += term
        scale += abs(term)
        bound = majorant(n + 1) / (1.0 - rho)
        if bound <= cfg.rel_tol * abs(total) or bound == 0.0:
            logger.debug("%s 暴力求和: %d 项, 尾项上界 %.3e", family.value, n + 1 - start, bound)
            return EvalResult(total, bound + 4 * DBL_EPS * scale, Method.SERIES)
    raise BudgetExhaustedError(f"{family.value} 暴力求和 {cfg.max_terms} 项后尾项上界 {bound:.3e} 仍未满足精度",
                               partial_sum=total, bound=bound, terms=cfg.max_terms)
