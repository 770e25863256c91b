# special_core - Hurwitz zeta 函数及其 s-导数
# Re(s) 足够大时直接求和，中间区域用 Euler-Maclaurin 延拓，Re(s) 很小时走函数方程

import cmath
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from hankelzeta.domain import AParam, DBL_EPS, EvalResult, Method, as_complex, as_order
from hankelzeta.errors import ConvergenceError, OrderTooLargeError, PoleError
from hankelzeta.special_core.combinatorics import BERNOULLI_MAX_ORDER, bernoulli_number, bernoulli_poly
from hankelzeta.special_core.gamma_functions import digamma, log_gamma

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 10
DEFAULT_DIRECT_TERMS = 64
MAX_SHIFT = 20000

# B_{2j} 可用的最大 j
MAX_ORDER = BERNOULLI_MAX_ORDER // 2 - 1

# Re(s) 低于此值时改用函数方程，Euler-Maclaurin 参数不再生效
REFLECTION_BELOW = -6.0
MAX_FOURIER_TERMS = 1 << 16
MAX_TAYLOR_TERMS = 200
LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class EulerMaclaurinParams:
    """
    Euler-Maclaurin 参数

    Attributes:
        shift: 直接求和的项数 N；默认 None 按 s、a 自适应选择，
            需要固定 N=20、J=10 这类取法时显式传入 shift=20
        order: 修正项数 J，默认 10
        direct_terms: Re(s) > 1 时直接级数允许的最大项数
    """
    shift: Optional[int] = None
    order: int = DEFAULT_ORDER
    direct_terms: int = DEFAULT_DIRECT_TERMS

    def __post_init__(self):
        if self.shift is not None:
            as_order(self.shift, "shift")
        order = as_order(self.order, "order", minimum=1)
        if order > MAX_ORDER:
            raise OrderTooLargeError(f"Euler-Maclaurin 阶数 J={order} 超过上限 {MAX_ORDER}")
        as_order(self.direct_terms, "direct_terms")


DEFAULT_PARAMS = EulerMaclaurinParams()


@lru_cache(maxsize=None)
def _correction_coefficient(j: int) -> float:
    # B_{2j}/(2j)!
    return float(bernoulli_number(2 * j) / math.factorial(2 * j))


def _rising(s, count):
    # (P, P') 其中 P = s(s+1)...(s+count-1)
    p, dp = 1 + 0j, 0j
    for i in range(count):
        p, dp = p * (s + i), dp * (s + i) + p
    return p, dp


def _effective_order(s, order):
    # 保证余项 w^{-s-2J-1} 随 w 衰减
    needed = math.ceil((1.0 - s.real) / 2.0) + 1
    effective = max(order, needed)
    if effective > MAX_ORDER:
        raise OrderTooLargeError(
            f"Re(s)={s.real:g} 过小，所需 Euler-Maclaurin 阶数 {effective} 超过上限 {MAX_ORDER}")
    return effective


def _choose_shift(s, a, order):
    """最小的 N，使 |s+2J−1| < 2π(N+Re a) 且余项估计低于舍入误差"""
    n = max(0, math.ceil(abs(s + 2 * order - 1) / (2 * math.pi) - a.real + 1e-12))
    p, dp = _rising(s, 2 * order + 1)
    coefficient = abs(_correction_coefficient(order + 1)) * max(abs(p), abs(dp))
    if coefficient == 0.0:
        return n
    while n < MAX_SHIFT:
        log_w = cmath.log(n + a)
        remainder = coefficient * (1.0 + abs(log_w)) * math.exp((-(s + 2 * order + 1) * log_w).real)
        scale = max(1.0, math.exp(((1.0 - s) * log_w).real) / max(abs(s - 1.0), DBL_EPS))
        if remainder <= DBL_EPS * scale:
            return n
        n += 1
    logger.warning("Euler-Maclaurin 平移达到上限 %d (s=%s, a=%s)", MAX_SHIFT, s, a)
    return n


def _euler_maclaurin(s, a, shift, order, want_derivative):
    """
    返回 (ζ, ζ', 误差估计, 导数误差估计)

    ζ(s,a) = Σ_{k<N} (k+a)^{-s} + w^{1-s}/(s-1) + w^{-s}/2
             + Σ_{j=1}^{J} B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1},  w = N + a
    导数逐项解析求导，(s)_{2j-1} 与其导数按乘积法则同步递推。
    """
    total = 0j
    dtotal = 0j
    scale = 0.0
    for k in range(shift):
        log_w = cmath.log(k + a)
        term = cmath.exp(-s * log_w)
        total += term
        scale += abs(term)
        if want_derivative:
            dtotal -= log_w * term

    w = shift + a
    log_w = cmath.log(w)
    w_ms = cmath.exp(-s * log_w)
    w_1ms = w * w_ms
    s1 = s - 1.0
    total += w_1ms / s1 + 0.5 * w_ms
    if want_derivative:
        dtotal += -log_w * w_1ms / s1 - w_1ms / (s1 * s1) - 0.5 * log_w * w_ms
    scale += abs(w_1ms / s1) + abs(w_ms)

    p, dp = 1 + 0j, 0j
    next_index = 0
    power = w_1ms
    inv_w2 = 1.0 / (w * w)
    last = 0.0
    dlast = 0.0
    for j in range(1, order + 1):
        while next_index <= 2 * j - 2:
            p, dp = p * (s + next_index), dp * (s + next_index) + p
            next_index += 1
        power *= inv_w2
        c = _correction_coefficient(j)
        term = c * p * power
        total += term
        scale += abs(term)
        last = abs(term)
        if want_derivative:
            dterm = c * power * (dp - log_w * p)
            dtotal += dterm
            dlast = abs(dterm)

    rounding = 4 * DBL_EPS * scale
    return total, dtotal, last + rounding, dlast + rounding * (1.0 + abs(log_w))


def _direct_terms_needed(s, a, limit):
    """Re(s) > 1 时直接级数达到舍入精度所需的项数；超过 limit 返回 None"""
    sigma = s.real
    if sigma <= 1.0:
        return None
    target = DBL_EPS * abs(cmath.exp(-s * cmath.log(a)))
    for n in range(1, limit + 1):
        w = n + a.real
        growth = math.exp(abs(s.imag) * abs(cmath.phase(n + a)))
        bound = growth * (w ** -sigma + w ** (1.0 - sigma) / (sigma - 1.0))
        if bound <= target:
            return n, bound
    return None


def _direct_series(s, a, n, want_derivative):
    total = 0j
    dtotal = 0j
    scale = 0.0
    for k in range(n):
        log_w = cmath.log(k + a)
        term = cmath.exp(-s * log_w)
        total += term
        scale += abs(term)
        if want_derivative:
            dtotal -= log_w * term
    return total, dtotal, 4 * DBL_EPS * scale


def _negative_integer(s):
    if s.imag == 0.0 and s.real <= 0.0 and float(s.real).is_integer():
        return int(-s.real)
    return None


def _head_sum(s, start, count):
    """Σ_{k<count} (start+k)^{-s} 及其 s-导数与绝对值之和"""
    if count <= 0:
        return 0j, 0j, 0.0
    log_w = np.log(start + np.arange(count, dtype=float))
    terms = np.exp(-s * log_w)
    return complex(np.sum(terms)), complex(-np.sum(log_w * terms)), float(np.sum(np.abs(terms)))


def _fourier_terms(sigma):
    """Σ_{n>N} n^{-σ}(1 + log n) 低于舍入误差所需的 N 及该尾项上界（σ > 2）"""
    n = 8
    while True:
        tail = n ** (1.0 - sigma) * (2.0 + math.log(n)) / (sigma - 1.0)
        if tail <= 0.25 * DBL_EPS or n >= MAX_FOURIER_TERMS:
            return n, tail
        n = int(n * 1.25) + 1


def _reflected(s, a, want_derivative):
    """
    实参数 a、Re(s) 很小时的 Hurwitz 函数方程

    ζ(s,b) = Γ(σ)/(2π)^σ [e^{-iπσ/2} F(b) + e^{iπσ/2} F(−b)],  σ = 1 − s,
    F(±b) = Σ_{n≥1} e^{±2πinb} n^{-σ}

    b ∈ (0,1] 由 a 向下平移得到，ζ(s,a) = ζ(s,b) − Σ_{k<a−b} (b+k)^{-s}。
    """
    shift = max(0, math.ceil(a) - 1)
    b = a - shift
    sigma = 1.0 - s
    n_terms, tail = _fourier_terms(sigma.real)
    n = np.arange(1, n_terms + 1, dtype=float)
    log_n = np.log(n)
    weights = np.exp(-sigma * log_n)
    plus = np.exp(2j * np.pi * np.mod(n * b, 1.0))
    minus = np.conj(plus)
    f_plus = complex(np.sum(plus * weights))
    f_minus = complex(np.sum(minus * weights))
    rot = cmath.exp(-0.5j * math.pi * sigma)
    rot_inv = cmath.exp(0.5j * math.pi * sigma)
    bracket = rot * f_plus + rot_inv * f_minus

    lg = log_gamma(sigma)
    try:
        prefactor = cmath.exp(lg.value - sigma * LOG_2PI)
    except OverflowError:
        raise ConvergenceError(f"ζ({s}, {a}) 超出双精度范围") from None
    value = prefactor * bracket
    rotation = abs(rot) + abs(rot_inv)
    rounding = 4 * DBL_EPS * float(np.sum(np.abs(weights))) * (1.0 + abs(sigma))
    err = abs(prefactor) * rotation * (tail + rounding) \
        + abs(value) * (lg.abs_err + 4 * DBL_EPS * abs(sigma) * LOG_2PI)

    dvalue = 0j
    derr = 0.0
    if want_derivative:
        df_plus = -complex(np.sum(plus * weights * log_n))
        df_minus = -complex(np.sum(minus * weights * log_n))
        dbracket = (rot * (df_plus - 0.5j * math.pi * f_plus)
                    + rot_inv * (df_minus + 0.5j * math.pi * f_minus))
        psi = digamma(sigma).value
        # d/ds = −d/dσ
        dvalue = -prefactor * ((psi - LOG_2PI) * bracket + dbracket)
        derr = err * (abs(psi) + LOG_2PI + math.pi + math.log(n_terms))

    head, dhead, head_scale = _head_sum(s, b, shift)
    value -= head
    dvalue -= dhead
    err += 4 * DBL_EPS * head_scale
    derr += 4 * DBL_EPS * head_scale * (1.0 + math.log(a))
    return value, dvalue, err, derr


def _imaginary_taylor(s, a, params, want_derivative):
    """
    复参数 a、Re(s) 很小时沿虚方向展开

    a 先上移到 x = Re(a) + m ≥ 2|Im a|，再用
    ζ(s, x+iy) = Σ_k (−iy)^k/k! (s)_k ζ(s+k, x)，
    每个 ζ(s+k, x) 都是实参数，走函数方程或 Euler-Maclaurin。
    s+k = 1 时 (s)_k 的零点与极点相消，该项取极限。
    """
    y = a.imag
    shift = max(0, math.ceil(2.0 * abs(y) - a.real))
    x = a.real + shift
    head, dhead, head_scale = _head_sum(s, a, shift)

    step = -1j * y
    factor = 1 + 0j
    p, dp = 1 + 0j, 0j
    prev_dp = 0j
    total = dtotal = 0j
    err = derr = 0.0
    scale = dscale = 0.0
    quiet = 0
    limit = int(abs(s)) + MAX_TAYLOR_TERMS
    for k in range(limit):
        sk = s + k
        if sk == 1:
            # 此时 p = 0，dp = (s)_{k-1}
            term = factor * dp
            dterm = factor * (prev_dp - dp * digamma(x).value)
            term_err = 4 * DBL_EPS * abs(term)
            dterm_err = 4 * DBL_EPS * abs(dterm)
        else:
            z, dz, z_err, dz_err, _ = _evaluate(sk, complex(x), params, want_derivative)
            term = factor * p * z
            dterm = factor * (dp * z + p * dz)
            term_err = abs(factor * p) * z_err
            dterm_err = abs(factor) * (abs(dp) * z_err + abs(p) * dz_err)
        total += term
        dtotal += dterm
        err += term_err
        derr += dterm_err
        scale += abs(term)
        dscale += abs(dterm)

        prev_dp = dp
        p, dp = p * sk, dp * sk + p
        factor *= step / (k + 1)
        if sk == 1 and not want_derivative:
            # 之后各项含因子 (s)_k = 0
            break
        small = abs(term) <= DBL_EPS * scale and (not want_derivative or abs(dterm) <= DBL_EPS * dscale)
        quiet = quiet + 1 if (small and k > abs(s)) else 0
        if quiet >= 2:
            break
    else:
        raise ConvergenceError(f"ζ({s}, {a}) 的虚方向展开 {limit} 项后仍未收敛")

    err += abs(term) + 4 * DBL_EPS * (scale + head_scale)
    derr += abs(dterm) + 4 * DBL_EPS * (dscale + head_scale * (1.0 + abs(cmath.log(a + shift))))
    return total + head, dtotal + dhead, err, derr


def _prepare(s, a, params):
    s = as_complex(s, "s")
    a = AParam.of(a).value
    if s == 1:
        raise PoleError("Hurwitz zeta 在 s=1 处有极点")
    return s, a, params or DEFAULT_PARAMS


def _evaluate(s, a, params, want_derivative):
    direct = _direct_terms_needed(s, a, params.direct_terms)
    if direct is not None:
        n, bound = direct
        total, dtotal, rounding = _direct_series(s, a, n, want_derivative)
        # ζ' 的尾项多一个 log(n+a) 因子
        dbound = bound * (abs(cmath.log(n + a)) + 1.0 / (s.real - 1.0))
        return total, dtotal, bound + rounding, dbound + rounding, Method.SERIES

    if s.real < REFLECTION_BELOW:
        n = _negative_integer(s)
        exact = n is not None and n < BERNOULLI_MAX_ORDER
        if exact and not want_derivative:
            value = zeta_neg_int(n, a)
            return value, 0j, 2 * DBL_EPS * abs(value), 0.0, Method.CLOSED_FORM
        if a.imag == 0.0:
            total, dtotal, err, derr = _reflected(s, a.real, want_derivative)
        else:
            total, dtotal, err, derr = _imaginary_taylor(s, a, params, want_derivative)
        if exact:
            total = zeta_neg_int(n, a)
            err = 2 * DBL_EPS * abs(total)
        if not (cmath.isfinite(total) and cmath.isfinite(dtotal)):
            raise ConvergenceError(f"ζ({s}, {a}) 超出双精度范围")
        logger.debug("函数方程: s=%s a=%s", s, a)
        return total, dtotal, err, derr, Method.SERIES

    order = _effective_order(s, params.order)
    shift = params.shift if params.shift is not None else _choose_shift(s, a, order)
    logger.debug("Euler-Maclaurin: s=%s a=%s N=%d J=%d", s, a, shift, order)
    total, dtotal, err, derr = _euler_maclaurin(s, a, shift, order, want_derivative)
    return total, dtotal, err, derr, Method.EULER_MACLAURIN


def hurwitz_zeta(s, a, params: Optional[EulerMaclaurinParams] = None) -> EvalResult:
    """
    Hurwitz zeta 函数 ζ(s, a)

    Args:
        s: 复数自变量，s ≠ 1
        a: 参数，Re(a) > 0
        params: Euler-Maclaurin 参数

    Returns:
        result: EvalResult（method 为 series 或 euler_maclaurin）
    """
    s, a, params = _prepare(s, a, params)
    total, _, err, _, method = _evaluate(s, a, params, want_derivative=False)
    return EvalResult(total, err, method)


def hurwitz_zeta_sderiv(s, a, params: Optional[EulerMaclaurinParams] = None) -> EvalResult:
    """
    ∂ζ(s,a)/∂s，由 Euler-Maclaurin 公式逐项解析求导

    Args:
        s: 复数自变量，s ≠ 1
        a: 参数，Re(a) > 0
        params: Euler-Maclaurin 参数

    Returns:
        result: EvalResult
    """
    s, a, params = _prepare(s, a, params)
    _, dtotal, _, derr, method = _evaluate(s, a, params, want_derivative=True)
    return EvalResult(dtotal, derr, method)


def hurwitz_zeta_adiff(n: int, s, a, params: Optional[EulerMaclaurinParams] = None) -> EvalResult:
    """
    a-导数 ∂ⁿζ(s,a)/∂aⁿ = (−1)ⁿ (s)ₙ ζ(s+n, a)
    """
    n = as_order(n, "n")
    s = as_complex(s, "s")
    p, _ = _rising(s, n)
    if p == 0:
        return EvalResult(0j, 0.0, Method.CLOSED_FORM)
    if s + n == 1:
        raise PoleError(f"ζ(s+n, a) 在 s+n=1 处有极点（s={s}, n={n}）")
    inner = hurwitz_zeta(s + n, a, params)
    factor = (-1) ** n * p
    return EvalResult(factor * inner.value, abs(factor) * inner.abs_err, inner.method)


def zeta_neg_int(n: int, a) -> complex:
    """
    ζ(−n, a) = −B_{n+1}(a)/(n+1)

    Args:
        n: 非负整数，n ≤ 59
        a: 参数，Re(a) > 0

    Returns:
        value: ζ(−n, a)
    """
    n = as_order(n, "n")
    if n > BERNOULLI_MAX_ORDER - 1:
        raise OrderTooLargeError(f"zeta_neg_int 阶数 n={n} 超过上限 {BERNOULLI_MAX_ORDER - 1}")
    a = AParam.of(a).value
    return -bernoulli_poly(n + 1, a) / (n + 1)

