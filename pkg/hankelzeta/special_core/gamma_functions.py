# special_core - Digamma、logGamma 与多伽马函数

import cmath
import logging
import math
from functools import lru_cache

from hankelzeta.domain import DBL_EPS, EvalResult, Method, as_complex, as_order, is_nonpositive_integer
from hankelzeta.errors import DomainError, PoleError
from hankelzeta.special_core.combinatorics import bernoulli_number

logger = logging.getLogger(__name__)

LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# 渐近展开前先把 Re(s) 平移到该阈值以上
ASYMPTOTIC_THRESHOLD = 10.0

# 渐近级数的项数
DIGAMMA_TERMS = 9
STIRLING_TERMS = 10

# 更靠左的点改用反射公式，避免平移求和的抵消
REFLECTION_THRESHOLD = -20.0


@lru_cache(maxsize=None)
def _digamma_coefficients():
    # B_{2k}/(2k)
    return tuple(float(bernoulli_number(2 * k)) / (2 * k) for k in range(1, DIGAMMA_TERMS + 1))


@lru_cache(maxsize=None)
def _stirling_coefficients():
    # B_{2k}/(2k(2k-1))
    return tuple(float(bernoulli_number(2 * k)) / (2 * k * (2 * k - 1))
                 for k in range(1, STIRLING_TERMS + 2))


def _check_pole(s, name):
    if is_nonpositive_integer(s):
        raise PoleError(f"{name} 在 s={s.real:g} 处有极点（s 不能是非正整数）")


def _digamma_asymptotic(z):
    # ψ(z) ~ log z − 1/(2z) − Σ B_{2k}/(2k z^{2k})
    inv2 = 1.0 / (z * z)
    power = inv2
    value = cmath.log(z) - 0.5 / z
    last = 0j
    for c in _digamma_coefficients():
        last = c * power
        value -= last
        power *= inv2
    return value, abs(last * inv2)


def digamma(s) -> EvalResult:
    """
    Digamma 函数 ψ(s)

    先用 ψ(s) = ψ(s+1) − 1/s 向上平移到 Re(s) ≥ 10，再用渐近展开。

    Args:
        s: 自变量，不能是非正整数

    Returns:
        result: EvalResult
    """
    s = as_complex(s, "s")
    _check_pole(s, "digamma")
    if s.real < REFLECTION_THRESHOLD:
        # ψ(s) = ψ(1−s) − π cot(πs)
        inner = digamma(1.0 - s)
        cot = cmath.cos(math.pi * s) / cmath.sin(math.pi * s)
        value = inner.value - math.pi * cot
        return EvalResult(value, inner.abs_err + DBL_EPS * abs(value) * 8, Method.SERIES)

    z = s
    shift_sum = 0j
    scale = 0.0
    while z.real < ASYMPTOTIC_THRESHOLD:
        term = 1.0 / z
        shift_sum += term
        scale += abs(term)
        z += 1.0
    asym, truncation = _digamma_asymptotic(z)
    value = asym - shift_sum
    abs_err = truncation + 4 * DBL_EPS * (abs(asym) + scale)
    return EvalResult(value, abs_err, Method.SERIES)


def log_gamma(s) -> EvalResult:
    """
    logGamma 函数

    对 Re(s) > 0 取主分支（与 log Γ 的解析延拓一致，虚部连续），
    通过 log Γ(s) = log Γ(s+n) − Σ Log(s+k) 平移后用 Stirling 级数。
    Re(s) ≤ 0 时用反射公式，结果的虚部按主值对数给出。

    Args:
        s: 自变量，不能是非正整数

    Returns:
        result: EvalResult
    """
    s = as_complex(s, "s")
    _check_pole(s, "log_gamma")
    if s.real <= 0.0:
        # log Γ(s) = log π − Log sin(πs) − log Γ(1−s)
        inner = log_gamma(1.0 - s)
        value = math.log(math.pi) - cmath.log(cmath.sin(math.pi * s)) - inner.value
        return EvalResult(value, inner.abs_err + 8 * DBL_EPS * max(1.0, abs(value)), Method.SERIES)

    z = s
    shift_sum = 0j
    scale = 0.0
    while z.real < ASYMPTOTIC_THRESHOLD:
        term = cmath.log(z)
        shift_sum += term
        scale += abs(term)
        z += 1.0

    log_z = cmath.log(z)
    value = (z - 0.5) * log_z - z + LOG_SQRT_2PI
    inv = 1.0 / z
    inv2 = inv * inv
    power = inv
    coefficients = _stirling_coefficients()
    for c in coefficients[:-1]:
        value += c * power
        power *= inv2
    truncation = abs(coefficients[-1] * power)
    value -= shift_sum
    abs_err = truncation + 4 * DBL_EPS * (abs(value) + abs(z * log_z) + scale)
    return EvalResult(value, abs_err, Method.SERIES)


def gamma(s) -> complex:
    """Γ(s) = exp(log Γ(s))"""
    return cmath.exp(log_gamma(s).value)


@lru_cache(maxsize=None)
def euler_gamma() -> float:
    """Euler 常数 γ = −ψ(1)"""
    return -digamma(1.0).value.real


def harmonic_number(n: int) -> float:
    n = as_order(n, "n")
    return math.fsum(1.0 / k for k in range(1, n + 1))


def psi_int(n: int) -> float:
    """
    整数点的 Digamma 值 ψ(n+1) = −γ + H_n

    Args:
        n: 非负整数

    Returns:
        value: ψ(n+1)
    """
    return harmonic_number(n) - euler_gamma()


def polygamma(m: int, s) -> EvalResult:
    """
    多伽马函数 ψ^(m)(s)

    m = 0 即 digamma；m ≥ 1 时 ψ^(m)(s) = (−1)^{m+1} m! ζ(m+1, s)。
    """
    m = as_order(m, "m")
    if m == 0:
        return digamma(s)
    from hankelzeta.special_core.hurwitz import hurwitz_zeta

    s = as_complex(s, "s")
    _check_pole(s, "polygamma")
    if s.real <= 0.0:
        raise DomainError(f"polygamma 仅支持 Re(s) > 0，实际 s={s}")
    zeta = hurwitz_zeta(m + 1, s)
    factor = (-1) ** (m + 1) * math.factorial(m)
    return EvalResult(factor * zeta.value, abs(factor) * zeta.abs_err, zeta.method)


def digamma_difference(a, b, terms: int = 64) -> EvalResult:
    """
    ψ(a) − ψ(b) = Σ_{k≥0} (1/(k+b) − 1/(k+a))

    前 terms 项直接求和，尾部用 Euler-Maclaurin 公式
    ∫_N^∞ f + f(N)/2 − f'(N)/12 + f'''(N)/720 近似。

    Args:
        a: 第一个参数，Re(a) > 0
        b: 第二个参数，Re(b) > 0
        terms: 直接求和的项数

    Returns:
        result: EvalResult
    """
    a = as_complex(a, "a")
    b = as_complex(b, "b")
    if a.real <= 0.0 or b.real <= 0.0:
        raise DomainError(f"digamma_difference 要求 Re(a), Re(b) > 0，实际 a={a}, b={b}")
    n = as_order(terms, "terms", minimum=1)
    partial = math.fsum(x.real for x in (1.0 / (k + b) - 1.0 / (k + a) for k in range(n)))
    partial_im = math.fsum(x.imag for x in (1.0 / (k + b) - 1.0 / (k + a) for k in range(n)))
    wa = n + a
    wb = n + b
    tail = cmath.log(wa / wb)
    tail += 0.5 * (1.0 / wb - 1.0 / wa)
    tail -= (-1.0 / wb ** 2 + 1.0 / wa ** 2) / 12.0
    tail += (-6.0 / wb ** 4 + 6.0 / wa ** 4) / 720.0
    # 下一项 f^(5)(N)/30240 的量级
    remainder = abs(120.0 * (1.0 / wb ** 6 - 1.0 / wa ** 6)) / 30240.0
    value = complex(partial, partial_im) + tail
    return EvalResult(value, remainder + 8 * DBL_EPS * n * max(1.0, abs(value)), Method.SERIES)
