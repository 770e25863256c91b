# special_core - g(n,a) 函数族与 Barnes G 函数

import logging
from dataclasses import dataclass

from hankelzeta.domain import AParam, DBL_EPS, EvalResult, Method, as_order
from hankelzeta.special_core.constants import constants
from hankelzeta.special_core.gamma_functions import log_gamma, psi_int
from hankelzeta.special_core.hurwitz import hurwitz_zeta_sderiv, zeta_neg_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GFamilyValue:
    """
    g(n, a) = ζ′(−n, a) + ψ(n+1) ζ(−n, a)

    Attributes:
        n: 非负整数阶
        a: 参数
        value: 函数值
        abs_err: 误差估计
    """
    n: int
    a: AParam
    value: complex
    abs_err: float = 0.0


def g(n: int, a) -> GFamilyValue:
    """
    计算 g(n, a)

    Args:
        n: 非负整数
        a: 参数，Re(a) > 0

    Returns:
        result: GFamilyValue
    """
    n = as_order(n, "n")
    a = AParam.of(a)
    derivative = hurwitz_zeta_sderiv(-n, a)
    zeta = zeta_neg_int(n, a)
    psi = psi_int(n)
    value = derivative.value + psi * zeta
    abs_err = derivative.abs_err + 4 * DBL_EPS * abs(psi * zeta)
    return GFamilyValue(n=n, a=a, value=value, abs_err=abs_err)


def barnes_log_g(a) -> EvalResult:
    """
    Barnes G 函数的对数

    log G(a) = 1/12 − ln A + (a−1) log Γ(a) − ζ′(−1, a)，其中 1/12 − ln A = ζ′(−1, 1)。

    Args:
        a: 参数，Re(a) > 0

    Returns:
        result: EvalResult
    """
    a = AParam.of(a)
    lg = log_gamma(a.value)
    derivative = hurwitz_zeta_sderiv(-1, a)
    anchor = 1.0 / 12.0 - constants().log_glaisher
    value = anchor + (a.value - 1.0) * lg.value - derivative.value
    abs_err = abs(a.value - 1.0) * lg.abs_err + derivative.abs_err + 8 * DBL_EPS * max(1.0, abs(value))
    return EvalResult(value, abs_err, Method.CLOSED_FORM)


def barnes_poly_p(a) -> complex:
    """
    二次多项式 p(a) = −½(1+γ)a² + (ln√(2π) + γ + ½)a − 5γ/12 − ln(A√(2π))
    """
    a = AParam.of(a).value
    c = constants()
    return (-0.5 * (1.0 + c.gamma) * a * a
            + (c.log_sqrt_2pi + c.gamma + 0.5) * a
            - 5.0 * c.gamma / 12.0
            - (c.log_glaisher + c.log_sqrt_2pi))


def barnes_log_g_poly(a) -> EvalResult:
    """log G(a) 的多项式形式 p(a) + (a−1) g(0,a) − g(1,a)"""
    a = AParam.of(a)
    g0 = g(0, a)
    g1 = g(1, a)
    value = barnes_poly_p(a) + (a.value - 1.0) * g0.value - g1.value
    abs_err = abs(a.value - 1.0) * g0.abs_err + g1.abs_err + 8 * DBL_EPS * max(1.0, abs(value))
    return EvalResult(value, abs_err, Method.CLOSED_FORM)
