# hankel_oracle - 各函数族的 Hankel 围道表示
# 预言机只依赖围道积分本身：其中用到的 γ 与 ln A 也由围道积分求得

import cmath
import enum
import logging
import math
from functools import lru_cache
from typing import NamedTuple, Optional

from hankelzeta.domain import AParam, DBL_EPS, EvalResult, Method, as_complex, as_order
from hankelzeta.errors import DomainError
from hankelzeta.hankel_oracle.contour import ContourSpec, contour_integrate
from hankelzeta.hankel_oracle.integrands import IntegrandKind, IntegrandTag
from hankelzeta.special_core.combinatorics import bernoulli_poly
from hankelzeta.special_core.gamma_functions import LOG_SQRT_2PI, gamma

logger = logging.getLogger(__name__)


class ZetaSelector(str, enum.Enum):
    CONT = "cont"
    NEG = "neg"
    POS = "pos"
    G = "g"
    ZPRIME_NEG1 = "zprime_neg1"
    I_OF_S = "i_of_s"
    POS_VIA_SIN = "pos_via_sin"


class GammaSelector(str, enum.Enum):
    PSI_COMBINED = "psi_combined"
    PSI_DIRECT = "psi_direct"
    INV_GAMMA = "inv_gamma"
    GAMMA_CONST = "gamma_const"
    LOG_GAMMA = "log_gamma"
    PSI_PLUS_GAMMA = "psi_plus_gamma"
    PSI_DIFFERENCE = "psi_difference"


class LerchSelector(str, enum.Enum):
    PHI_CONT = "phi_cont"
    PHI_ONE = "phi_one"
    PHI_DERIV = "phi_deriv"
    PHI_POS = "phi_pos"


def _selector(enum_type, selector):
    try:
        return enum_type(selector)
    except ValueError:
        choices = ", ".join(item.value for item in enum_type)
        raise DomainError(f"未知的选择器 {selector!r}，可选: {choices}")


def _scaled(result: EvalResult, factor, offset=0.0) -> EvalResult:
    factor = complex(factor)
    value = factor * result.value + offset
    abs_err = abs(factor) * result.abs_err + 4 * DBL_EPS * abs(value)
    return EvalResult(value, abs_err, Method.CONTOUR)


def _integral(tag: IntegrandTag, spec: ContourSpec, **params) -> EvalResult:
    return contour_integrate(IntegrandKind(tag, params), spec)


def _require_not_positive_integer(s, name):
    if s.imag == 0.0 and s.real >= 1.0 and float(s.real).is_integer():
        raise DomainError(f"{name} 不适用于正整数 s={s.real:g}")


class OracleConstants(NamedTuple):
    gamma: float
    log_glaisher: float


@lru_cache(maxsize=16)
def oracle_constants(spec: ContourSpec) -> OracleConstants:
    """
    由围道积分得到 γ（−∮ e^z Log z/z）和 ln A = 1/12 − ζ′(−1, 1)
    """
    euler = -_integral(IntegrandTag.GAMMA_CONST, spec).value.real
    zprime = (0.5 * (1.0 - euler) / 6.0
              + _integral(IntegrandTag.ZETA_PRIME_NEG1, spec, a=1.0).value.real)
    return OracleConstants(gamma=euler, log_glaisher=1.0 / 12.0 - zprime)


def hankel_zeta_family(selector, s_or_n, a, spec: Optional[ContourSpec] = None) -> EvalResult:
    """
    Hurwitz zeta 族的围道表示

    Args:
        selector: cont | neg | pos | g | zprime_neg1 | i_of_s | pos_via_sin
        s_or_n: 复数 s 或整数 n（zprime_neg1 忽略）
        a: 参数，Re(a) > 0
        spec: 围道参数

    Returns:
        result: EvalResult
    """
    selector = _selector(ZetaSelector, selector)
    spec = spec or ContourSpec()
    a = AParam.of(a).value

    if selector is ZetaSelector.CONT:
        s = as_complex(s_or_n, "s")
        _require_not_positive_integer(s, "cont 表示")
        return _scaled(_integral(IntegrandTag.ZETA_CONT, spec, s=s, a=a), gamma(1.0 - s))
    if selector is ZetaSelector.I_OF_S:
        s = as_complex(s_or_n, "s")
        return _integral(IntegrandTag.I_OF_S, spec, s=s, a=a)
    if selector is ZetaSelector.POS_VIA_SIN:
        s = as_complex(s_or_n, "s")
        _require_not_positive_integer(s, "pos_via_sin 表示")
        factor = math.pi / (gamma(s) * cmath.sin(math.pi * s))
        return _scaled(_integral(IntegrandTag.I_OF_S, spec, s=s, a=a), factor)
    if selector is ZetaSelector.NEG:
        n = as_order(s_or_n, "n")
        return _scaled(_integral(IntegrandTag.ZETA_NEG, spec, n=n, a=a), math.factorial(n))
    if selector is ZetaSelector.POS:
        n = as_order(s_or_n, "n", minimum=1)
        factor = (-1) ** (n + 1) / math.factorial(n)
        return _scaled(_integral(IntegrandTag.ZETA_POS, spec, n=n, a=a), factor)
    if selector is ZetaSelector.G:
        n = as_order(s_or_n, "n")
        return _scaled(_integral(IntegrandTag.G_FAMILY, spec, n=n, a=a), math.factorial(n))
    # ζ′(−1,a) = ½(1−γ)B₂(a) + ∮ z^{−2} e^{az} Log z/(1−e^z)
    euler = oracle_constants(spec).gamma
    offset = 0.5 * (1.0 - euler) * bernoulli_poly(2, a)
    return _scaled(_integral(IntegrandTag.ZETA_PRIME_NEG1, spec, a=a), 1.0, offset)


def hankel_gamma_family(selector, s_or_a=None, spec: Optional[ContourSpec] = None, b=None) -> EvalResult:
    """
    Digamma、1/Γ 与 log Γ 的围道表示

    Args:
        selector: psi_combined | psi_direct | inv_gamma | gamma_const | log_gamma
                  | psi_plus_gamma | psi_difference
        s_or_a: 自变量（gamma_const 忽略）
        spec: 围道参数
        b: psi_difference 的第二个参数

    Returns:
        result: EvalResult
    """
    selector = _selector(GammaSelector, selector)
    spec = spec or ContourSpec()

    if selector is GammaSelector.GAMMA_CONST:
        return _scaled(_integral(IntegrandTag.GAMMA_CONST, spec), -1.0)
    x = as_complex(s_or_a, "s")
    if not x.real > 0.0:
        raise DomainError(f"{selector.value} 要求实部为正，实际为 {x}")
    if selector is GammaSelector.PSI_COMBINED:
        return _integral(IntegrandTag.PSI_COMBINED, spec, s=x)
    if selector is GammaSelector.PSI_DIRECT:
        return _scaled(_integral(IntegrandTag.PSI_DIRECT, spec, s=x), gamma(x))
    if selector is GammaSelector.INV_GAMMA:
        return _integral(IntegrandTag.INV_GAMMA, spec, s=x)
    if selector is GammaSelector.PSI_PLUS_GAMMA:
        return _integral(IntegrandTag.PSI_PLUS_GAMMA, spec, a=x)
    if selector is GammaSelector.PSI_DIFFERENCE:
        if b is None:
            raise DomainError("psi_difference 需要参数 b")
        return _integral(IntegrandTag.PSI_DIFFERENCE, spec, a=x, b=b)
    # log Γ(a) = ln√(2π) − γ(a − ½) + ∮ z^{−1} e^{az} Log z/(1−e^z)
    euler = oracle_constants(spec).gamma
    offset = LOG_SQRT_2PI - euler * (x - 0.5)
    return _scaled(_integral(IntegrandTag.LOG_GAMMA_REP, spec, a=x), 1.0, offset)


def hankel_lerch_family(selector, lam, s_or_n, a, spec: Optional[ContourSpec] = None) -> EvalResult:
    """
    Lerch 超越函数族的围道表示，分母为 1 − λe^z

    Args:
        selector: phi_cont | phi_one | phi_deriv | phi_pos
        lam: λ，|λ| ≤ 1，λ ≠ 1
        s_or_n: phi_cont 的 s 或 phi_deriv / phi_pos 的 n（phi_one 忽略）
        a: 参数，Re(a) > 0
        spec: 围道参数

    Returns:
        result: EvalResult
    """
    selector = _selector(LerchSelector, selector)
    spec = spec or ContourSpec()
    a = AParam.of(a).value

    if selector is LerchSelector.PHI_CONT:
        s = as_complex(s_or_n, "s")
        _require_not_positive_integer(s, "phi_cont 表示")
        return _scaled(_integral(IntegrandTag.PHI_CONT, spec, lam=lam, s=s, a=a), gamma(1.0 - s))
    if selector is LerchSelector.PHI_ONE:
        return _scaled(_integral(IntegrandTag.PHI_ONE, spec, lam=lam, a=a), -1.0)
    n = as_order(s_or_n, "n")
    if selector is LerchSelector.PHI_DERIV:
        return _scaled(_integral(IntegrandTag.PHI_DERIV, spec, lam=lam, n=n, a=a), math.factorial(n))
    factor = (-1) ** (n - 1) / math.factorial(n)
    return _scaled(_integral(IntegrandTag.PHI_POS, spec, lam=lam, n=n, a=a), factor)


def hankel_barnes_poly(a, spec: Optional[ContourSpec] = None) -> complex:
    """p(a)，常数 γ 与 ln A 取自围道积分"""
    a = AParam.of(a).value
    c = oracle_constants(spec or ContourSpec())
    return (-0.5 * (1.0 + c.gamma) * a * a
            + (LOG_SQRT_2PI + c.gamma + 0.5) * a
            - 5.0 * c.gamma / 12.0
            - (c.log_glaisher + LOG_SQRT_2PI))


def hankel_barnes(a, spec: Optional[ContourSpec] = None) -> EvalResult:
    """
    log G(a) = p(a) + ∮ [(a−1)z^{−1} − z^{−2}] e^{az} Log z/(1−e^z)

    Args:
        a: 参数，Re(a) > 0
        spec: 围道参数

    Returns:
        result: EvalResult
    """
    spec = spec or ContourSpec()
    a = AParam.of(a).value
    return _scaled(_integral(IntegrandTag.LOG_G, spec, a=a), 1.0, hankel_barnes_poly(a, spec))
