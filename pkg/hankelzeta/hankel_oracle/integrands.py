# hankel_oracle - Hankel 围道积分的被积函数
# 每种表示对应一个被积函数类，通过标签注册表统一构造

import enum
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from hankelzeta.domain import AParam, LambdaParam, as_complex, as_order
from hankelzeta.errors import DomainError

logger = logging.getLogger(__name__)


class IntegrandTag(str, enum.Enum):
    """被积函数标签"""
    I_OF_S = "I_of_s"
    ZETA_CONT = "zeta_cont"
    ZETA_NEG = "zeta_neg"
    ZETA_POS = "zeta_pos"
    G_FAMILY = "g_family"
    PSI_PLUS_GAMMA = "psi_plus_gamma"
    INV_GAMMA = "inv_gamma"
    LOG_GAMMA_REP = "log_gamma_rep"
    PHI_CONT = "phi_cont"
    PHI_ONE = "phi_one"
    PHI_DERIV = "phi_deriv"
    ZETA_PRIME_NEG1 = "zeta_prime_neg1"
    LOG_G = "log_G"
    PSI_COMBINED = "psi_combined"
    PSI_DIRECT = "psi_direct"
    GAMMA_CONST = "gamma_const"
    PSI_DIFFERENCE = "psi_difference"
    PHI_POS = "phi_pos"


class HankelIntegrand(ABC):
    """
    被积函数抽象基类

    evaluate 接收围道节点 z 与其对数 log_z（射线上由调用方给出 ln x ∓ iπ），
    返回 f(z)。幂 z^w 一律写成 exp(w·log_z)，保证分支与围道约定一致。
    """

    @abstractmethod
    def evaluate(self, z: np.ndarray, log_z: np.ndarray) -> np.ndarray:
        """
        计算被积函数

        Args:
            z: 复数节点
            log_z: 节点的对数（分支已固定）

        Returns:
            values: f(z)
        """
        pass

    @property
    @abstractmethod
    def single_valued(self) -> bool:
        """被积函数在原点附近是否单值（整数幂且不含 Log z）"""
        pass

    @property
    @abstractmethod
    def decay(self) -> float:
        """负实轴上 |f(−x)| 的指数衰减率"""
        pass

    def pole_distance(self) -> Optional[float]:
        """分母 1 − λe^z 最近零点到原点的距离；无此类极点时返回 None"""
        return None

    def denominator(self, z: np.ndarray) -> Optional[np.ndarray]:
        return None


def _power(z, log_z, exponent):
    # 整数幂直接乘方，两条射线上的值逐位相同
    if exponent.imag == 0.0 and float(exponent.real).is_integer():
        return z ** int(exponent.real)
    return np.exp(exponent * log_z)


class ZetaKernel(HankelIntegrand):
    """
    z^w e^{az} (Log z)^k / (1 − λ e^z)，k ∈ {0, 1}

    覆盖 I(s)、ζ、g(n,a)、ψ+γ、log Γ 以及 Lerch 各表示。
    """

    def __init__(self, exponent: complex, a: complex, with_log: bool, lam: complex = 1.0):
        self.exponent = complex(exponent)
        self.a = complex(a)
        self.with_log = with_log
        self.lam = complex(lam)

    def evaluate(self, z, log_z):
        values = _power(z, log_z, self.exponent) * np.exp(self.a * z) / (1.0 - self.lam * np.exp(z))
        if self.with_log:
            values = values * log_z
        return values

    @property
    def single_valued(self):
        integral = self.exponent.imag == 0.0 and float(self.exponent.real).is_integer()
        return integral and not self.with_log

    @property
    def decay(self):
        return self.a.real

    def pole_distance(self):
        if self.lam == 1 or self.lam == 0:
            return None
        # 1 − λe^z = 0  ⇔  z = −Log λ + 2πik
        base = -np.log(self.lam)
        return float(min(abs(base + 2j * math.pi * k) for k in (-1, 0, 1)))

    def denominator(self, z):
        return 1.0 - self.lam * np.exp(z)


class GammaKernel(HankelIntegrand):
    """z^{−s} e^z (Log z)^k，对应 1/Γ(s) 与 ψ 的表示"""

    def __init__(self, s: complex, with_log: bool):
        self.s = complex(s)
        self.with_log = with_log

    def evaluate(self, z, log_z):
        values = _power(z, log_z, -self.s) * np.exp(z)
        if self.with_log:
            values = values * log_z
        return values

    @property
    def single_valued(self):
        return self.s.imag == 0.0 and float(self.s.real).is_integer() and not self.with_log

    @property
    def decay(self):
        return 1.0


class PsiCombinedKernel(HankelIntegrand):
    """(e^z/z + e^{sz}/(1 − e^z)) Log z"""

    def __init__(self, s: complex):
        self.s = complex(s)

    def evaluate(self, z, log_z):
        return (np.exp(z) / z + np.exp(self.s * z) / (1.0 - np.exp(z))) * log_z

    @property
    def single_valued(self):
        return False

    @property
    def decay(self):
        return min(1.0, self.s.real)


class DifferenceKernel(HankelIntegrand):
    """(e^{az} − e^{bz}) Log z / (1 − e^z)"""

    def __init__(self, a: complex, b: complex):
        self.a = complex(a)
        self.b = complex(b)

    def evaluate(self, z, log_z):
        return (np.exp(self.a * z) - np.exp(self.b * z)) * log_z / (1.0 - np.exp(z))

    @property
    def single_valued(self):
        return False

    @property
    def decay(self):
        return min(self.a.real, self.b.real)


class BarnesKernel(HankelIntegrand):
    """[(a−1)z^{−1} − z^{−2}] e^{az} Log z / (1 − e^z)"""

    def __init__(self, a: complex):
        self.a = complex(a)

    def evaluate(self, z, log_z):
        return ((self.a - 1.0) / z - 1.0 / (z * z)) * np.exp(self.a * z) * log_z / (1.0 - np.exp(z))

    @property
    def single_valued(self):
        return False

    @property
    def decay(self):
        return self.a.real


# ---------------------------------------------------------------------------
# 参数校验与注册表
# ---------------------------------------------------------------------------

def _a(params, key="a"):
    if key not in params:
        raise DomainError(f"缺少参数 {key}")
    return AParam.of(params[key]).value


def _lam(params):
    if "lam" not in params:
        raise DomainError("缺少参数 lam")
    return LambdaParam.of(params["lam"]).value


def _s(params):
    if "s" not in params:
        raise DomainError("缺少参数 s")
    return as_complex(params["s"], "s")


def _n(params, minimum=0):
    if "n" not in params:
        raise DomainError("缺少参数 n")
    return as_order(params["n"], "n", minimum=minimum)


INTEGRAND_REGISTRY: Dict[IntegrandTag, Callable[[Dict[str, Any]], HankelIntegrand]] = {}


def register_integrand(tag: IntegrandTag):
    """注册被积函数构造器"""
    def decorator(builder):
        INTEGRAND_REGISTRY[IntegrandTag(tag)] = builder
        return builder
    return decorator


@register_integrand(IntegrandTag.I_OF_S)
@register_integrand(IntegrandTag.ZETA_CONT)
def _build_i_of_s(params):
    return ZetaKernel(_s(params) - 1.0, _a(params), with_log=False)


@register_integrand(IntegrandTag.ZETA_NEG)
def _build_zeta_neg(params):
    return ZetaKernel(-(_n(params) + 1), _a(params), with_log=False)


@register_integrand(IntegrandTag.ZETA_POS)
def _build_zeta_pos(params):
    return ZetaKernel(_n(params, minimum=1), _a(params), with_log=True)


@register_integrand(IntegrandTag.G_FAMILY)
def _build_g_family(params):
    return ZetaKernel(-(_n(params) + 1), _a(params), with_log=True)


@register_integrand(IntegrandTag.PSI_PLUS_GAMMA)
def _build_psi_plus_gamma(params):
    return ZetaKernel(0, _a(params), with_log=True)


@register_integrand(IntegrandTag.LOG_GAMMA_REP)
def _build_log_gamma_rep(params):
    return ZetaKernel(-1, _a(params), with_log=True)


@register_integrand(IntegrandTag.ZETA_PRIME_NEG1)
def _build_zeta_prime_neg1(params):
    return ZetaKernel(-2, _a(params), with_log=True)


@register_integrand(IntegrandTag.INV_GAMMA)
def _build_inv_gamma(params):
    return GammaKernel(_s(params), with_log=False)


@register_integrand(IntegrandTag.PSI_DIRECT)
def _build_psi_direct(params):
    s = _s(params)
    if not s.real > 0.0:
        raise DomainError(f"psi_direct 要求 Re(s) > 0，实际 s={s}")
    return GammaKernel(s, with_log=True)


@register_integrand(IntegrandTag.GAMMA_CONST)
def _build_gamma_const(params):
    return GammaKernel(1.0, with_log=True)


@register_integrand(IntegrandTag.PSI_COMBINED)
def _build_psi_combined(params):
    s = _s(params)
    if not s.real > 0.0:
        raise DomainError(f"psi_combined 要求 Re(s) > 0，实际 s={s}")
    return PsiCombinedKernel(s)


@register_integrand(IntegrandTag.PSI_DIFFERENCE)
def _build_psi_difference(params):
    return DifferenceKernel(_a(params), _a(params, "b"))


@register_integrand(IntegrandTag.LOG_G)
def _build_log_g(params):
    return BarnesKernel(_a(params))


@register_integrand(IntegrandTag.PHI_CONT)
def _build_phi_cont(params):
    return ZetaKernel(_s(params) - 1.0, _a(params), with_log=False, lam=_lam(params))


@register_integrand(IntegrandTag.PHI_ONE)
def _build_phi_one(params):
    return ZetaKernel(0, _a(params), with_log=True, lam=_lam(params))


@register_integrand(IntegrandTag.PHI_DERIV)
def _build_phi_deriv(params):
    return ZetaKernel(-(_n(params) + 1), _a(params), with_log=True, lam=_lam(params))


@register_integrand(IntegrandTag.PHI_POS)
def _build_phi_pos(params):
    return ZetaKernel(_n(params), _a(params), with_log=True, lam=_lam(params))


@dataclass(frozen=True)
class IntegrandKind:
    """
    被积函数种类：标签加参数

    Attributes:
        tag: 标签
        params: 参数（s 或 n、a、lam、b，按种类需要）
    """
    tag: IntegrandTag
    params: Dict[str, Any] = field(default_factory=dict, hash=False, compare=True)

    def __post_init__(self):
        try:
            object.__setattr__(self, 'tag', IntegrandTag(self.tag))
        except ValueError:
            raise DomainError(f"未知的被积函数标签: {self.tag!r}")

    def build(self) -> HankelIntegrand:
        """按注册表构造被积函数，同时校验参数"""
        return INTEGRAND_REGISTRY[self.tag](dict(self.params))


def available_tags() -> List[str]:
    return sorted(tag.value for tag in INTEGRAND_REGISTRY)
