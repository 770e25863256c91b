# hankelzeta - 公共数据类型

import enum
import math
import numbers
import sys
from dataclasses import dataclass
from typing import Union

from hankelzeta.errors import DomainError, ConvergenceError

# 复数标量即 Python 的 complex
ComplexScalar = complex
Number = Union[int, float, complex]

DBL_EPS = sys.float_info.epsilon


class Method(str, enum.Enum):
    """EvalResult 所走的计算路径"""
    SERIES = "series"
    EULER_MACLAURIN = "euler_maclaurin"
    CONTOUR = "contour"
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class EvalResult:
    """
    数值结果

    Attributes:
        value: 计算值
        abs_err: 绝对误差估计（非负）
        method: 计算路径
    """
    value: complex
    abs_err: float
    method: Method

    def __post_init__(self):
        value = complex(self.value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ConvergenceError(f"计算结果不是有限数: {value}")
        object.__setattr__(self, 'value', value)
        abs_err = float(self.abs_err)
        if not abs_err >= 0.0:
            raise ConvergenceError(f"误差估计无效: {abs_err}")
        object.__setattr__(self, 'abs_err', abs_err)
        object.__setattr__(self, 'method', Method(self.method))

    @classmethod
    def closed_form(cls, value, terms=1):
        """闭式结果，误差按舍入量级估计"""
        value = complex(value)
        return cls(value, 8 * DBL_EPS * terms * max(1.0, abs(value)), Method.CLOSED_FORM)

    @property
    def real(self):
        return self.value.real

    def as_dict(self):
        return {
            'value_re': self.value.real,
            'value_im': self.value.imag,
            'abs_err': self.abs_err,
            'method': self.method.value,
        }


def as_complex(x, name="x"):
    """把数值参数转换为有限的 complex"""
    if isinstance(x, (AParam, LambdaParam)):
        x = x.value
    try:
        z = complex(x)
    except (TypeError, ValueError):
        raise DomainError(f"参数 {name} 不是数值: {x!r}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"参数 {name} 必须是有限数: {x!r}")
    return z


def as_order(n, name="n", minimum=0):
    """校验整数阶"""
    if isinstance(n, float) and n.is_integer():
        n = int(n)
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise DomainError(f"{name} 必须是整数，实际为 {n!r}")
    n = int(n)
    if n < minimum:
        raise DomainError(f"{name} 必须 ≥ {minimum}，实际为 {n}")
    return n


def is_nonpositive_integer(z):
    """z 是否为 0, -1, -2, ..."""
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


@dataclass(frozen=True)
class AParam:
    """参数 a，要求 Re(a) > 0"""
    value: complex

    def __post_init__(self):
        value = as_complex(self.value, "a")
        if not value.real > 0.0:
            raise DomainError(f"参数 a 需满足 Re(a) > 0，实际为 {value}")
        object.__setattr__(self, 'value', value)

    @classmethod
    def of(cls, a):
        return a if isinstance(a, AParam) else cls(a)


@dataclass(frozen=True)
class LambdaParam:
    """
    参数 λ，要求 |λ| ≤ 1 且 λ ≠ 1

    负整数点闭式与 Φ′ₛ 闭式还要求 |λ| < 1，由各运算自行校验（见 require_inside）。
    """
    value: complex

    def __post_init__(self):
        value = as_complex(self.value, "lambda")
        if value == 1:
            raise DomainError("λ = 1 时应使用 Hurwitz zeta（hurwitz_zeta）")
        if abs(value) > 1.0 + 4 * DBL_EPS:
            raise DomainError(f"参数 λ 需满足 |λ| ≤ 1，实际 |λ| = {abs(value)}")
        object.__setattr__(self, 'value', value)

    @classmethod
    def of(cls, lam):
        return lam if isinstance(lam, LambdaParam) else cls(lam)

    @property
    def on_unit_circle(self):
        return abs(abs(self.value) - 1.0) <= 4 * DBL_EPS

    def require_inside(self, operation):
        """校验 |λ| < 1"""
        if self.on_unit_circle or abs(self.value) >= 1.0:
            raise DomainError(f"{operation} 要求 |λ| < 1，实际 |λ| = {abs(self.value)}")
        return self.value
