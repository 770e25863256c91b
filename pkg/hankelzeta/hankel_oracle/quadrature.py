# hankel_oracle - 实轴与线段上的自适应求积
# 基于 QUADPACK（scipy.integrate.quad），复值被积函数按实部与虚部分别积分

import logging
import warnings
from typing import Callable, Optional

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from hankelzeta.domain import EvalResult, Method, as_complex
from hankelzeta.errors import ConvergenceError

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_LIMIT = 200

# 误差估计超过容差的该倍数时视为不收敛
FAILURE_FACTOR = 1e4


def _quad_part(func, lo, hi, tol, limit):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        value, err = quad(func, lo, hi, epsabs=tol, epsrel=tol, limit=limit)
    for w in caught:
        logger.debug("quad 在 [%g, %g] 上: %s", lo, hi, w.message)
    return value, err


def _is_real_valued(f, probes):
    return all(complex(f(x)).imag == 0.0 for x in probes)


def _integrate(f, lo, hi, tol, limit, real_valued):
    re, re_err = _quad_part(lambda x: complex(f(x)).real, lo, hi, tol, limit)
    im, im_err = 0.0, 0.0
    if not real_valued:
        im, im_err = _quad_part(lambda x: complex(f(x)).imag, lo, hi, tol, limit)
    return complex(re, im), re_err + im_err


def _finish(value, err, tol, label):
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise ConvergenceError(f"{label}: 积分结果不是有限数")
    if err > FAILURE_FACTOR * tol * max(1.0, abs(value)):
        raise ConvergenceError(f"{label}: 误差估计 {err:.3e} 超过容差 {tol:.1e}")
    return EvalResult(value, err, Method.QUADRATURE)


def real_axis_quadrature(f: Callable[[float], complex], tol: float = DEFAULT_TOL,
                         limit: int = DEFAULT_LIMIT, real_valued: Optional[bool] = None) -> EvalResult:
    """
    ∫₀^∞ f(t) dt

    在 t=1 处拆分：[0,1] 上允许对数型端点奇异，[1,∞) 由 QUADPACK 的无穷区间变换处理。

    Args:
        f: 被积函数，接受实数返回（复）数
        tol: 绝对与相对容差
        limit: 每段的最大子区间数
        real_valued: f 是否为实值；None 时取样判断

    Returns:
        result: EvalResult（method 为 quadrature）
    """
    if real_valued is None:
        real_valued = _is_real_valued(f, (0.37, 1.0, 2.9))
    head, head_err = _integrate(f, 0.0, 1.0, tol, limit, real_valued)
    tail, tail_err = _integrate(f, 1.0, np.inf, tol, limit, real_valued)
    return _finish(head + tail, head_err + tail_err, tol, "real_axis_quadrature")


def segment_quadrature(f: Callable[[complex], complex], t, tol: float = DEFAULT_TOL,
                       limit: int = DEFAULT_LIMIT, real_valued: Optional[bool] = None) -> EvalResult:
    """
    沿直线段 [0, t] 的积分 ∫₀ᵗ f(s) ds = t ∫₀¹ f(τt) dτ

    Args:
        f: 被积函数
        t: 积分上限（复数时沿线段积分）
        tol: 容差
        limit: 最大子区间数
        real_valued: f 在线段上是否为实值

    Returns:
        result: EvalResult
    """
    t = as_complex(t, "t")
    if t == 0:
        return EvalResult(0j, 0.0, Method.QUADRATURE)
    if t.imag == 0.0 and t.real > 0.0:
        upper = t.real
        g = lambda x: f(x)
    else:
        upper = 1.0
        g = lambda x: f(x * t) * t
    if real_valued is None:
        real_valued = _is_real_valued(g, (0.31 * upper, 0.77 * upper))
    value, err = _integrate(g, 0.0, upper, tol, limit, real_valued)
    return _finish(value, err, tol, "segment_quadrature")
