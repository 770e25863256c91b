# hankelzeta - 求值目标与预言机注册表
# 命令行的 eval / sweep / oracle 通过名称查找这里的条目

import cmath
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from hankelzeta.domain import EvalResult, Method
from hankelzeta.errors import DomainError, UnknownIdentifierError
from hankelzeta.hankel_oracle import (
    hankel_barnes, hankel_gamma_family, hankel_lerch_family, hankel_zeta_family,
)
from hankelzeta.integral_eval import (
    MomentQuery, g_integral_rule, log_g_moment, log_gamma_integral_m0, log_gamma_moment,
    negative_polygamma, psi_moment,
)
from hankelzeta.lerch import l_function, lerch_phi, lerch_phi_neg, lerch_phi_sderiv_neg
from hankelzeta.series_eval import SeriesQuery, lerch_series_closed, s_closed, series_bruteforce, t_closed
from hankelzeta.special_core import (
    barnes_log_g, barnes_log_g_poly, constants, digamma, digamma_difference, euler_gamma, g, gamma,
    hurwitz_zeta, hurwitz_zeta_adiff, hurwitz_zeta_sderiv, log_gamma, polygamma, psi_int,
    zeta_neg_int,
)

# 参数类型：整数阶、复数或字符串选项
INT_PARAMS = frozenset({"n", "m", "p", "k"})
STR_PARAMS = frozenset({"method", "form"})


def param_kind(name: str) -> str:
    if name in INT_PARAMS:
        return "int"
    if name in STR_PARAMS:
        return "str"
    return "complex"


def bind_params(name: str, required: Tuple[str, ...], params: Dict[str, Any],
                defaults: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """校验参数名并补全默认值"""
    defaults = defaults or {}
    unknown = set(params) - set(required) - set(defaults)
    if unknown:
        raise DomainError(f"{name} 不接受参数: {', '.join(sorted(unknown))}；"
                          f"需要 {', '.join(required) or '无'}")
    missing = [p for p in required if p not in params]
    if missing:
        raise DomainError(f"{name} 缺少参数: {', '.join(missing)}")
    bound = dict(defaults)
    bound.update(params)
    return bound


@dataclass(frozen=True)
class Target:
    """
    可求值的目标

    Attributes:
        name: 目标名称
        params: 必需参数
        func: func(engine, **params)，返回 EvalResult 或复数
        description: 说明
        defaults: 可选参数及默认值
    """
    name: str
    params: Tuple[str, ...]
    func: Callable[..., Any]
    description: str
    defaults: Dict[str, Any] = field(default_factory=dict)

    def bind(self, params: Dict[str, Any]) -> Dict[str, Any]:
        return bind_params(self.name, self.params, params, self.defaults)


def as_result(value, terms: int = 1) -> EvalResult:
    """把闭式返回的复数包装为 EvalResult"""
    if isinstance(value, EvalResult):
        return value
    return EvalResult.closed_form(value, terms)


EVAL_TARGETS: Dict[str, Target] = {}
ORACLE_TARGETS: Dict[str, "OracleTarget"] = {}


def _target(name, params, description, **defaults):
    def decorator(func):
        EVAL_TARGETS[name] = Target(name, tuple(params), func, description, defaults)
        return func
    return decorator


def _g_result(value) -> EvalResult:
    closed = EvalResult.closed_form(value.value)
    return EvalResult(value.value, max(value.abs_err, closed.abs_err), Method.EULER_MACLAURIN)


# ---------------------------------------------------------------------------
# special_core
# ---------------------------------------------------------------------------

@_target("hurwitz_zeta", ("s", "a"), "Hurwitz zeta ζ(s,a)")
def _hurwitz_zeta(engine, s, a):
    return hurwitz_zeta(s, a, engine.em_params)


@_target("hurwitz_zeta_sderiv", ("s", "a"), "∂ζ(s,a)/∂s")
def _hurwitz_zeta_sderiv(engine, s, a):
    return hurwitz_zeta_sderiv(s, a, engine.em_params)


@_target("hurwitz_zeta_adiff", ("n", "s", "a"), "∂ⁿζ(s,a)/∂aⁿ")
def _hurwitz_zeta_adiff(engine, n, s, a):
    return hurwitz_zeta_adiff(n, s, a, engine.em_params)


@_target("zeta_neg_int", ("n", "a"), "ζ(−n,a) = −B_{n+1}(a)/(n+1)")
def _zeta_neg_int(engine, n, a):
    return as_result(zeta_neg_int(n, a), n + 2)


@_target("digamma", ("s",), "ψ(s)")
def _digamma(engine, s):
    return digamma(s)


@_target("log_gamma", ("s",), "log Γ(s)（主支）")
def _log_gamma(engine, s):
    return log_gamma(s)


@_target("polygamma", ("m", "s"), "ψ^{(m)}(s)")
def _polygamma(engine, m, s):
    return polygamma(m, s)


@_target("digamma_difference", ("a", "b"), "ψ(a) − ψ(b)")
def _digamma_difference(engine, a, b):
    return digamma_difference(a, b)


@_target("euler_gamma", (), "Euler 常数 γ")
def _euler_gamma(engine):
    return as_result(euler_gamma())


@_target("log_glaisher", (), "ln A（Glaisher-Kinkelin 常数）")
def _log_glaisher(engine):
    return as_result(constants().log_glaisher)


@_target("g", ("n", "a"), "g(n,a) = ζ′(−n,a) + ψ(n+1)ζ(−n,a)")
def _g(engine, n, a):
    return _g_result(g(n, a))


@_target("barnes_log_g", ("a",), "log G(a)")
def _barnes_log_g(engine, a):
    return barnes_log_g(a)


@_target("barnes_log_g_poly", ("a",), "log G(a) 的多项式形式")
def _barnes_log_g_poly(engine, a):
    return barnes_log_g_poly(a)


# ---------------------------------------------------------------------------
# lerch
# ---------------------------------------------------------------------------

@_target("lerch_phi", ("lam", "s", "a"), "Φ(λ,s,a)")
def _lerch_phi(engine, lam, s, a):
    return lerch_phi(lam, s, a, term_budget=engine.lerch_budget, slow_threshold=engine.slow_threshold)


@_target("lerch_phi_neg", ("lam", "m", "a"), "Φ(λ,−m,a)")
def _lerch_phi_neg(engine, lam, m, a):
    return as_result(lerch_phi_neg(lam, m, a), m + 1)


@_target("lerch_phi_sderiv_neg", ("lam", "m", "a"), "Φ′ₛ(λ,−m,a)", method="prop2")
def _lerch_phi_sderiv_neg(engine, lam, m, a, method):
    return lerch_phi_sderiv_neg(lam, m, a, method)


@_target("l_function", ("lam", "a"), "l(λ,a) = −Σ λⁿ log(n+a)", method="series")
def _l_function(engine, lam, a, method):
    return l_function(lam, a, method)


# ---------------------------------------------------------------------------
# series_eval
# ---------------------------------------------------------------------------

@_target("S", ("t", "a", "p"), "S(t,a,p) 闭式")
def _s(engine, t, a, p):
    return as_result(s_closed(SeriesQuery(t, a, p)), p + 2)


@_target("T", ("t", "a", "p"), "T(t,a,p) 闭式")
def _t(engine, t, a, p):
    return as_result(t_closed(SeriesQuery(t, a, p)), p + 2)


@_target("lerch_series", ("lam", "t", "a", "p"), "Σ Φ(λ,n+1,a) t^{n+p}/(n+p) 闭式", method="prop2")
def _lerch_series(engine, lam, t, a, p, method):
    return as_result(lerch_series_closed(SeriesQuery(t, a, p, lam), method), 2 * p + 2)


@_target("S_bruteforce", ("t", "a", "p"), "S(t,a,p) 逐项求和")
def _s_bruteforce(engine, t, a, p):
    return series_bruteforce("S", SeriesQuery(t, a, p), engine.series_config)


@_target("T_bruteforce", ("t", "a", "p"), "T(t,a,p) 逐项求和")
def _t_bruteforce(engine, t, a, p):
    return series_bruteforce("T", SeriesQuery(t, a, p), engine.series_config)


@_target("lerch_series_bruteforce", ("lam", "t", "a", "p"), "Lerch 级数逐项求和")
def _lerch_series_bruteforce(engine, lam, t, a, p):
    return series_bruteforce("LERCH", SeriesQuery(t, a, p, lam), engine.series_config)


# ---------------------------------------------------------------------------
# integral_eval
# ---------------------------------------------------------------------------

@_target("log_gamma_moment", ("t", "a"), "∫₀ᵗ sᵐ log Γ(a+s) ds", m=0)
def _log_gamma_moment(engine, t, a, m):
    return as_result(log_gamma_moment(MomentQuery(t, a, m)), m + 4)


@_target("log_gamma_integral_m0", ("t", "a"), "∫₀ᵗ log Γ(a+s) ds 的三种形式", form="g_form")
def _log_gamma_integral_m0(engine, t, a, form):
    return as_result(log_gamma_integral_m0(MomentQuery(t, a, 0), form), 4)


@_target("psi_moment", ("t", "a", "p"), "∫₀ᵗ s^{p−1} ψ(a−s) ds")
def _psi_moment(engine, t, a, p):
    return as_result(psi_moment(t, a, p), p + 3)


@_target("negative_polygamma", ("k", "t"), "负阶多伽马函数 Ψ^{(−k)}(t)")
def _negative_polygamma(engine, k, t):
    return as_result(negative_polygamma(k, t), 4 * k)


@_target("g_integral_rule", ("m", "a", "t"), "∫₀ᵗ g(m−1,a+s) ds")
def _g_integral_rule(engine, m, a, t):
    return as_result(g_integral_rule(m, a, t, verify=False), 2)


@_target("log_g_moment", ("t", "a"), "∫₀ᵗ sᵐ log G(a+s) ds", m=0)
def _log_g_moment(engine, t, a, m):
    return as_result(log_g_moment(MomentQuery(t, a, m)), 2 * m + 6)


def lookup_target(name: str) -> Target:
    if name not in EVAL_TARGETS:
        raise UnknownIdentifierError(f"未知的求值目标 {name!r}，可选: {', '.join(available_targets())}")
    return EVAL_TARGETS[name]


def available_targets() -> List[str]:
    return sorted(EVAL_TARGETS)


# ---------------------------------------------------------------------------
# 围道预言机：围道表示与对应的级数 / Euler-Maclaurin 结果
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleTarget:
    """
    Attributes:
        name: 表示名称
        params: 必需参数
        contour: contour(spec, **params) -> EvalResult
        reference: reference(engine, **params) -> EvalResult 或复数
    """
    name: str
    params: Tuple[str, ...]
    contour: Callable[..., EvalResult]
    reference: Callable[..., Any]

    def bind(self, params: Dict[str, Any]) -> Dict[str, Any]:
        return bind_params(self.name, self.params, params)


def _oracle(name, params, contour, reference):
    ORACLE_TARGETS[name] = OracleTarget(name, tuple(params), contour, reference)


def _i_of_s_reference(engine, s, a):
    s = complex(s)
    if s.imag == 0.0 and s.real > 1.0 and float(s.real).is_integer():
        return 0j
    zeta = hurwitz_zeta(s, a, engine.em_params).value
    return zeta * gamma(s) * cmath.sin(math.pi * s) / math.pi


_oracle("zeta_cont", ("s", "a"),
        lambda spec, s, a: hankel_zeta_family("cont", s, a, spec),
        lambda engine, s, a: hurwitz_zeta(s, a, engine.em_params))
_oracle("zeta_neg", ("n", "a"),
        lambda spec, n, a: hankel_zeta_family("neg", n, a, spec),
        lambda engine, n, a: zeta_neg_int(n, a))
_oracle("zeta_pos", ("n", "a"),
        lambda spec, n, a: hankel_zeta_family("pos", n, a, spec),
        lambda engine, n, a: hurwitz_zeta(n + 1, a, engine.em_params))
_oracle("zeta_pos_via_sin", ("s", "a"),
        lambda spec, s, a: hankel_zeta_family("pos_via_sin", s, a, spec),
        lambda engine, s, a: hurwitz_zeta(s, a, engine.em_params))
_oracle("i_of_s", ("s", "a"),
        lambda spec, s, a: hankel_zeta_family("i_of_s", s, a, spec),
        _i_of_s_reference)
_oracle("g_family", ("n", "a"),
        lambda spec, n, a: hankel_zeta_family("g", n, a, spec),
        lambda engine, n, a: _g_result(g(n, a)))
_oracle("zeta_prime_neg1", ("a",),
        lambda spec, a: hankel_zeta_family("zprime_neg1", None, a, spec),
        lambda engine, a: hurwitz_zeta_sderiv(-1, a, engine.em_params))
_oracle("psi_combined", ("s",),
        lambda spec, s: hankel_gamma_family("psi_combined", s, spec),
        lambda engine, s: digamma(s))
_oracle("psi_direct", ("s",),
        lambda spec, s: hankel_gamma_family("psi_direct", s, spec),
        lambda engine, s: digamma(s))
_oracle("inv_gamma", ("s",),
        lambda spec, s: hankel_gamma_family("inv_gamma", s, spec),
        lambda engine, s: 1.0 / gamma(s))
_oracle("gamma_const", (),
        lambda spec: hankel_gamma_family("gamma_const", spec=spec),
        lambda engine: euler_gamma())
_oracle("log_gamma_rep", ("a",),
        lambda spec, a: hankel_gamma_family("log_gamma", a, spec),
        lambda engine, a: log_gamma(a))
_oracle("psi_plus_gamma", ("a",),
        lambda spec, a: hankel_gamma_family("psi_plus_gamma", a, spec),
        lambda engine, a: digamma(a).value + euler_gamma())
_oracle("psi_difference", ("a", "b"),
        lambda spec, a, b: hankel_gamma_family("psi_difference", a, spec, b=b),
        lambda engine, a, b: digamma_difference(a, b))
_oracle("phi_cont", ("lam", "s", "a"),
        lambda spec, lam, s, a: hankel_lerch_family("phi_cont", lam, s, a, spec),
        lambda engine, lam, s, a: _lerch_phi(engine, lam, s, a))
_oracle("phi_one", ("lam", "a"),
        lambda spec, lam, a: hankel_lerch_family("phi_one", lam, None, a, spec),
        lambda engine, lam, a: _lerch_phi(engine, lam, 1, a))
_oracle("phi_deriv", ("lam", "n", "a"),
        lambda spec, lam, n, a: hankel_lerch_family("phi_deriv", lam, n, a, spec),
        lambda engine, lam, n, a: (lerch_phi_sderiv_neg(lam, n, a).value
                                   + psi_int(n) * lerch_phi_neg(lam, n, a)))
_oracle("phi_pos", ("lam", "n", "a"),
        lambda spec, lam, n, a: hankel_lerch_family("phi_pos", lam, n, a, spec),
        lambda engine, lam, n, a: _lerch_phi(engine, lam, n + 1, a))
_oracle("log_G", ("a",),
        lambda spec, a: hankel_barnes(a, spec),
        lambda engine, a: barnes_log_g(a))


def lookup_oracle(name: str) -> OracleTarget:
    if name not in ORACLE_TARGETS:
        raise UnknownIdentifierError(f"未知的预言机 {name!r}，可选: {', '.join(available_oracles())}")
    return ORACLE_TARGETS[name]


def available_oracles() -> List[str]:
    return sorted(ORACLE_TARGETS)
