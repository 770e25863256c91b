# check_suites - 恒等式校验套件
# 每个恒等式在固定网格上比较两条独立的计算路径

import cmath
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple

import numpy as np

from hankelzeta.errors import HankelZetaError, UnknownIdentifierError
from hankelzeta.hankel_oracle import (
    INTEGRAND_REGISTRY, ContourSpec, IntegrandKind, IntegrandTag, contour_integrate, contour_pieces,
    hankel_barnes, hankel_gamma_family, hankel_lerch_family, hankel_zeta_family,
    real_axis_quadrature, segment_quadrature, with_epsilon,
)
from hankelzeta.integral_eval import (
    MomentQuery, g_integral_rule, log_g_moment, log_g_moment_quadrature, log_gamma_integral_m0,
    log_gamma_moment, log_gamma_moment_quadrature, negative_polygamma,
    negative_polygamma_quadrature, psi_moment, psi_moment_quadrature,
)
from hankelzeta.lerch import (
    l_function, lerch_phi, lerch_phi_neg, lerch_phi_sderiv_neg, polylog_check,
)
from hankelzeta.series_eval import (
    SeriesConfig, SeriesQuery, lemma4_antiderivative, lerch_series_closed, s_closed,
    s_closed_log_gamma_form, s_t_derivative, series_bruteforce, t_closed,
)
from hankelzeta.special_core import (
    EulerMaclaurinParams, LOG_SQRT_2PI, barnes_log_g, barnes_log_g_poly, digamma,
    digamma_difference, euler_gamma, g, gamma, geometric_poly, hurwitz_zeta, hurwitz_zeta_sderiv,
    log_gamma, psi_int, zeta_neg_int,
)
from hankelzeta.statistics import PerformanceMonitor

logger = logging.getLogger(__name__)

# 标准参数网格
A_GRID = (1.0, 1.5, 2.5, 1.0 + 0.5j)
ORACLE_A = (0.5, 1.0, 1.5, 2.5, 1.0 + 0.5j)
LAMBDAS = (0.5, -0.5, 0.3)
LAMBDAS_THM3 = (0.5, -0.5, 0.3, 0.2 + 0.2j)

# 数值常数的参考值，独立于本包的计算
EULER_GAMMA = 0.57721566490153286

# 有限差分步长
FD_STEP = 1e-5


def _t_values(a) -> Tuple[float, ...]:
    return (0.1, 0.25, 0.45 * complex(a).real)


@dataclass(frozen=True)
class CheckContext:
    """
    校验所用的数值参数

    Attributes:
        contour_spec: 围道参数
        series_config: 暴力求和配置
        em_params: Euler-Maclaurin 参数
        quad_tol: 数值积分容差
    """
    contour_spec: ContourSpec = field(default_factory=ContourSpec)
    series_config: SeriesConfig = field(default_factory=SeriesConfig)
    em_params: EulerMaclaurinParams = field(default_factory=EulerMaclaurinParams)
    quad_tol: float = 1e-12


class Probe(NamedTuple):
    """网格上的一个点：标签与返回 (计算值, 参考值) 的函数"""
    label: str
    compute: Callable[[], Tuple[complex, complex]]


@dataclass(frozen=True)
class Identity:
    identity: str
    description: str
    tolerance: float
    absolute: bool
    grid: Callable[[CheckContext], List[Probe]]


@dataclass
class CheckReport:
    """
    单个恒等式的校验报告

    passed 当且仅当所有网格点都算出结果且 max_deviation ≤ tolerance。
    """
    identity: str
    description: str
    grid_size: int
    max_deviation: float
    tolerance: float
    passed: bool
    wall_time: float
    worst_point: str = ""
    error: Optional[str] = None

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)


IDENTITY_REGISTRY: Dict[str, Identity] = {}


def register_identity(identity: str, description: str, tolerance: float, absolute: bool = False):
    """注册恒等式网格；absolute 为 True 时比较绝对偏差，否则比较 |x−y|/(1+|y|)"""
    def decorator(grid):
        IDENTITY_REGISTRY[identity] = Identity(identity, description, tolerance, absolute, grid)
        return grid
    return decorator


def available_identities() -> List[str]:
    return list(IDENTITY_REGISTRY)


# ---------------------------------------------------------------------------
# 级数族
# ---------------------------------------------------------------------------

def _series_grid(ctx, family, closed, orders, a_values=A_GRID, lambdas=(None,)):
    probes = []
    for lam in lambdas:
        for a in a_values:
            for t in _t_values(a):
                for p in orders:
                    def compute(t=t, a=a, p=p, lam=lam):
                        q = SeriesQuery(t, a, p, lam)
                        return closed(q), series_bruteforce(family, q, ctx.series_config).value
                    probes.append(Probe(f"lam={lam} t={t:g} a={a} p={p}", compute))
    return probes


@register_identity("thm1", "S(t,a,p) 闭式与逐项求和", 1e-9)
def _thm1(ctx):
    return _series_grid(ctx, "S", s_closed, (1, 2, 3, 4))


@register_identity("eq4.3", "S(t,a,0) = ψ(a) − ψ(a−t) 与逐项求和", 1e-9)
def _eq43(ctx):
    return _series_grid(ctx, "S", s_closed, (0,))


@register_identity("eq4.7", "S(t,a,1) 与 tψ(a) + log Γ(a−t) − log Γ(a)", 1e-12)
def _eq47(ctx):
    probes = []
    for a in A_GRID:
        for t in _t_values(a):
            probes.append(Probe(f"t={t:g} a={a}", lambda t=t, a=a: (
                s_closed(SeriesQuery(t, a, 1)), s_closed_log_gamma_form(t, a))))
    return probes


@register_identity("s-derivative", "∂S/∂t = t^{p−1}(ψ(a) − ψ(a−t)) 的中心差分", 1e-6, absolute=True)
def _s_derivative(ctx):
    probes = []
    for a in A_GRID:
        for t in _t_values(a):
            for p in (1, 2, 3):
                def compute(t=t, a=a, p=p):
                    forward = s_closed(SeriesQuery(t + FD_STEP, a, p))
                    backward = s_closed(SeriesQuery(t - FD_STEP, a, p))
                    return (forward - backward) / (2 * FD_STEP), s_t_derivative(SeriesQuery(t, a, p))
                probes.append(Probe(f"t={t:g} a={a} p={p}", compute))
    return probes


@register_identity("eq4.8", "∫₀ᵗ y^{p−1}(1 − e^{−zy}) dy 的闭式与数值积分", 1e-10)
def _eq48(ctx):
    probes = []
    for p in range(1, 6):
        for z in (1.0, 2.5, 1.0 + 2.0j):
            for t in (0.5, 1.5):
                def compute(p=p, z=z, t=t):
                    check = segment_quadrature(lambda y: y ** (p - 1) * (1.0 - cmath.exp(-z * y)), t,
                                               tol=ctx.quad_tol)
                    return lemma4_antiderivative(p, t, z), check.value
                probes.append(Probe(f"p={p} z={z} t={t:g}", compute))
    return probes


@register_identity("thm2", "T(t,a,p) 闭式与逐项求和", 1e-9)
def _thm2(ctx):
    return _series_grid(ctx, "T", t_closed, (1, 2, 3))


@register_identity("thm3", "Lerch 级数闭式与逐项求和（求和从 n = 0 开始）", 1e-9)
def _thm3(ctx):
    return _series_grid(ctx, "LERCH", lerch_series_closed, (1, 2, 3), lambdas=LAMBDAS_THM3)


@register_identity("eq5.10", "Σ Φ(λ,n+1,a) tⁿ = Φ(λ,1,a−t)", 1e-9)
def _eq510(ctx):
    return _series_grid(ctx, "LERCH", lerch_series_closed, (0,), lambdas=LAMBDAS_THM3)


# ---------------------------------------------------------------------------
# 矩积分
# ---------------------------------------------------------------------------

@register_identity("thm4", "∫₀ᵗ sᵐ log Γ(a+s) ds 闭式与数值积分", 1e-8)
def _thm4(ctx):
    probes = []
    for a in A_GRID:
        for t in _t_values(a):
            for m in range(4):
                def compute(t=t, a=a, m=m):
                    q = MomentQuery(t, a, m)
                    return log_gamma_moment(q), log_gamma_moment_quadrature(q).value
                probes.append(Probe(f"t={t:g} a={a} m={m}", compute))
    return probes


@register_identity("eq7.7", "m = 0 时 g 形式、ζ′ 形式与 Barnes 形式一致", 1e-9)
def _eq77(ctx):
    probes = []
    for a in A_GRID:
        for t in _t_values(a):
            for form in ("zeta_form", "barnes_form"):
                def compute(t=t, a=a, form=form):
                    q = MomentQuery(t, a, 0)
                    return log_gamma_integral_m0(q, form), log_gamma_integral_m0(q, "g_form")
                probes.append(Probe(f"t={t:g} a={a} {form}", compute))
    return probes


@register_identity("eq7.2", "∫₀ᵗ s^{p−1} ψ(a−s) ds = ψ(a)tᵖ/p − S(t,a,p)", 1e-8)
def _eq72(ctx):
    probes = []
    for a in A_GRID:
        for t in _t_values(a):
            for p in (1, 2, 3):
                probes.append(Probe(f"t={t:g} a={a} p={p}", lambda t=t, a=a, p=p: (
                    psi_moment(t, a, p), psi_moment_quadrature(t, a, p).value)))
    return probes


@register_identity("negative-polygamma", "Ψ^{(−k)}(t) 闭式与卷积积分", 1e-8)
def _negative_polygamma(ctx):
    probes = []
    for k in (2, 3, 4):
        for t in (0.5, 1.0, 2.5):
            probes.append(Probe(f"k={k} t={t:g}", lambda k=k, t=t: (
                negative_polygamma(k, t), negative_polygamma_quadrature(k, t).value)))
    return probes


@register_identity("eq2.10", "∫₀ᵗ g(m−1,a+s) ds = [g(m,a+t) − g(m,a)]/m", 1e-8)
def _eq210(ctx):
    probes = []
    for m in (1, 2, 3):
        for a in (1.0, 2.5):
            for t in (0.5, 1.0 + 0.5j):
                def compute(m=m, a=a, t=t):
                    check = segment_quadrature(lambda s: g(m - 1, a + s).value, t, tol=ctx.quad_tol)
                    return g_integral_rule(m, a, t, verify=False), check.value
                probes.append(Probe(f"m={m} a={a} t={t}", compute))
    return probes


@register_identity("eq2.9", "∂g(m,a)/∂a = m·g(m−1,a) 的中心差分", 1e-6, absolute=True)
def _eq29(ctx):
    probes = []
    for m in (1, 2, 3):
        for a in (1.0, 2.5):
            def compute(m=m, a=a):
                derivative = (g(m, a + FD_STEP).value - g(m, a - FD_STEP).value) / (2 * FD_STEP)
                return derivative, m * g(m - 1, a).value
            probes.append(Probe(f"m={m} a={a}", compute))
    return probes


@register_identity("log-g-moment", "∫₀ᵗ sᵐ log G(a+s) ds 闭式与数值积分", 1e-8)
def _log_g_moment(ctx):
    probes = []
    for a in (1.0, 2.5, 1.0 + 0.5j):
        for t in (0.5, 1.25):
            for m in range(3):
                def compute(t=t, a=a, m=m):
                    q = MomentQuery(t, a, m)
                    return log_g_moment(q), log_g_moment_quadrature(q).value
                probes.append(Probe(f"t={t:g} a={a} m={m}", compute))
    return probes


# ---------------------------------------------------------------------------
# Lerch 与几何多项式
# ---------------------------------------------------------------------------

BRUTE_TERMS = 10000


def _brute_lerch(lam, a, m, with_log):
    n = np.arange(BRUTE_TERMS, dtype=float)
    base = n + a
    terms = np.power(complex(lam), n) * base ** m
    if with_log:
        return -complex(np.sum(terms * np.log(base)))
    return complex(np.sum(terms))


@register_identity("eq6.2", "Σ kᵐ λᵏ = ω_m(λ/(1−λ))/(1−λ)", 1e-10)
def _eq62(ctx):
    probes = []
    for m in range(9):
        for lam in (0.5, -0.5, 0.9, 0.3j):
            def compute(m=m, lam=lam):
                k = np.arange(BRUTE_TERMS, dtype=float)
                brute = complex(np.sum(k ** m * np.power(complex(lam), k)))
                return geometric_poly(m, lam / (1.0 - lam)) / (1.0 - lam), brute
            probes.append(Probe(f"m={m} lam={lam}", compute))
    return probes


@register_identity("eq6.3", "Φ(λ,−m,a) 闭式与 Σ λⁿ(n+a)ᵐ", 1e-10)
def _eq63(ctx):
    probes = []
    for m in range(7):
        for lam in LAMBDAS:
            for a in (1.0, 2.5):
                probes.append(Probe(f"m={m} lam={lam} a={a}", lambda m=m, lam=lam, a=a: (
                    lerch_phi_neg(lam, m, a), _brute_lerch(lam, a, m, with_log=False))))
    return probes


@register_identity("eq6.5", "Φ′ₛ(λ,−m,a) 与 −Σ λⁿ(n+a)ᵐ log(n+a)", 1e-8)
def _eq65(ctx):
    probes = []
    for m in range(7):
        for lam in LAMBDAS:
            for a in (1.0, 2.5):
                probes.append(Probe(f"m={m} lam={lam} a={a}", lambda m=m, lam=lam, a=a: (
                    lerch_phi_sderiv_neg(lam, m, a, "prop2").value, _brute_lerch(lam, a, m, with_log=True))))
    return probes


@register_identity("prop3", "Φ′ₛ(λ,−m,a) 积分路径与逐项求导路径一致", 1e-8)
def _prop3(ctx):
    probes = []
    for m in range(7):
        for lam in LAMBDAS:
            for a in (1.0, 2.5):
                probes.append(Probe(f"m={m} lam={lam} a={a}", lambda m=m, lam=lam, a=a: (
                    lerch_phi_sderiv_neg(lam, m, a, "prop3").value,
                    lerch_phi_sderiv_neg(lam, m, a, "prop2").value)))
    return probes


@register_identity("lemma5", "l(λ,a) 的级数与积分表示一致", 1e-8)
def _lemma5(ctx):
    probes = []
    for lam in LAMBDAS + (0.2 + 0.2j,):
        for a in (1.0, 2.0, 2.5):
            probes.append(Probe(f"lam={lam} a={a}", lambda lam=lam, a=a: (
                l_function(lam, a, "integral").value, l_function(lam, a, "series").value)))
    return probes


@register_identity("lerch-neg-int", "Φ(λ,−m,a) 闭式与直接级数", 1e-10)
def _lerch_neg_int(ctx):
    probes = []
    for m in range(5):
        for lam in LAMBDAS:
            for a in (0.5, 1.0, 2.5):
                probes.append(Probe(f"m={m} lam={lam} a={a}", lambda m=m, lam=lam, a=a: (
                    lerch_phi_neg(lam, m, a), lerch_phi(lam, -m, a).value)))
    return probes


@register_identity("shift-phi", "Φ(λ,s,a) − λΦ(λ,s,a+1) = a^{−s}", 1e-10)
def _shift_phi(ctx):
    probes = []
    for lam in LAMBDAS:
        for s in (0.5, 2.0, 3.0):
            for a in (0.5, 1.0, 2.5):
                def compute(lam=lam, s=s, a=a):
                    left = lerch_phi(lam, s, a).value - lam * lerch_phi(lam, s, a + 1).value
                    return left, cmath.exp(-s * cmath.log(a))
                probes.append(Probe(f"lam={lam} s={s} a={a}", compute))
    return probes


@register_identity("polylog", "λΦ(λ,s,1) 与多重对数级数", 1e-12)
def _polylog(ctx):
    probes = []
    for lam in (0.5, -0.5, 0.3j, 0.2 + 0.2j):
        for s in (2.0, 2.5, 3.0):
            probes.append(Probe(f"lam={lam} s={s}", lambda lam=lam, s=s: polylog_check(lam, s)))
    return probes


# ---------------------------------------------------------------------------
# 特殊函数
# ---------------------------------------------------------------------------

@register_identity("shift-zeta", "ζ(s,a) − ζ(s,a+1) = a^{−s}", 1e-10)
def _shift_zeta(ctx):
    probes = []
    for s in (-15.5, -3.5, -1.0, 0.5, 2.0, 3.0 + 1.0j):
        for a in (0.5, 1.0, 1.5, 2.5, 1.0 + 1.0j):
            def compute(s=s, a=a):
                left = (hurwitz_zeta(s, a, ctx.em_params).value
                        - hurwitz_zeta(s, a + 1, ctx.em_params).value)
                return left, cmath.exp(-s * cmath.log(a))
            probes.append(Probe(f"s={s} a={a}", compute))
    return probes


@register_identity("zeta-neg-int", "ζ(−n,a) = −B_{n+1}(a)/(n+1)", 1e-10)
def _zeta_neg_int(ctx):
    probes = []
    for n in range(41):
        for a in (0.5, 1.0, 1.5, 2.5, 1.0 + 1.0j):
            probes.append(Probe(f"n={n} a={a}", lambda n=n, a=a: (
                hurwitz_zeta(-n, a, ctx.em_params).value, zeta_neg_int(n, a))))
    return probes


@register_identity("zeta-half", "ζ(s,½) = (2ˢ − 1)ζ(s)", 1e-10)
def _zeta_half(ctx):
    probes = []
    for s in (-2.5, -9.5, -20.5, -40.5, -55.5, -12.0 + 2.0j):
        probes.append(Probe(f"s={s}", lambda s=s: (
            hurwitz_zeta(s, 0.5, ctx.em_params).value,
            (2.0 ** s - 1.0) * hurwitz_zeta(s, 1.0, ctx.em_params).value)))
    return probes


@register_identity("psi-int", "ψ(n+1) = −γ + H_n", 1e-12)
def _psi_int(ctx):
    return [Probe(f"n={n}", lambda n=n: (psi_int(n), digamma(n + 1).value)) for n in range(31)]


@register_identity("reflection", "Γ(s)Γ(1−s) sin(πs)/π = 1", 1e-12)
def _reflection(ctx):
    probes = []
    for s in np.linspace(0.05, 0.95, 19):
        s = float(s)
        probes.append(Probe(f"s={s:.2f}", lambda s=s: (
            gamma(s) * gamma(1.0 - s) * math.sin(math.pi * s) / math.pi, 1.0)))
    return probes


@register_identity("barnes-recurrence", "log G(a+1) = log Γ(a) + log G(a)", 1e-9)
def _barnes_recurrence(ctx):
    return [Probe(f"a={a}", lambda a=a: (
        barnes_log_g(a + 1).value, barnes_log_g(a).value + log_gamma(a).value)) for a in ORACLE_A]


@register_identity("eq7.11", "log G 的多项式形式与 ζ′ 形式一致", 1e-8)
def _eq711(ctx):
    return [Probe(f"a={a}", lambda a=a: (barnes_log_g_poly(a).value, barnes_log_g(a).value))
            for a in ORACLE_A + (3.5, 0.25 + 1.0j)]


@register_identity("spot-values", "特殊值", 1e-10)
def _spot_values(ctx):
    em = ctx.em_params
    probes = [
        Probe("zeta(-1,1)", lambda: (hurwitz_zeta(-1, 1, em).value, -1.0 / 12.0)),
        Probe("zeta'(0,1)", lambda: (hurwitz_zeta_sderiv(0, 1, em).value, -LOG_SQRT_2PI)),
        Probe("psi(1)", lambda: (digamma(1).value, -EULER_GAMMA)),
        Probe("psi(2)", lambda: (digamma(2).value, 1.0 - EULER_GAMMA)),
        Probe("gamma", lambda: (euler_gamma(), EULER_GAMMA)),
        Probe("log G(1)", lambda: (barnes_log_g(1).value, 0.0)),
        Probe("log G(2)", lambda: (barnes_log_g(2).value, 0.0)),
        Probe("zeta(2)", lambda: (hurwitz_zeta(2, 1, em).value, math.pi ** 2 / 6.0)),
    ]
    for a in (0.5, 2.5, 1.0 + 1.0j):
        probes.append(Probe(f"zeta(0,{a})", lambda a=a: (hurwitz_zeta(0, a, em).value, 0.5 - a)))
    return probes


# ---------------------------------------------------------------------------
# 围道预言机
# ---------------------------------------------------------------------------

def _oracle_probes(spec, a):
    def zeta(selector, s_or_n):
        return hankel_zeta_family(selector, s_or_n, a, spec).value

    def gam(selector, **kwargs):
        return hankel_gamma_family(selector, a, spec, **kwargs).value

    def lerch(selector, lam, s_or_n):
        return hankel_lerch_family(selector, lam, s_or_n, a, spec).value

    probes = []
    for s in (-2.5, 0.5):
        probes.append(Probe(f"cont s={s} a={a}", lambda s=s: (zeta("cont", s), hurwitz_zeta(s, a).value)))
    for n in (0, 2):
        probes.append(Probe(f"neg n={n} a={a}", lambda n=n: (zeta("neg", n), zeta_neg_int(n, a))))
    for n in (1, 2):
        probes.append(Probe(f"pos n={n} a={a}", lambda n=n: (zeta("pos", n), hurwitz_zeta(n + 1, a).value)))
    for n in (0, 1, 2):
        probes.append(Probe(f"g n={n} a={a}", lambda n=n: (zeta("g", n), g(n, a).value)))
    probes += [
        Probe(f"zprime_neg1 a={a}", lambda: (zeta("zprime_neg1", None), hurwitz_zeta_sderiv(-1, a).value)),
        Probe(f"pos_via_sin s=2.5 a={a}", lambda: (zeta("pos_via_sin", 2.5), hurwitz_zeta(2.5, a).value)),
        Probe(f"psi_combined a={a}", lambda: (gam("psi_combined"), digamma(a).value)),
        Probe(f"psi_direct a={a}", lambda: (gam("psi_direct"), digamma(a).value)),
        Probe(f"inv_gamma a={a}", lambda: (gam("inv_gamma"), 1.0 / gamma(a))),
        Probe(f"log_gamma a={a}", lambda: (gam("log_gamma"), log_gamma(a).value)),
        Probe(f"psi_plus_gamma a={a}", lambda: (gam("psi_plus_gamma"), digamma(a).value + euler_gamma())),
        Probe(f"psi_difference a={a}", lambda: (
            gam("psi_difference", b=a + 0.75), digamma_difference(a, a + 0.75).value)),
        Probe(f"log_G a={a}", lambda: (hankel_barnes(a, spec).value, barnes_log_g(a).value)),
    ]
    for lam in (0.5, -0.5):
        probes += [
            Probe(f"phi_cont lam={lam} a={a}", lambda lam=lam: (
                lerch("phi_cont", lam, 0.5), lerch_phi(lam, 0.5, a).value)),
            Probe(f"phi_one lam={lam} a={a}", lambda lam=lam: (
                lerch("phi_one", lam, None), lerch_phi(lam, 1, a).value)),
            Probe(f"phi_pos lam={lam} a={a}", lambda lam=lam: (
                lerch("phi_pos", lam, 1), lerch_phi(lam, 2, a).value)),
        ]
        for n in (0, 1):
            probes.append(Probe(f"phi_deriv n={n} lam={lam} a={a}", lambda lam=lam, n=n: (
                lerch("phi_deriv", lam, n),
                lerch_phi_sderiv_neg(lam, n, a).value + psi_int(n) * lerch_phi_neg(lam, n, a))))
    return probes


@register_identity("oracle", "Hankel 围道表示与级数 / Euler-Maclaurin 路径一致", 1e-7)
def _oracle(ctx):
    spec = ctx.contour_spec
    probes = [Probe("gamma_const", lambda: (hankel_gamma_family("gamma_const", spec=spec).value,
                                            euler_gamma()))]
    for a in ORACLE_A:
        probes += _oracle_probes(spec, a)
    return probes


@register_identity("eq2.2", "围道 I(s) 与 sin(πs)/π 乘实轴积分", 1e-8)
def _eq22(ctx):
    probes = []
    for s in (2.5, 3.5):
        for a in (1.0, 1.5):
            def compute(s=s, a=a):
                real_axis = real_axis_quadrature(
                    lambda x: x ** (s - 1.0) * math.exp(-a * x) / -math.expm1(-x), tol=ctx.quad_tol)
                contour = hankel_zeta_family("i_of_s", s, a, ctx.contour_spec).value
                return contour, math.sin(math.pi * s) / math.pi * real_axis.value
            probes.append(Probe(f"s={s} a={a}", compute))
    return probes


@register_identity("i-of-m", "正整数 m > 1 处 I(m) = 0", 1e-10, absolute=True)
def _i_of_m(ctx):
    probes = []
    for m in (2, 3, 4, 5):
        for a in (1.0, 1.5):
            probes.append(Probe(f"m={m} a={a}", lambda m=m, a=a: (
                hankel_zeta_family("i_of_s", m, a, ctx.contour_spec).value, 0.0)))
    return probes


@register_identity("branch-cancel", "无 Log z 的整数幂被积函数两条射线相互抵消", 1e-12, absolute=True)
def _branch_cancel(ctx):
    kinds = [IntegrandKind(IntegrandTag.ZETA_NEG, {"n": n, "a": a}) for n in (0, 1, 2) for a in (1.0, 1.5)]
    kinds += [IntegrandKind(IntegrandTag.INV_GAMMA, {"s": s}) for s in (1, 2, 3)]
    return [Probe(f"{kind.tag.value} {kind.params}", lambda kind=kind: (
        contour_pieces(kind, ctx.contour_spec).ray, 0.0)) for kind in kinds]


# 每个已注册被积函数在 ε 扫描中使用的参数；λ 取 −0.5，分母极点离原点约 3.2
EPSILON_PARAMS: Dict[IntegrandTag, Dict[str, object]] = {
    IntegrandTag.I_OF_S: {"s": 2.5, "a": 1.0},
    IntegrandTag.ZETA_CONT: {"s": -1.5 + 1j, "a": 1.5},
    IntegrandTag.ZETA_NEG: {"n": 1, "a": 1.5},
    IntegrandTag.ZETA_POS: {"n": 2, "a": 1.5},
    IntegrandTag.G_FAMILY: {"n": 1, "a": 1.0},
    IntegrandTag.PSI_PLUS_GAMMA: {"a": 1.5},
    IntegrandTag.INV_GAMMA: {"s": 2.5},
    IntegrandTag.LOG_GAMMA_REP: {"a": 2.5},
    IntegrandTag.PHI_CONT: {"lam": -0.5, "s": 0.5, "a": 1.0},
    IntegrandTag.PHI_ONE: {"lam": -0.5, "a": 1.0},
    IntegrandTag.PHI_DERIV: {"lam": -0.5, "n": 1, "a": 1.0},
    IntegrandTag.ZETA_PRIME_NEG1: {"a": 1.5},
    IntegrandTag.LOG_G: {"a": 2.5},
    IntegrandTag.PSI_COMBINED: {"s": 1.5},
    IntegrandTag.PSI_DIRECT: {"s": 1.5},
    IntegrandTag.GAMMA_CONST: {},
    IntegrandTag.PSI_DIFFERENCE: {"a": 1.5, "b": 2.5},
    IntegrandTag.PHI_POS: {"lam": -0.5, "n": 1, "a": 1.5},
}

# 围道形状不允许改变 ε 的种类；目前所有种类的圆周都只受 ε < 2π 与极点间距约束
EPSILON_FIXED: frozenset = frozenset()


def epsilon_kinds() -> List[IntegrandKind]:
    """ε 扫描覆盖的被积函数种类，按注册表遍历"""
    kinds = []
    for tag in INTEGRAND_REGISTRY:
        if tag in EPSILON_FIXED:
            continue
        if tag not in EPSILON_PARAMS:
            raise UnknownIdentifierError(f"被积函数 {tag.value} 没有 ε 扫描参数")
        kinds.append(IntegrandKind(tag, EPSILON_PARAMS[tag]))
    return kinds


@register_identity("eps-independence", "围道积分与圆周半径 ε 无关", 1e-8)
def _eps_independence(ctx):
    base = ctx.contour_spec
    probes = []
    for kind in epsilon_kinds():
        reference = lru_cache(maxsize=1)(
            lambda kind=kind: contour_integrate(kind, with_epsilon(base, 1.0)).value)
        for epsilon in (0.5, 3.0):
            def compute(kind=kind, epsilon=epsilon, reference=reference):
                return contour_integrate(kind, with_epsilon(base, epsilon)).value, reference()
            probes.append(Probe(f"{kind.tag.value} eps={epsilon}", compute))
    return probes


# ---------------------------------------------------------------------------
# 运行
# ---------------------------------------------------------------------------

def resolve_identities(names: Iterable[str]) -> List[str]:
    """
    展开 all 并校验编号

    Args:
        names: 恒等式编号列表

    Returns:
        identities: 去重后保持顺序的编号
    """
    resolved: List[str] = []
    for name in names:
        if name == "all":
            candidates = available_identities()
        elif name in IDENTITY_REGISTRY:
            candidates = [name]
        else:
            raise UnknownIdentifierError(f"未知的恒等式编号 {name!r}，可选: all, {', '.join(available_identities())}")
        resolved += [c for c in candidates if c not in resolved]
    return resolved


def _evaluate(probe: Probe) -> Tuple[Optional[complex], Optional[complex], Optional[str]]:
    try:
        value, reference = probe.compute()
        return complex(value), complex(reference), None
    except HankelZetaError as e:
        logger.warning("网格点 %s 计算失败: %s", probe.label, e)
        return None, None, f"{probe.label}: {type(e).__name__}: {e}"


def run_check(identity: str, context: CheckContext, executor: Optional[ThreadPoolExecutor] = None,
              monitor: Optional[PerformanceMonitor] = None) -> CheckReport:
    """
    在标准网格上运行一个恒等式

    Args:
        identity: 恒等式编号
        context: 数值参数
        executor: 线程池（可选），网格点按原顺序收集
        monitor: 性能监控器（可选）

    Returns:
        report: CheckReport
    """
    if identity not in IDENTITY_REGISTRY:
        raise UnknownIdentifierError(f"未知的恒等式编号 {identity!r}")
    entry = IDENTITY_REGISTRY[identity]
    start = time.perf_counter()
    probes = entry.grid(context)
    results = list(executor.map(_evaluate, probes)) if executor else [_evaluate(p) for p in probes]

    max_deviation = 0.0
    worst = ""
    error = None
    for probe, (value, reference, failure) in zip(probes, results):
        if failure is not None:
            error = error or failure
            max_deviation = math.inf
            worst = probe.label
            continue
        deviation = abs(value - reference)
        if not entry.absolute:
            deviation /= 1.0 + abs(reference)
        if not deviation <= max_deviation:
            max_deviation = deviation
            worst = probe.label
    if monitor is not None:
        wall_time = monitor.end_timer(f"check:{identity}", start)
        monitor.update_stats("check_points", len(probes))
    else:
        wall_time = time.perf_counter() - start

    passed = error is None and max_deviation <= entry.tolerance
    log = logger.info if passed else logger.warning
    log("恒等式 %s: %d 点, 最大偏差 %.3e（容差 %.1e）%s", identity, len(probes), max_deviation,
        entry.tolerance, "通过" if passed else "未通过")
    return CheckReport(identity=identity, description=entry.description, grid_size=len(probes),
                       max_deviation=max_deviation, tolerance=entry.tolerance, passed=passed,
                       wall_time=wall_time, worst_point=worst, error=error)


def run_checks(names: Iterable[str], context: Optional[CheckContext] = None, workers: int = 1,
               monitor: Optional[PerformanceMonitor] = None) -> List[CheckReport]:
    """
    依次运行多个恒等式，同一恒等式的网格点可并行

    Args:
        names: 恒等式编号（可含 all）
        context: 数值参数
        workers: 线程数
        monitor: 性能监控器（可选）

    Returns:
        reports: 与输入顺序一致的报告列表
    """
    identities = resolve_identities(names)
    context = context or CheckContext()
    if workers <= 1:
        return [run_check(identity, context, monitor=monitor) for identity in identities]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return [run_check(identity, context, executor, monitor) for identity in identities]
