# integral_eval - log Γ 矩积分、负阶多伽马函数与 g 积分法则

from hankelzeta.integral_eval.moments import (
    M0Form, MomentQuery, g_integral_rule, integration_rule_73, log_g_moment,
    log_g_moment_quadrature, log_gamma_integral_m0, log_gamma_moment, log_gamma_moment_quadrature,
    negative_polygamma, negative_polygamma_quadrature, psi_moment, psi_moment_quadrature,
)

__all__ = [
    'M0Form', 'MomentQuery', 'g_integral_rule', 'integration_rule_73', 'log_g_moment',
    'log_g_moment_quadrature', 'log_gamma_integral_m0', 'log_gamma_moment',
    'log_gamma_moment_quadrature', 'negative_polygamma', 'negative_polygamma_quadrature',
    'psi_moment', 'psi_moment_quadrature',
]
