# special_core - 基础特殊函数与组合多项式

from hankelzeta.special_core.combinatorics import (
    BERNOULLI_MAX_ORDER, STIRLING_MAX_ORDER, bernoulli_number, bernoulli_poly, binomial,
    geometric_poly, stirling2,
)
from hankelzeta.special_core.constants import Constants, constants
from hankelzeta.special_core.g_family import GFamilyValue, barnes_log_g, barnes_log_g_poly, barnes_poly_p, g
from hankelzeta.special_core.gamma_functions import (
    LOG_SQRT_2PI, digamma, digamma_difference, euler_gamma, gamma, harmonic_number, log_gamma,
    polygamma, psi_int,
)
from hankelzeta.special_core.hurwitz import (
    EulerMaclaurinParams, hurwitz_zeta, hurwitz_zeta_adiff, hurwitz_zeta_sderiv, zeta_neg_int,
)

__all__ = [
    'BERNOULLI_MAX_ORDER', 'STIRLING_MAX_ORDER', 'LOG_SQRT_2PI',
    'Constants', 'EulerMaclaurinParams', 'GFamilyValue',
    'barnes_log_g', 'barnes_log_g_poly', 'barnes_poly_p', 'bernoulli_number', 'bernoulli_poly',
    'binomial', 'constants', 'digamma', 'digamma_difference', 'euler_gamma', 'g', 'gamma',
    'geometric_poly', 'harmonic_number', 'hurwitz_zeta', 'hurwitz_zeta_adiff',
    'hurwitz_zeta_sderiv', 'log_gamma', 'polygamma', 'psi_int', 'stirling2', 'zeta_neg_int',
]
