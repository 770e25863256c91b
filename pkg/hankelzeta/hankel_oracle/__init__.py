# hankel_oracle - Hankel 围道积分预言机

from hankelzeta.hankel_oracle.contour import (
    ContourPieces, ContourSpec, contour_integrate, contour_pieces, with_epsilon,
)
from hankelzeta.hankel_oracle.families import (
    GammaSelector, LerchSelector, OracleConstants, ZetaSelector, hankel_barnes, hankel_barnes_poly,
    hankel_gamma_family, hankel_lerch_family, hankel_zeta_family, oracle_constants,
)
from hankelzeta.hankel_oracle.integrands import (
    HankelIntegrand, INTEGRAND_REGISTRY, IntegrandKind, IntegrandTag, available_tags,
    register_integrand,
)
from hankelzeta.hankel_oracle.quadrature import real_axis_quadrature, segment_quadrature

__all__ = [
    'ContourPieces', 'ContourSpec', 'GammaSelector', 'HankelIntegrand', 'INTEGRAND_REGISTRY',
    'IntegrandKind', 'IntegrandTag', 'LerchSelector', 'OracleConstants', 'ZetaSelector',
    'available_tags', 'contour_integrate', 'contour_pieces', 'hankel_barnes', 'hankel_barnes_poly',
    'hankel_gamma_family', 'hankel_lerch_family', 'hankel_zeta_family', 'oracle_constants',
    'real_axis_quadrature', 'register_integrand', 'segment_quadrature', 'with_epsilon',
]
