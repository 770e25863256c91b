# lerch - Lerch 超越函数及其在负整数点的闭式

from hankelzeta.lerch.l_function import (
    LMethod, SDerivMethod, l_derivative, l_function, l_integral, lambda_derivative_operator,
    lerch_phi_sderiv_neg,
)
from hankelzeta.lerch.lerch_phi import lerch_phi, lerch_phi_neg, polylog_check

__all__ = [
    'LMethod', 'SDerivMethod', 'l_derivative', 'l_function', 'l_integral',
    'lambda_derivative_operator', 'lerch_phi', 'lerch_phi_neg', 'lerch_phi_sderiv_neg',
    'polylog_check',
]
