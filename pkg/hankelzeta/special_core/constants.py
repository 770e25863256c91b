# special_core - 数学常数

import logging
from functools import lru_cache
from typing import NamedTuple

from hankelzeta.special_core.gamma_functions import LOG_SQRT_2PI, euler_gamma
from hankelzeta.special_core.hurwitz import hurwitz_zeta_sderiv

logger = logging.getLogger(__name__)


class Constants(NamedTuple):
    """γ、ln√(2π) 与 Glaisher-Kinkelin 常数的对数 ln A"""
    gamma: float
    log_sqrt_2pi: float
    log_glaisher: float


@lru_cache(maxsize=None)
def constants() -> Constants:
    """
    计算常数记录

    γ 取 −ψ(1)，ln A 取 1/12 − ζ′(−1, 1)，都由本包自身的算法得到。
    """
    log_glaisher = 1.0 / 12.0 - hurwitz_zeta_sderiv(-1, 1).value.real
    record = Constants(gamma=euler_gamma(), log_sqrt_2pi=LOG_SQRT_2PI, log_glaisher=log_glaisher)
    logger.debug("常数: %s", record)
    return record
