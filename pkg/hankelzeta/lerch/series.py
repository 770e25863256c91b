# lerch - 带几何权重的级数求和
# 按块向量化求和，直到尾项上界满足相对精度

import logging
from typing import Callable, Tuple

import numpy as np

from hankelzeta.domain import DBL_EPS
from hankelzeta.errors import BudgetExhaustedError, SlowConvergenceError

logger = logging.getLogger(__name__)

CHUNK = 256


def sum_geometric_series(lam: complex,
                         weights: Callable[[np.ndarray], np.ndarray],
                         tail_bound: Callable[[int], float],
                         rel_tol: float,
                         budget: int,
                         slow_threshold: float = 0.95,
                         label: str = "series") -> Tuple[complex, float, int]:
    """
    求和 Σ_{n≥0} λⁿ w(n)

    Args:
        lam: 几何比 λ，|λ| ≤ 1
        weights: 对整数数组 n 返回 w(n) 的函数
        tail_bound: tail_bound(N) 给出 |Σ_{n≥N} λⁿ w(n)| 的上界
        rel_tol: 相对精度
        budget: 项数预算
        slow_threshold: |λ| 超过该值时预算耗尽报 SlowConvergenceError
        label: 日志中的级数名称

    Returns:
        (total, bound, terms): 部分和、尾项上界与项数
    """
    if lam == 0:
        value = complex(weights(np.arange(1))[0])
        return value, 0.0, 1

    log_lam = np.log(complex(lam))
    total = 0j
    scale = 0.0
    start = 0
    bound = float('inf')
    while start < budget:
        n = np.arange(start, min(start + CHUNK, budget))
        terms = np.exp(n * log_lam) * weights(n)
        total += complex(np.sum(terms))
        scale += float(np.sum(np.abs(terms)))
        start = int(n[-1]) + 1
        bound = tail_bound(start)
        if bound <= rel_tol * abs(total) or bound <= DBL_EPS * scale:
            logger.debug("%s: %d 项收敛, 尾项上界 %.3e", label, start, bound)
            return total, bound + 4 * DBL_EPS * scale, start

    message = f"{label}: {budget} 项后尾项上界 {bound:.3e} 仍未满足精度"
    if abs(lam) > slow_threshold:
        raise SlowConvergenceError(message + f"（|λ|={abs(lam):.6g} 接近 1，收敛过慢）",
                                   partial_sum=total, bound=bound, terms=start)
    raise BudgetExhaustedError(message, partial_sum=total, bound=bound, terms=start)
