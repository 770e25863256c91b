# special_core - Bernoulli数、Stirling数与几何多项式
# 精确有理数表一次性构建并缓存，多线程首次访问安全

import logging
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Tuple

from hankelzeta.domain import as_complex, as_order
from hankelzeta.errors import OrderTooLargeError

logger = logging.getLogger(__name__)

# 双精度下 Bernoulli 数的缓存上限
BERNOULLI_MAX_ORDER = 60

# Stirling 数与几何多项式的阶数上限
STIRLING_MAX_ORDER = 40

# 二项式系数按整数精确计算的上限
BINOMIAL_MAX_ORDER = 30

_bernoulli_lock = threading.Lock()
_bernoulli_table: Tuple[Fraction, ...] = ()


def _akiyama_tanigawa(n_max: int) -> Tuple[Fraction, ...]:
    row = [Fraction(0)] * (n_max + 1)
    numbers = []
    for m in range(n_max + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        numbers.append(row[0])
    # 该递推给出 B_1 = +1/2，这里统一用 B_1 = -1/2
    if n_max >= 1:
        numbers[1] = -numbers[1]
    return tuple(numbers)


def bernoulli_numbers() -> Tuple[Fraction, ...]:
    """返回 B_0 .. B_60 的精确值"""
    global _bernoulli_table
    if not _bernoulli_table:
        with _bernoulli_lock:
            if not _bernoulli_table:
                _bernoulli_table = _akiyama_tanigawa(BERNOULLI_MAX_ORDER)
                logger.debug("Bernoulli 数表已构建，阶数上限 %d", BERNOULLI_MAX_ORDER)
    return _bernoulli_table


def bernoulli_number(n: int) -> Fraction:
    n = as_order(n, "n")
    if n > BERNOULLI_MAX_ORDER:
        raise OrderTooLargeError(f"Bernoulli 数阶数 n={n} 超过上限 {BERNOULLI_MAX_ORDER}")
    return bernoulli_numbers()[n]


@lru_cache(maxsize=None)
def _bernoulli_poly_coefficients(n: int) -> Tuple[Fraction, ...]:
    # x^j 的系数 C(n,j) B_{n-j}，按升幂排列
    table = bernoulli_numbers()
    return tuple(comb(n, j) * table[n - j] for j in range(n + 1))


def bernoulli_poly(n: int, x) -> complex:
    """
    Bernoulli 多项式 B_n(x)

    Args:
        n: 阶数，0 ≤ n ≤ 60
        x: 自变量

    Returns:
        value: B_n(x)
    """
    n = as_order(n, "n")
    if n > BERNOULLI_MAX_ORDER:
        raise OrderTooLargeError(f"Bernoulli 多项式阶数 n={n} 超过上限 {BERNOULLI_MAX_ORDER}")
    x = as_complex(x, "x")
    # 系数随 n 迅速增大，浮点 Horner 在 n≈40 时已严重抵消；按有理数精确求值后只舍入一次
    x_re, x_im = Fraction(x.real), Fraction(x.imag)
    re, im = Fraction(0), Fraction(0)
    for c in reversed(_bernoulli_poly_coefficients(n)):
        re, im = re * x_re - im * x_im + c, re * x_im + im * x_re
    return complex(float(re), float(im))


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        below = prev[k] if k < n else 0
        row[k] = k * below + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """
    第二类 Stirling 数 {n k}（精确整数）

    n ≤ 40 时 {n k} 与 k!{n k} 都能在 double 中无溢出地表示；
    超过上限时报错而不是返回溢出值。
    """
    n = as_order(n, "n")
    k = as_order(k, "k")
    if n > STIRLING_MAX_ORDER:
        raise OrderTooLargeError(f"Stirling 数阶数 n={n} 超过上限 {STIRLING_MAX_ORDER}")
    if k > n:
        return 0
    return _stirling2_row(n)[k]


@lru_cache(maxsize=None)
def _geometric_poly_coefficients(n: int) -> Tuple[float, ...]:
    row = _stirling2_row(n)
    return tuple(float(row[k] * factorial(k)) for k in range(n + 1))


def geometric_poly(n: int, x) -> complex:
    """
    几何多项式 ω_n(x) = Σ_k {n k} k! x^k

    Args:
        n: 阶数，0 ≤ n ≤ 40
        x: 自变量

    Returns:
        value: ω_n(x)
    """
    n = as_order(n, "n")
    if n > STIRLING_MAX_ORDER:
        raise OrderTooLargeError(f"几何多项式阶数 n={n} 超过上限 {STIRLING_MAX_ORDER}")
    x = as_complex(x, "x")
    value = 0j
    for c in reversed(_geometric_poly_coefficients(n)):
        value = value * x + c
    return value


def binomial(n: int, k: int) -> int:
    """精确二项式系数 C(n, k)，n ≤ 30"""
    n = as_order(n, "n")
    k = as_order(k, "k")
    if n > BINOMIAL_MAX_ORDER:
        raise OrderTooLargeError(f"二项式系数阶数 n={n} 超过上限 {BINOMIAL_MAX_ORDER}")
    return comb(n, k)
