# hankelzeta - 异常层次

class HankelZetaError(Exception):
    """所有hankelzeta异常的基类"""


class DomainError(HankelZetaError, ValueError):
    """参数不在运算的定义域内"""


class PoleError(DomainError):
    """在函数的极点处求值"""


class OrderTooLargeError(DomainError):
    """阶数超过缓存表（Bernoulli、Stirling）的上限"""


class ConvergenceError(HankelZetaError, ArithmeticError):
    """数值过程未能收敛"""


class BudgetExhaustedError(ConvergenceError):
    """
    级数项数预算耗尽

    Attributes:
        partial_sum: 耗尽时的最佳部分和
        bound: 剩余尾项的上界
        terms: 已求和的项数
    """

    def __init__(self, message, partial_sum=None, bound=None, terms=None):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.bound = bound
        self.terms = terms


class SlowConvergenceError(BudgetExhaustedError):
    """|λ| 接近 1 时直接级数收敛过慢"""


class PoleProximityError(ConvergenceError):
    """围道节点离被积函数的极点过近"""


class ConsistencyError(HankelZetaError, AssertionError):
    """内部恒等式校验失败"""


class UnknownIdentifierError(HankelZetaError, LookupError):
    """未知的求值目标、恒等式编号或预言机名称"""
