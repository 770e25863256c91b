# statistics - 性能监控

from hankelzeta.statistics.performance_monitor import PerformanceMonitor

__all__ = ['PerformanceMonitor']
