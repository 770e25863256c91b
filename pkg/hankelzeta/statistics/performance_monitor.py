# statistics - 计算过程的性能监控

import json
import logging
import os
import threading
import time
from collections import defaultdict
from contextlib import contextmanager
from typing import Any, Dict, Optional

import psutil

logger = logging.getLogger(__name__)


class PerformanceMonitor:
    """
    性能监控类，记录各项计算的调用次数、耗时与进程内存

    check 与 sweep 在线程池中并发运行，计数与计时都在锁内更新。
    """

    def __init__(self, stats_file: Optional[str] = None):
        """
        初始化性能监控器

        Args:
            stats_file: 统计信息保存路径（可选）
        """
        self.stats_file = stats_file
        self._lock = threading.Lock()
        self._process = psutil.Process(os.getpid())
        self.stats = {
            'start_time': time.time(),
            'operations': defaultdict(int),
            'timers': defaultdict(list),
            'current_memory': 0.0,
            'peak_memory': 0.0,
        }

    def update_stats(self, operation_name: str, count: int = 1):
        """
        增加操作计数

        Args:
            operation_name: 操作名称
            count: 增量
        """
        with self._lock:
            self.stats['operations'][operation_name] += count

    def start_timer(self, operation_name: str) -> float:
        """
        启动操作计时器

        Args:
            operation_name: 操作名称

        Returns:
            start_time: 开始时间
        """
        return time.perf_counter()

    def end_timer(self, operation_name: str, start_time: float) -> float:
        """
        结束计时并记录耗时，同时采样进程内存

        Args:
            operation_name: 操作名称
            start_time: start_timer 的返回值

        Returns:
            elapsed: 耗时（秒）
        """
        elapsed = time.perf_counter() - start_time
        memory = self.sample_memory()
        with self._lock:
            self.stats['timers'][operation_name].append(elapsed)
            self.stats['operations'][operation_name] += 1
            self.stats['current_memory'] = memory
            self.stats['peak_memory'] = max(self.stats['peak_memory'], memory)
        return elapsed

    @contextmanager
    def timed(self, operation_name: str):
        """以上下文管理器形式计时"""
        start = self.start_timer(operation_name)
        try:
            yield
        finally:
            self.end_timer(operation_name, start)

    def sample_memory(self) -> float:
        """当前进程 RSS（MB）"""
        try:
            return self._process.memory_info().rss / (1024 * 1024)
        except psutil.Error as e:
            logger.warning("读取进程内存失败: %s", e)
            return 0.0

    def get_stats(self) -> Dict[str, Any]:
        """
        获取统计信息

        Returns:
            stats: 统计信息字典
        """
        with self._lock:
            avg_times = {name: sum(times) / len(times) for name, times in self.stats['timers'].items() if times}
            total_times = {name: sum(times) for name, times in self.stats['timers'].items()}
            return {
                'uptime': time.time() - self.stats['start_time'],
                'operations': dict(self.stats['operations']),
                'avg_times': avg_times,
                'total_times': total_times,
                'current_memory': self.stats['current_memory'],
                'peak_memory': self.stats['peak_memory'],
            }

    def save_stats(self):
        """把统计信息写入 stats_file"""
        if not self.stats_file:
            return
        directory = os.path.dirname(self.stats_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(self.stats_file, 'w', encoding='utf-8') as f:
            json.dump(self.get_stats(), f, indent=2, ensure_ascii=False)
        logger.debug("统计信息已保存到 %s", self.stats_file)
