"""
Monitoring package initialization for the tensor Kleene algebra toolkit
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .logger import PerformanceLogger, performance_logger
from .metrics import MetricsCollector, metrics_collector

__all__ = [
    'PerformanceLogger',
    'performance_logger',
    'MetricsCollector',
    'metrics_collector'
]
