"""
decorators.py - Performance decorators for the tensor Kleene algebra toolkit
"""

import time
from functools import wraps
from typing import Callable, Any
import logging

# Configure logging
logger = logging.getLogger(__name__)


def performance_monitor(func: Callable) -> Callable:
    """
    Decorator to monitor function execution performance

    Timings go to the module logger and to the shared PerformanceLogger.

    Args:
        func (Callable): Function to decorate

    Returns:
        Callable: Wrapped function with performance monitoring
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        from src.monitoring.logger import performance_logger

        start_time = time.perf_counter()

        try:
            result = func(*args, **kwargs)
            execution_time = time.perf_counter() - start_time
            logger.debug(f"Function '{func.__name__}' executed in {execution_time:.4f}s")
            performance_logger.log_operation(func.__name__, execution_time, "success")
            return result

        except Exception as e:
            execution_time = time.perf_counter() - start_time
            logger.error(f"Function '{func.__name__}' failed after {execution_time:.4f}s: {str(e)}")
            performance_logger.log_operation(func.__name__, execution_time, "error", error=str(e))
            raise

    return wrapper
