"""
logger.py - Operation timing history for the tensor Kleene algebra toolkit
"""

import json
import time
import logging
from datetime import datetime
from typing import Dict, Any, Optional
import threading
from collections import deque

# Configure logging
logger = logging.getLogger(__name__)


class PerformanceLogger:
    """
    Thread-safe history of operation timings
    """

    def __init__(self, max_history: int = 1000):
        """Initialize the performance logger"""
        self.operation_history = deque(maxlen=max_history)
        self.error_log = deque(maxlen=max_history)
        self.system_stats = {
            'start_time': time.time(),
            'total_operations': 0,
            'errors_count': 0
        }

        # Thread safety
        self._lock = threading.Lock()

    def log_operation(self, operation: str, duration: float, status: str = "success",
                      error: Optional[str] = None, **kwargs) -> None:
        """
        Log a timed operation

        Args:
            operation (str): Name of the operation
            duration (float): Execution time in seconds
            status (str): "success" or "error"
            error (Optional[str]): Error message if any
            **kwargs: Additional metadata about the operation
        """
        with self._lock:
            log_entry = {
                'timestamp': time.time(),
                'operation': operation,
                'duration': duration,
                'status': status,
                'metadata': kwargs
            }

            if error:
                log_entry['error'] = error
                self.error_log.append(log_entry)
                self.system_stats['errors_count'] += 1

            self.operation_history.append(log_entry)
            self.system_stats['total_operations'] += 1

            if status == "success":
                logger.info(f"Operation '{operation}' completed in {duration:.4f}s")
            else:
                logger.warning(f"Operation '{operation}' ended with status '{status}' after {duration:.4f}s")

    def get_metrics(self) -> Dict[str, Any]:
        """
        Summary of the recorded history

        Returns:
            Dict with counters, average duration and per-operation counts
        """
        with self._lock:
            durations = [op['duration'] for op in self.operation_history]
            operation_counts: Dict[str, int] = {}
            for op in self.operation_history:
                operation_counts[op['operation']] = operation_counts.get(op['operation'], 0) + 1

            return {
                'system_stats': dict(self.system_stats),
                'uptime_seconds': time.time() - self.system_stats['start_time'],
                'average_operation_duration': sum(durations) / len(durations) if durations else 0.0,
                'operation_counts': operation_counts,
                'recent_errors': list(self.error_log)[-5:]
            }

    def get_operation_stats(self, operation_name: str = None) -> Dict[str, Any]:
        """
        Get statistics for specific operations

        Args:
            operation_name (Optional[str]): Specific operation name or None for all

        Returns:
            Dict with operation statistics
        """
        with self._lock:
            filtered = [op for op in self.operation_history
                        if operation_name is None or op['operation'] == operation_name]
            durations = [op['duration'] for op in filtered]

            if not durations:
                return {
                    'operation': operation_name or "all",
                    'count': 0,
                    'total_time': 0.0,
                    'average_time': 0.0,
                    'min_time': 0.0,
                    'max_time': 0.0
                }

            return {
                'operation': operation_name or "all",
                'count': len(durations),
                'total_time': sum(durations),
                'average_time': sum(durations) / len(durations),
                'min_time': min(durations),
                'max_time': max(durations)
            }

    def export_log(self, filename: str = None) -> str:
        """
        Export the history to JSON

        Args:
            filename (Optional[str]): Output file name

        Returns:
            str: Path to exported file
        """
        with self._lock:
            if not filename:
                filename = f"toolkit_timings_{datetime.now().strftime('%Y%m%d_%H%M%S')}.json"

            export_data = {
                'operation_history': list(self.operation_history),
                'error_log': list(self.error_log),
                'system_stats': self.system_stats,
                'exported_at': time.time()
            }

            try:
                with open(filename, 'w') as f:
                    json.dump(export_data, f, indent=2)
            except Exception as e:
                logger.error(f"Failed to export log: {str(e)}")
                raise

            logger.info(f"Log exported to {filename}")
            return filename

    def clear_logs(self) -> None:
        """Clear all logs and reset statistics"""
        with self._lock:
            self.operation_history.clear()
            self.error_log.clear()
            self.system_stats = {
                'start_time': time.time(),
                'total_operations': 0,
                'errors_count': 0
            }


# Main instance for system use
performance_logger = PerformanceLogger()
