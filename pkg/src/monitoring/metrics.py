"""
metrics.py - Process resource metrics for toolkit runs
"""

import time
from typing import Dict, Any, List
import logging

import psutil

# Configure logging
logger = logging.getLogger(__name__)


class MetricsCollector:
    """
    Samples memory and CPU time of the running process
    """

    def __init__(self):
        """Initialize the metrics collector"""
        self.process = psutil.Process()
        self.samples: List[Dict[str, Any]] = []
        self.peak_rss = 0

    def collect_process_metrics(self, label: str = "sample") -> Dict[str, Any]:
        """
        Take one sample of the current process

        Args:
            label (str): name stored with the sample

        Returns:
            dict: resident memory, CPU times and thread count
        """
        try:
            with self.process.oneshot():
                memory = self.process.memory_info()
                cpu = self.process.cpu_times()
                threads = self.process.num_threads()
        except psutil.Error as e:
            logger.error(f"Failed to collect process metrics: {str(e)}")
            raise

        self.peak_rss = max(self.peak_rss, memory.rss)
        sample = {
            'label': label,
            'timestamp': time.time(),
            'rss_bytes': memory.rss,
            'cpu_user_seconds': cpu.user,
            'cpu_system_seconds': cpu.system,
            'threads': threads
        }
        self.samples.append(sample)
        return sample

    def get_performance_stats(self) -> Dict[str, Any]:
        """
        Summary over all samples taken so far

        Returns:
            dict: sample count, peak memory and the last sample
        """
        return {
            'sample_count': len(self.samples),
            'peak_rss_bytes': self.peak_rss,
            'last_sample': self.samples[-1] if self.samples else None
        }


# Main instance for system use
metrics_collector = MetricsCollector()
