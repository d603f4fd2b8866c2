import time

import psutil


class RunMetrics:
    """Wall time and resident memory of the current process over one run."""

    def __init__(self):
        self.process = psutil.Process()
        self.start_time = time.perf_counter()
        self.peak_rss_mb = self._rss_mb()

    def _rss_mb(self) -> float:
        try:
            return self.process.memory_info().rss / 1024 / 1024
        except psutil.Error:
            return 0.0

    def sample(self) -> float:
        rss = self._rss_mb()
        self.peak_rss_mb = max(self.peak_rss_mb, rss)
        return rss

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.start_time) * 1000.0
