import threading
import time
from abc import ABC, abstractmethod
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from dataclasses_json import dataclass_json

from core.errors import VerificationError
from core.logging.logger import get_module_logger
from core.metrics import RunMetrics
from models.base import CheckStatus

# A check returns a short detail string on success and raises VerificationError on a mismatch
Check = Callable[[], str]


@dataclass_json
@dataclass
class CheckResult:
    name: str
    status: CheckStatus
    detail: str = ""
    elapsed_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED


@dataclass_json
@dataclass
class SuiteReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    passed: bool = True
    elapsed_ms: Optional[float] = None
    peak_rss_mb: Optional[float] = None

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> Optional[CheckResult]:
        failures = self.failures
        return failures[0] if failures else None


class BaseSuite(ABC):
    """Named checks run over a thread pool and reported in declaration order."""

    def __init__(self, name: str, workers: int = 1):
        self.name = name
        self.workers = max(1, workers)
        self.logger = get_module_logger('Verify')
        self.error_count = 0
        self.processing_times = deque(maxlen=100)
        self._lock = threading.Lock()

    @abstractmethod
    def checks(self) -> List[Tuple[str, Check]]:
        pass

    def _run_check(self, name: str, check: Check) -> CheckResult:
        start = time.perf_counter()
        try:
            detail = check() or ""
            status = CheckStatus.PASSED
            self.logger.debug(f"{name}: passed {detail}")
        except VerificationError as e:
            detail = str(e)
            status = CheckStatus.FAILED
            self.logger.error(f"{name}: FAILED: {detail}")
        except Exception as e:
            detail = f"{type(e).__name__}: {e}"
            status = CheckStatus.ERROR
            with self._lock:
                self.error_count += 1
            self.logger.error(f"{name}: error: {detail}", exc_info=True)

        elapsed = (time.perf_counter() - start) * 1000.0
        with self._lock:
            self.processing_times.append(elapsed)
        return CheckResult(name=name, status=status, detail=detail, elapsed_ms=round(elapsed, 3))

    def run(self, deterministic: bool = False) -> SuiteReport:
        metrics = RunMetrics()
        declared = self.checks()
        self.logger.info(f"Running {self.name} suite: {len(declared)} checks on {self.workers} workers")

        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            futures = [pool.submit(self._run_check, name, check) for name, check in declared]
            results = []
            for future in futures:
                results.append(future.result())
                metrics.sample()

        if deterministic:
            for result in results:
                result.elapsed_ms = None

        report = SuiteReport(
            suite=self.name,
            checks=results,
            passed=all(r.passed for r in results),
            elapsed_ms=None if deterministic else round(metrics.elapsed_ms(), 3),
            peak_rss_mb=None if deterministic else round(metrics.peak_rss_mb, 1),
        )
        failed = len(report.failures)
        if failed:
            self.logger.error(f"{self.name} suite: {failed} of {len(results)} checks failed")
        else:
            self.logger.info(f"{self.name} suite: all {len(results)} checks passed")
        return report

    def get_status(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'workers': self.workers,
            'error_count': self.error_count,
            'avg_check_ms': sum(self.processing_times) / len(self.processing_times)
            if self.processing_times else 0,
        }
