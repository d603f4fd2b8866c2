from typing import List, Optional

from core.base import BaseSuite, SuiteReport
from core.config import Settings, resolve_workers
from core.errors import InputError
from core.logging.logger import get_module_logger
from .fixtures import FixtureSet, load_fixtures
from .suites import TablesSuite, IdentitiesSuite

logger = get_module_logger('Verify')

SUITES = ('tables', 'identities', 'all')


def build_suites(name: str, settings: Settings, fixtures: Optional[FixtureSet] = None) -> List[BaseSuite]:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fixtures = fixtures or load_fixtures(settings.fixtures_dir())
    workers = resolve_workers(settings)

    suites: List[BaseSuite] = []
    if name in ('tables', 'all'):
        suites.append(TablesSuite(fixtures, workers))
    if name in ('identities', 'all'):
        suites.append(IdentitiesSuite(fixtures, settings, workers))
    return suites


def run_suite(name: str, settings: Settings, fixtures: Optional[FixtureSet] = None,
              deterministic: bool = False) -> SuiteReport:
    """Run one named suite, or both for 'all', and merge into a single report."""
    reports = [suite.run(deterministic) for suite in build_suites(name, settings, fixtures)]
    if len(reports) == 1:
        return reports[0]

    merged = SuiteReport(
        suite=name,
        checks=[check for report in reports for check in report.checks],
        passed=all(report.passed for report in reports),
    )
    if not deterministic:
        merged.elapsed_ms = round(sum(r.elapsed_ms or 0 for r in reports), 3)
        merged.peak_rss_mb = max(r.peak_rss_mb or 0 for r in reports)
    logger.info(f"suite {name}: {'passed' if merged.passed else 'FAILED'}")
    return merged
