from .models import (
    SchoenebergRow, ClassOneRow, ClassThreeRow, ClassFiveRow, ErratumRow, parse_terms, format_terms,
)
from .fixtures import FixtureSet, load_fixtures
from .suites import TablesSuite, IdentitiesSuite
from .runner import SUITES, build_suites, run_suite

__all__ = [
    'SchoenebergRow', 'ClassOneRow', 'ClassThreeRow', 'ClassFiveRow', 'ErratumRow', 'parse_terms',
    'format_terms', 'FixtureSet', 'load_fixtures', 'TablesSuite', 'IdentitiesSuite', 'SUITES',
    'build_suites', 'run_suite',
]
