"""
Loader for the printed tables shipped under ``data/fixtures``.

Series cells are sparse ``n:coef`` lists; every exponent up to the row's order
that is not listed has coefficient zero. ``errata.csv`` holds corrections to
printed entries that contradict the lattice counts; they are applied on load.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Type, TypeVar

from pydantic import BaseModel, ValidationError

from core.errors import FixtureError
from core.logging.logger import get_module_logger
from models.forms import QuadForm
from .models import (
    SchoenebergRow, ClassOneRow, ClassThreeRow, ClassFiveRow, ErratumRow, parse_terms,
)

logger = get_module_logger('Verify')

RowT = TypeVar('RowT', bound=BaseModel)

TABLE_FILES = {
    'table1': 'table1_schoeneberg.csv',
    'table2': 'table2_class1.csv',
    'table3': 'table3_class3a.csv',
    'table4': 'table4_class3b.csv',
    'table5': 'table5_class5.csv',
}
ERRATA_FILE = 'errata.csv'


@dataclass
class FixtureSet:
    table1: List[SchoenebergRow] = field(default_factory=list)
    table2: List[ClassOneRow] = field(default_factory=list)
    table3: List[ClassThreeRow] = field(default_factory=list)
    table4: List[ClassThreeRow] = field(default_factory=list)
    table5: List[ClassFiveRow] = field(default_factory=list)
    errata: List[ErratumRow] = field(default_factory=list)

    def corpus(self) -> List[int]:
        """Every D of the class number tables, ascending."""
        rows = self.table2 + self.table3 + self.table4 + self.table5
        return sorted({row.D for row in rows})


def _read_rows(path: Path, model: Type[RowT]) -> List[RowT]:
    if not path.exists():
        raise FixtureError(f"fixture file not found: {path}")
    rows = []
    with path.open(newline='') as handle:
        for line, record in enumerate(csv.DictReader(handle), start=2):
            try:
                rows.append(model.model_validate(record))
            except (ValidationError, ValueError) as e:
                raise FixtureError(f"{path.name}:{line}: {e}") from e
    return rows


def _apply_erratum(fixtures: FixtureSet, erratum: ErratumRow):
    table = getattr(fixtures, erratum.table, None)
    if table is None:
        raise FixtureError(f"erratum names unknown table {erratum.table!r}")
    matches = [row for row in table if row.D == erratum.D]
    if not matches:
        raise FixtureError(f"erratum for {erratum.table} D={erratum.D} matches no row")
    row = matches[0]

    current = getattr(row, erratum.field, None)
    if current is None:
        raise FixtureError(f"erratum names unknown field {erratum.field!r}")

    if isinstance(current, QuadForm):
        if current != QuadForm.parse(erratum.printed):
            raise FixtureError(f"erratum for {erratum.table} D={erratum.D} {erratum.field}: "
                               f"row holds {current}, not the printed {erratum.printed}")
        setattr(row, erratum.field, QuadForm.parse(erratum.corrected))
    else:
        terms: Dict[int, int] = dict(current)
        if erratum.n is None or terms.get(erratum.n, 0) != int(erratum.printed):
            raise FixtureError(f"erratum for {erratum.table} D={erratum.D} {erratum.field} "
                               f"n={erratum.n} does not match the printed row")
        terms[erratum.n] = int(erratum.corrected)
        setattr(row, erratum.field, {n: c for n, c in terms.items() if c})

    logger.warning(f"{erratum.table} D={erratum.D} {erratum.field}"
                   f"{'' if erratum.n is None else f' n={erratum.n}'}: "
                   f"printed {erratum.printed}, using {erratum.corrected}")


def load_fixtures(directory: Path, apply_errata: bool = True) -> FixtureSet:
    directory = Path(directory)
    fixtures = FixtureSet(
        table1=_read_rows(directory / TABLE_FILES['table1'], SchoenebergRow),
        table2=_read_rows(directory / TABLE_FILES['table2'], ClassOneRow),
        table3=_read_rows(directory / TABLE_FILES['table3'], ClassThreeRow),
        table4=_read_rows(directory / TABLE_FILES['table4'], ClassThreeRow),
        table5=_read_rows(directory / TABLE_FILES['table5'], ClassFiveRow),
    )

    errata_path = directory / ERRATA_FILE
    if errata_path.exists():
        fixtures.errata = _read_rows(errata_path, ErratumRow)
    if apply_errata:
        for erratum in fixtures.errata:
            _apply_erratum(fixtures, erratum)

    logger.debug(f"loaded fixtures from {directory}: {len(fixtures.corpus())} discriminants, "
                 f"{len(fixtures.errata)} errata")
    return fixtures


__all__ = ['FixtureSet', 'load_fixtures', 'parse_terms', 'TABLE_FILES', 'ERRATA_FILE']
