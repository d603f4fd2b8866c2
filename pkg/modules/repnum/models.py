from dataclasses import dataclass, field
from typing import List, Optional

from dataclasses_json import dataclass_json

from models.base import Provenance
from models.forms import Discriminant, FormClassList
from models.series import IntSeries


@dataclass
class RepFormulaContext:
    """Everything the closed representation formulas need for one discriminant."""
    D: Discriminant
    classes: FormClassList
    t_tables: List[IntSeries]
    w: int
    order: int
    provenance: Provenance = Provenance.THETA

    @property
    def k(self) -> int:
        return self.classes.k


@dataclass_json
@dataclass
class RepFailure:
    index: int
    n: int
    expected: int
    got: int


@dataclass_json
@dataclass
class CrossValidationReport:
    D: int
    order: int
    checks_run: int = 0
    failures: List[RepFailure] = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.failures
