from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from dataclasses_json import dataclass_json


@dataclass_json
@dataclass
class EtaSearchResult:
    """Exponent pairs (i, j), i + j = 2, for eta(z)^i eta(Dz)^j at prime level D."""
    D: int
    cusp_form_only: bool
    solutions: List[Tuple[int, int]] = field(default_factory=list)
    ell: List[Optional[int]] = field(default_factory=list)


@dataclass_json
@dataclass
class PairSearchResult:
    """Ordered pairs (Q_s, Q_r) with (Theta_s - Theta_r)/2 = eta(z) eta(Dz) to q^order.

    ``pair_classes`` collapses conjugates: each entry is ((a, |b|, c), (a, |b|, c)).
    """
    D: int
    order: int
    matches: List[Tuple[str, str]] = field(default_factory=list)
    pair_classes: List[Tuple[Tuple[int, int, int], Tuple[int, int, int]]] = field(default_factory=list)
    pruned: int = 0

    @property
    def unique(self) -> bool:
        return len(self.pair_classes) == 1


@dataclass_json
@dataclass
class ProbeResult:
    D: int
    r: int
    order: int
    threshold: int
    max_c: int
    first_exceed: Optional[int] = None
