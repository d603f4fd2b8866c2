import cmath
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .forms import QuadForm


@dataclass(frozen=True)
class RepCountTable:
    """Representation numbers a(n, Q) for n = 0..order; a(0) = 1 counts the origin."""
    form: QuadForm
    order: int
    counts: Tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def represented(self) -> List[int]:
        return [n for n in range(1, self.order + 1) if self.counts[n]]

    def to_dict(self) -> Dict:
        return {"form": self.form.notation(), "order": self.order, "counts": list(self.counts)}


@dataclass
class RootOfUnitySeries:
    """Expansion sum_m terms[m] * q^{m/D} at a cusp, with complex coefficients."""
    D: int
    terms: Dict[int, complex] = field(default_factory=dict)

    def coefficient(self, m: int) -> complex:
        return self.terms.get(m, 0j)

    def __sub__(self, other: "RootOfUnitySeries") -> "RootOfUnitySeries":
        keys = sorted(set(self.terms) | set(other.terms))
        return RootOfUnitySeries(self.D, {m: self.coefficient(m) - other.coefficient(m) for m in keys})

    def scaled(self, factor: complex) -> "RootOfUnitySeries":
        return RootOfUnitySeries(self.D, {m: v * factor for m, v in self.terms.items()})

    def leading_exponent(self, threshold: float) -> Optional[int]:
        for m in sorted(self.terms):
            if abs(self.terms[m]) > threshold:
                return m
        return None

    def to_dict(self) -> Dict:
        return {
            "D": self.D,
            "terms": [[m, v.real, v.imag] for m, v in sorted(self.terms.items())],
        }

    def phase(self, m: int) -> float:
        return cmath.phase(self.coefficient(m))
