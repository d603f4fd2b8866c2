from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Tuple

from core.errors import InputError


@dataclass(frozen=True, order=True)
class QuadForm:
    """The binary quadratic form a*x^2 + b*x*y + c*y^2."""
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.discriminant < 0

    @property
    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    @property
    def theta_key(self) -> Tuple[int, int, int]:
        # Q and its conjugate share a theta series
        return (self.a, abs(self.b), self.c)

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def notation(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    def pretty(self) -> str:
        def term(coef: int, mono: str, first: bool) -> str:
            if coef == 0:
                return ""
            sign = "-" if coef < 0 else ("" if first else "+")
            mag = abs(coef)
            return f"{sign}{'' if mag == 1 else mag}{mono}"

        text = term(self.a, "x^2", True) + term(self.b, "xy", False) + term(self.c, "y^2", False)
        return text or "0"

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"

    @classmethod
    def parse(cls, text: str) -> "QuadForm":
        parts = text.strip().strip("()").replace(" ", "").split(",")
        if len(parts) != 3:
            raise InputError(f"form must be 'a,b,c', got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as e:
            raise InputError(f"form coefficients must be integers, got {text!r}") from e


@dataclass(frozen=True)
class Discriminant:
    """A validated negative fundamental discriminant -D, held by its magnitude D."""
    D: int
    fundamental: bool = True

    @property
    def value(self) -> int:
        return -self.D

    @property
    def residue(self) -> int:
        return self.D % 4

    @property
    def is_even(self) -> bool:
        return self.D % 4 == 0

    def __int__(self) -> int:
        return self.D

    def __str__(self) -> str:
        return str(-self.D)


@dataclass
class FormClassList:
    """Reduced forms of discriminant -D, arranged as principal form plus conjugate pairs.

    For even class number ``paired`` is False, ``pairs`` is empty and the
    forms are available only through ``reduced``.
    """
    D: Discriminant
    principal: QuadForm
    pairs: List[Tuple[QuadForm, QuadForm]] = field(default_factory=list)
    reduced: List[QuadForm] = field(default_factory=list)
    paired: bool = True

    @property
    def h(self) -> int:
        return len(self.reduced)

    @property
    def k(self) -> int:
        return len(self.pairs)

    def forms(self) -> List[QuadForm]:
        if not self.paired:
            return list(self.reduced)
        ordered = [self.principal]
        for q, qbar in self.pairs:
            ordered.extend((q, qbar))
        return ordered

    def form(self, index: int) -> QuadForm:
        """Q_0 for index 0, otherwise the positive-b member Q_r of the r-th pair."""
        if index == 0:
            return self.principal
        if not self.paired:
            raise InputError(f"class number {self.h} of {self.D} is even; forms are not paired")
        if not 1 <= index <= self.k:
            raise InputError(f"form index must be in 0..{self.k} for D={self.D.D}, got {index}")
        return self.pairs[index - 1][0]

    def to_dict(self) -> Dict:
        return {
            "D": self.D.D,
            "h": self.h,
            "paired": self.paired,
            "principal": self.principal.notation(),
            "pairs": [[q.notation(), qbar.notation()] for q, qbar in self.pairs],
            "forms": [q.notation() for q in self.forms()],
        }
