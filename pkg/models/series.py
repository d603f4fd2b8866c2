from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from core.errors import InputError


@dataclass(frozen=True)
class IntSeries:
    """Truncated q-expansion sum_{n<=order} coeffs[n] q^n with exact integer coefficients."""
    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise InputError(f"series order must be non-negative, got {self.order}")
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise InputError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_terms(cls, order: int, terms: Dict[int, int]) -> "IntSeries":
        coeffs = [0] * (order + 1)
        for n, value in terms.items():
            if 0 <= n <= order:
                coeffs[n] = value
        return cls(order, tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        return cls.from_terms(order, {0: 1})

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "IntSeries":
        if order > self.order:
            raise InputError(f"cannot extend a series of order {self.order} to {order}")
        return IntSeries(order, self.coeffs[:order + 1])

    def shift_down(self, k: int = 1) -> "IntSeries":
        """Divide by q^k; the first k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise InputError(f"series is not divisible by q^{k}")
        return IntSeries(self.order - k, self.coeffs[k:])

    def nonzero_terms(self) -> List[Tuple[int, int]]:
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    def valuation(self) -> Optional[int]:
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def to_dict(self, lead_exponent: int = 0) -> Dict:
        # Decimal strings keep big coefficients intact in JSON
        return {
            "order": self.order,
            "lead_exponent": lead_exponent,
            "coeffs": [str(c) for c in self.coeffs],
        }

    def __str__(self) -> str:
        text = ""
        for n, c in self.nonzero_terms():
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not text:
                text = ("-" if c < 0 else "") + body
            else:
                text += (" - " if c < 0 else " + ") + body
        return f"{text or '0'} + O(q^{self.order + 1})"


@dataclass(frozen=True)
class EtaQuotientSpec:
    """prod eta(delta z)^{r_delta} over distinct positive delta."""
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(d), int(r)) for d, r in self.factors))
        deltas = [d for d, _ in self.factors]
        if any(d < 1 for d in deltas):
            raise InputError(f"eta quotient levels must be positive, got {deltas}")
        if len(set(deltas)) != len(deltas):
            raise InputError(f"eta quotient levels must be distinct, got {deltas}")

    @classmethod
    def of(cls, exponents: Dict[int, int]) -> "EtaQuotientSpec":
        return cls(tuple(sorted(exponents.items())))

    @property
    def level(self) -> int:
        active = [d for d, r in self.factors if r]
        return lcm(*active) if active else 1

    @property
    def lead_exponent(self) -> Fraction:
        return Fraction(sum(d * r for d, r in self.factors), 24)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.factors), 2)

    def __str__(self) -> str:
        return "".join(f"eta({'' if d == 1 else d}z)" + ("" if r == 1 else f"^{r}")
                       for d, r in self.factors if r) or "1"


@dataclass(frozen=True)
class ProductExponents:
    """Exponents c(n) with t = q * prod_{n>=1} (1-q^n)^{c(n)}, plus the alpha(n) sequence.

    ``alpha[n-1]`` is alpha(n) and ``c[n-1]`` is c(n) for n = 1..order-1.
    """
    order: int
    alpha: Tuple[int, ...] = field(default_factory=tuple)
    c: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "c", tuple(self.c))
        if len(self.c) != max(self.order - 1, 0):
            raise InputError(f"order {self.order} needs {self.order - 1} exponents, got {len(self.c)}")

    @classmethod
    def from_exponents(cls, order: int, c: Sequence[int]) -> "ProductExponents":
        """Exponents given directly; alpha(n) = sum_{d|n} d*c(d) is filled in."""
        c = tuple(c)[:max(order - 1, 0)]
        c = c + (0,) * (max(order - 1, 0) - len(c))
        alpha = [0] * len(c)
        for d in range(1, len(c) + 1):
            if c[d - 1]:
                for m in range(d, len(c) + 1, d):
                    alpha[m - 1] += d * c[d - 1]
        return cls(order, tuple(alpha), c)

    def exponent(self, n: int) -> int:
        return self.c[n - 1]

    def items(self) -> Iterable[Tuple[int, int]]:
        return ((n, cn) for n, cn in enumerate(self.c, start=1))

    def to_dict(self) -> Dict:
        return {
            "order": self.order,
            "alpha": [str(a) for a in self.alpha],
            "c": [str(cn) for cn in self.c],
        }
