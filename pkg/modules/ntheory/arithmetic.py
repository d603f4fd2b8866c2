from functools import lru_cache
from math import isqrt
from typing import Dict, List

FactorMap = Dict[int, int]


def _require_positive(n: int, what: str = "n"):
    if n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n}")


@lru_cache(maxsize=4096)
def _factorize(n: int) -> tuple:
    factors = []
    remaining = n
    for p in (2, 3):
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            factors.append((p, e))

    # 6k +/- 1 wheel
    p = 5
    step = 2
    while p * p <= remaining:
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step

    if remaining > 1:
        factors.append((remaining, 1))
    return tuple(factors)


def factorize(n: int) -> FactorMap:
    """Prime factorization of n >= 1 by trial division; factorize(1) is empty."""
    _require_positive(n)
    return dict(_factorize(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factorize(n) == ((n, 1),)


def is_squarefree(n: int) -> bool:
    _require_positive(n)
    return all(e == 1 for _, e in _factorize(n))


def moebius(n: int) -> int:
    _require_positive(n)
    factors = _factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> List[int]:
    """Positive divisors of n in ascending order."""
    _require_positive(n)
    divs = [1]
    for p, e in _factorize(n):
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n
