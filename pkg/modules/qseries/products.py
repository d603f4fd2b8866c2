"""
Exponents of the product expansion t = q * prod_{n>=1} (1 - q^n)^{c(n)}.

With f = t/q, the logarithmic derivative gives the recurrence

    alpha(n) = -n t(n+1) - sum_{k=1}^{n-1} t(n-k+1) alpha(k),

where alpha(n) = sum_{d|n} d c(d), and Moebius inversion recovers c(n).
Integer coefficients with t(1) = 1 force every c(n) to be an integer.
"""

import time
from typing import List

import numpy as np

from core.errors import InputError, IntegralityViolation
from core.logging.logger import get_module_logger
from models.series import IntSeries, ProductExponents
from modules.ntheory import divisors, moebius
from .arithmetic import series_mul, shift_up

logger = get_module_logger('Series')

FLOAT_LIMIT = 2 ** 1023


def product_exponents(t: IntSeries) -> ProductExponents:
    """alpha(1..N-1) and c(1..N-1) for t = q + t(2) q^2 + ... given to order N."""
    if t.order < 1 or t[0] != 0 or t[1] != 1:
        raise InputError("product exponents need t(0) = 0 and t(1) = 1")

    start = time.perf_counter()
    N = t.order
    # nonzero t(j) for j >= 2, as (j, t(j))
    support = [(j, t[j]) for j in range(2, N + 1) if t[j]]

    alpha = [0] * N
    for n in range(1, N):
        acc = -n * t[n + 1]
        for j, tj in support:
            k = n - j + 1
            if k < 1:
                break
            acc -= tj * alpha[k]
        alpha[n] = acc

    c = []
    for n in range(1, N):
        total = sum(moebius(n // d) * alpha[d] for d in divisors(n))
        q, r = divmod(total, n)
        if r:
            raise IntegralityViolation(f"c({n}) = {total}/{n} is not an integer")
        c.append(q)

    logger.debug(f"product exponents to n={N - 1} in {(time.perf_counter() - start) * 1000:.1f} ms")
    return ProductExponents(order=N, alpha=tuple(alpha[1:]), c=tuple(c))


def _binomial_factor(n: int, e: int, order: int) -> IntSeries:
    # (1 - q^n)^e for any integer e; only j*n <= order terms survive
    coeffs = [0] * (order + 1)
    b = 1
    for j in range(0, order // n + 1):
        if j > 0:
            b = -b * (e - j + 1) // j
            if b == 0:
                break
        coeffs[j * n] = b
    return IntSeries(order, tuple(coeffs))


def expand_product(c: ProductExponents, N: int) -> IntSeries:
    """q * prod_{n=1}^{N-1} (1 - q^n)^{c(n)} truncated at q^N."""
    if N < 1:
        raise InputError(f"order must be at least 1, got {N}")
    if c.order < N:
        raise InputError(f"exponents of order {c.order} cannot expand to q^{N}")

    body = IntSeries.one(N - 1)
    for n in range(1, N):
        e = c.exponent(n)
        if e:
            body = series_mul(body, _binomial_factor(n, e, N - 1))
    return shift_up(body, 1, N)


def weighted_divisor_growth(c: ProductExponents, alpha_exp: float) -> List[float]:
    """n -> |sum_{d|n} d c(d)| / n^alpha_exp for n = 1..order-1."""
    # Magnitudes past the double range become inf
    magnitude = np.array([float(abs(a)) if abs(a) < FLOAT_LIMIT else np.inf for a in c.alpha], dtype=float)
    n = np.arange(1, len(magnitude) + 1, dtype=float)
    with np.errstate(over='ignore', invalid='ignore'):
        growth = magnitude / np.power(n, alpha_exp)
    return np.nan_to_num(growth, nan=0.0, posinf=np.inf).tolist()
