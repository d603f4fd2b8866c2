from typing import List, Tuple

from core.errors import InputError
from models.series import IntSeries


def _support(coeffs, order: int) -> List[Tuple[int, int]]:
    return [(i, c) for i, c in enumerate(coeffs[:order + 1]) if c]


def series_mul(f: IntSeries, g: IntSeries) -> IntSeries:
    """Cauchy product truncated at the smaller of the two orders.

    Only nonzero coefficients are visited, so products with eta-type factors
    cost O(N * nnz) instead of O(N^2).
    """
    N = min(f.order, g.order)
    fs = _support(f.coeffs, N)
    gs = _support(g.coeffs, N)
    if len(fs) > len(gs):
        fs, gs = gs, fs

    out = [0] * (N + 1)
    for i, ci in fs:
        limit = N - i
        for j, cj in gs:
            if j > limit:
                break
            out[i + j] += ci * cj
    return IntSeries(N, tuple(out))


def series_add(f: IntSeries, g: IntSeries) -> IntSeries:
    N = min(f.order, g.order)
    return IntSeries(N, tuple(f[n] + g[n] for n in range(N + 1)))


def series_sub(f: IntSeries, g: IntSeries) -> IntSeries:
    N = min(f.order, g.order)
    return IntSeries(N, tuple(f[n] - g[n] for n in range(N + 1)))


def series_scale(f: IntSeries, k: int) -> IntSeries:
    return IntSeries(f.order, tuple(k * c for c in f.coeffs))


def series_div(f: IntSeries, g: IntSeries) -> IntSeries:
    """f / g by forward substitution; g must have constant term 1."""
    if g[0] != 1:
        raise InputError(f"divisor must have constant term 1, got {g[0]}")
    N = min(f.order, g.order)
    gs = [(i, c) for i, c in _support(g.coeffs, N) if i > 0]

    out = list(f.coeffs[:N + 1])
    for n in range(1, N + 1):
        acc = out[n]
        for i, ci in gs:
            if i > n:
                break
            acc -= ci * out[n - i]
        out[n] = acc
    return IntSeries(N, tuple(out))


def series_inverse(f: IntSeries) -> IntSeries:
    """Formal inverse of a series with constant term 1."""
    return series_div(IntSeries.one(f.order), f)


def series_pow(f: IntSeries, e: int) -> IntSeries:
    if e < 0:
        return series_pow(series_inverse(f), -e)
    result = IntSeries.one(f.order)
    for _ in range(e):
        result = series_mul(result, f)
    return result


def shift_up(f: IntSeries, k: int, order: int) -> IntSeries:
    """q^k * f truncated at ``order``; f must reach order - k."""
    if f.order < order - k:
        raise InputError(f"series of order {f.order} cannot fill q^{k} * f up to q^{order}")
    return IntSeries(order, (0,) * k + f.coeffs[:order - k + 1])
