import itertools
from fractions import Fraction
from typing import Tuple

from core.errors import InputError, NonIntegralLead
from core.logging.logger import get_module_logger
from models.series import IntSeries, EtaQuotientSpec
from .arithmetic import series_mul, series_div, shift_up

logger = get_module_logger('Series')


def eta_core(delta: int, N: int) -> IntSeries:
    """prod_{n>=1} (1 - q^{delta n}) to q^N via Euler's pentagonal number series."""
    if delta < 1:
        raise InputError(f"delta must be positive, got {delta}")
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for k in itertools.count(1):
        sign = -1 if k % 2 else 1
        p1 = delta * k * (3 * k - 1) // 2
        if p1 > N:
            break
        coeffs[p1] += sign
        p2 = delta * k * (3 * k + 1) // 2
        if p2 <= N:
            coeffs[p2] += sign
    return IntSeries(N, tuple(coeffs))


def eta_cube_core(N: int) -> IntSeries:
    """prod (1 - q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}."""
    coeffs = [0] * (N + 1)
    for k in itertools.count(0):
        e = k * (k + 1) // 2
        if e > N:
            break
        coeffs[e] = (-1) ** k * (2 * k + 1)
    return IntSeries(N, tuple(coeffs))


def eta_quotient(spec: EtaQuotientSpec, N: int) -> Tuple[Fraction, IntSeries]:
    """(e, S) with prod eta(delta z)^{r_delta} = q^e * S and S(0) = 1.

    Raises NonIntegralLead when e = sum delta*r_delta / 24 is not an integer.
    """
    lead = spec.lead_exponent
    if lead.denominator != 1:
        raise NonIntegralLead(f"{spec} has leading exponent {lead}, not an integer")

    series = IntSeries.one(N)
    for delta, r in spec.factors:
        if r == 0:
            continue
        core = eta_core(delta, N)
        for _ in range(abs(r)):
            series = series_mul(series, core) if r > 0 else series_div(series, core)

    logger.debug(f"{spec}: lead q^{lead}, {len(series.nonzero_terms())} nonzero terms to q^{N}")
    return lead, series


def eta_quotient_qseries(spec: EtaQuotientSpec, N: int) -> IntSeries:
    """The q-expansion q^e * S of an eta quotient with integral e >= 0, to q^N."""
    lead, series = eta_quotient(spec, N)
    e = int(lead)
    if e < 0:
        raise NonIntegralLead(f"{spec} has a pole of order {-e} at infinity")
    if e > N:
        return IntSeries(N, (0,) * (N + 1))
    return shift_up(series.truncate(N - e), e, N)


def ramanujan_tau(N: int) -> IntSeries:
    """Coefficients tau(n) of Delta = q * prod (1 - q^n)^24 up to q^N; tau(0) = 0."""
    if N < 1:
        raise InputError(f"order must be at least 1, got {N}")
    cube = eta_cube_core(N - 1)
    series = IntSeries.one(N - 1)
    for _ in range(8):
        series = series_mul(series, cube)
    return shift_up(series, 1, N)
