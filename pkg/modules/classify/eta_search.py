from core.errors import InputError
from core.logging.logger import get_module_logger
from modules.ntheory import is_prime
from .models import EtaSearchResult

logger = get_module_logger('Classify')


def eta_quotient_search(D: int, cusp_form_only: bool = True) -> EtaSearchResult:
    """All eta(z)^i eta(Dz)^j of weight 1 (i + j = 2) holomorphic at both cusps.

    The orders at infinity and at 0 are (i + Dj)/24 and (Di + j)/24; both must
    be integers, non-negative, and positive when ``cusp_form_only``. Their
    non-negativity confines i to [ceil(-2/(D-1)), floor(2D/(D-1))].
    """
    if D < 3 or not is_prime(D):
        raise InputError(f"eta quotient search needs a prime level D >= 3, got {D}")

    i_lo = -(2 // (D - 1))
    i_hi = (2 * D) // (D - 1)
    result = EtaSearchResult(D=D, cusp_form_only=cusp_form_only)

    for i in range(i_lo, i_hi + 1):
        j = 2 - i
        at_infinity, r_inf = divmod(i + D * j, 24)
        at_zero, r_zero = divmod(D * i + j, 24)
        if r_inf or r_zero:
            continue
        least = 1 if cusp_form_only else 0
        if at_infinity < least or at_zero < least:
            continue
        result.solutions.append((i, j))
        result.ell.append((i - 1) // 6 if (i - 1) % 6 == 0 else None)

    logger.debug(f"D={D}: {len(result.solutions)} solutions for i in [{i_lo}, {i_hi}]")
    return result
