from fractions import Fraction
from typing import Union

from core.errors import NotApplicable
from core.logging.logger import get_module_logger
from models.forms import Discriminant
from modules.ntheory import is_prime
from modules.qseries import product_exponents
from modules.theta import f_dr
from .models import ProbeResult

logger = get_module_logger('Classify')


def unboundedness_probe(D: Union[Discriminant, int], r: int, N: int, threshold: int) -> ProbeResult:
    """Largest |c(n)|, n < N, in the product expansion of F_{D,r}, and where it first passes ``threshold``."""
    t = f_dr(D, r, N)
    exponents = product_exponents(t)

    max_c = 0
    first_exceed = None
    for n, cn in exponents.items():
        size = abs(cn)
        max_c = max(max_c, size)
        if first_exceed is None and size > threshold:
            first_exceed = n

    D = int(D)
    if first_exceed is not None:
        logger.debug(f"D={D}, r={r}: |c({first_exceed})| passes {threshold}")
    return ProbeResult(D=D, r=r, order=N, threshold=threshold, max_c=max_c, first_exceed=first_exceed)


def _require_prime_level(D: int):
    if not is_prime(D) or D % 4 != 3:
        raise NotApplicable(f"zero counts need a prime D = 3 mod 4, got {D}")


def gamma1_index(D: int) -> int:
    """Index of the image of Gamma_1(D) in PSL_2(Z) for prime D >= 5."""
    _require_prime_level(D)
    return (D * D - 1) // 2


def total_zero_mass(D: int) -> Fraction:
    """Weighted zero count of a nonzero weight-1 form on Gamma_1(D): index / 12."""
    return Fraction(gamma1_index(D), 12)


def cusp_count(D: int) -> int:
    _require_prime_level(D)
    return D - 1


def interior_zero_mass(D: int) -> Fraction:
    """Zeros left for the upper half plane once every cusp takes order 1: (D-1)(D-23)/24."""
    _require_prime_level(D)
    return Fraction((D - 1) * (D - 23), 24)


def per_cusp_zero_mass(D: int) -> Fraction:
    """(D-23)/24, the interior mass per cusp."""
    return interior_zero_mass(D) / cusp_count(D)
