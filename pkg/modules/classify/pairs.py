from concurrent.futures import ThreadPoolExecutor
from math import isqrt
from typing import Dict, List, Tuple, Union

from core.errors import NotApplicable, WrongResidue
from core.logging.logger import get_module_logger
from models.forms import QuadForm, Discriminant
from models.series import EtaQuotientSpec, IntSeries
from modules.ntheory import is_prime
from modules.qforms import enumerate_reduced, schoeneberg_pair
from modules.qseries import eta_quotient_qseries
from modules.theta import half_theta_difference, theta_series
from .models import PairSearchResult

logger = get_module_logger('Classify')


def eta_product(D: int, N: int) -> IntSeries:
    """eta(z) eta(Dz) to q^N."""
    return eta_quotient_qseries(EtaQuotientSpec.of({1: 1, D: 1}), N)


def schoeneberg_identity_check(D: Union[Discriminant, int], N: int) -> bool:
    """Whether the Schoeneberg pair's half theta difference equals eta(z) eta(Dz) to q^N."""
    D = int(D)
    Qs, Qr = schoeneberg_pair(D)
    agrees = half_theta_difference(Qs, Qr, N) == eta_product(D, N)
    logger.debug(f"D={D}: ({Qs}, {Qr}) {'matches' if agrees else 'differs from'} eta(z)eta({D}z) to q^{N}")
    return agrees


def first_distinguishing_value(Qs: QuadForm, Qr: QuadForm, N: int):
    """Least n <= N represented a different number of times by Qs and Qr."""
    return half_theta_difference(Qs, Qr, N).valuation()


def case_one_bound() -> int:
    """Largest D with (D+1)^2 <= 192 D.

    When the Schoeneberg pair's two forms have different leading coefficients
    the represented-value bounds force (D+1)^2/576 >= 4(D+1)^2/576 - D.
    """
    # (D+1)^2 <= 192 D  <=>  D^2 - 190 D + 1 <= 0
    D = 95 + isqrt(95 * 95 - 1)
    while (D + 1) ** 2 > 192 * D:
        D -= 1
    return D


def admissible_pair(Qs: QuadForm, Qr: QuadForm, D: int, N: int) -> bool:
    """Whether (Qs, Qr) survives the leading-coefficient case analysis.

    eta(z) eta(Dz) starts at q^m with m = (D+1)/24, so the first value where
    the two forms disagree is m and Qs represents it. With a < a' that value
    is a itself, which a reduced form only allows for D <= case_one_bound().
    With a > a' the difference starts negative at a'. Applies only when the
    series reaches every value involved.
    """
    m = (D + 1) // 24
    if N < max(Qs.a, Qr.a, m) or Qs.a == Qr.a:
        return True
    if Qs.a > Qr.a:
        return False
    return Qs.a == m and D <= case_one_bound()


def schoeneberg_pair_search(D: int, N: int, workers: int = 1, prune: bool = True) -> PairSearchResult:
    """Scan ordered pairs of distinct reduced forms of discriminant -D.

    With ``prune`` the case analysis of ``admissible_pair`` and a prefix test
    up to q^((D+1)/24) discard candidates before the full comparison to q^N.
    """
    if D % 24 != 23:
        raise WrongResidue(f"D={D} is not 23 mod 24")
    if not is_prime(D):
        raise NotApplicable(f"pair search needs a prime D, got {D}")

    forms = enumerate_reduced(D).forms()
    counts: Dict[QuadForm, Tuple[int, ...]] = {Q: theta_series(Q, N).counts for Q in forms}
    target = eta_product(D, N).coeffs
    lead = min((D + 1) // 24, N)

    def agrees(cs, cr, stop: int) -> bool:
        return all(cs[n] - cr[n] == 2 * target[n] for n in range(stop + 1))

    def scan(Qs: QuadForm) -> Tuple[List[Tuple[QuadForm, QuadForm]], int]:
        hits, skipped = [], 0
        for Qr in forms:
            if Qr == Qs:
                continue
            cs, cr = counts[Qs], counts[Qr]
            if prune and not (admissible_pair(Qs, Qr, D, N) and agrees(cs, cr, lead)):
                skipped += 1
                continue
            if agrees(cs, cr, N):
                hits.append((Qs, Qr))
        return hits, skipped

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        batches = list(pool.map(scan, forms))

    matches = [pair for batch, _ in batches for pair in batch]
    pruned = sum(skipped for _, skipped in batches)
    classes = sorted({(Qs.theta_key, Qr.theta_key) for Qs, Qr in matches})
    logger.debug(f"D={D}: {len(matches)} ordered matches in {len(classes)} pair classes to q^{N}, "
                 f"{pruned} candidates pruned")
    return PairSearchResult(
        D=D,
        order=N,
        matches=[(Qs.notation(), Qr.notation()) for Qs, Qr in matches],
        pair_classes=classes,
        pruned=pruned,
    )
