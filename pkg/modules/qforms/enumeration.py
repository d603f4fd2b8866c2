from math import gcd, isqrt
from typing import List, Tuple, Union

from core.errors import NotApplicable
from core.logging.logger import get_module_logger
from models.forms import QuadForm, Discriminant, FormClassList
from modules.ntheory import is_prime
from .reduction import as_discriminant, is_reduced, principal_form, conjugate, is_fundamental

logger = get_module_logger('Forms')


def _pair_key(Q: QuadForm) -> Tuple[int, int, int]:
    return (Q.a, Q.c, abs(Q.b))


def reduced_forms(D: Union[Discriminant, int]) -> List[QuadForm]:
    """All primitive reduced forms of discriminant -D, unordered beyond the scan."""
    D = int(D)
    found = []
    for a in range(1, isqrt(D // 3) + 1):
        for b in range(-a, a + 1):
            if (b - D) % 2:
                continue
            num = b * b + D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            Q = QuadForm(a, b, c)
            if is_reduced(Q) and gcd(gcd(a, b), c) == 1:
                found.append(Q)
    return found


def enumerate_reduced(D: Union[Discriminant, int]) -> FormClassList:
    """Reduced forms ordered as principal form, then conjugate pairs (Q_r, conj Q_r).

    Pairs are sorted by (a, c, |b|) with the b > 0 member first. Even class
    number leaves ``pairs`` empty and ``paired`` False.
    """
    D = as_discriminant(D)
    principal = principal_form(D)
    forms = reduced_forms(D)
    others = sorted((Q for Q in forms if Q != principal), key=lambda Q: (_pair_key(Q), -Q.b))

    if len(forms) % 2 == 0:
        logger.debug(f"D={D.D}: even class number {len(forms)}, returning unpaired list")
        return FormClassList(D=D, principal=principal, pairs=[],
                             reduced=[principal] + others, paired=False)

    pairs = []
    for Q in others:
        if Q.b > 0:
            pairs.append((Q, conjugate(Q)))
    ordered = [principal] + [q for pair in pairs for q in pair]
    if sorted(ordered) != sorted(forms):
        # Self-conjugate non-principal classes cannot occur for odd class number
        raise NotApplicable(f"D={D.D}: reduced forms do not split into conjugate pairs")

    logger.debug(f"D={D.D}: h={len(forms)} with {len(pairs)} conjugate pairs")
    return FormClassList(D=D, principal=principal, pairs=pairs, reduced=ordered, paired=True)


def class_number(D: Union[Discriminant, int]) -> int:
    return len(reduced_forms(as_discriminant(D)))


def units_w(D: Union[Discriminant, int]) -> int:
    D = int(D)
    if D == 3:
        return 6
    if D == 4:
        return 4
    return 2


def min_nonzero_values(Q: QuadForm) -> Tuple[int, int]:
    """Smallest and second smallest nonzero values (a, c) of a non-principal reduced form."""
    if Q.a == 1:
        raise NotApplicable(f"{Q} is principal; its minimum values are not (a, c)")
    if not is_reduced(Q):
        raise NotApplicable(f"{Q} is not reduced")
    return (Q.a, Q.c)


def odd_class_number_census(limit: int) -> List[Tuple[int, int, bool]]:
    """Fundamental D <= limit with odd h(-D), as (D, h, D prime or D in {4, 8})."""
    census = []
    for D in range(3, limit + 1):
        if D % 4 not in (0, 3):
            continue
        try:
            disc = is_fundamental(-D)
        except ValueError:
            continue
        h = class_number(disc)
        if h % 2:
            census.append((D, h, is_prime(D) or D in (4, 8)))
    logger.debug(f"odd class number census to {limit}: {len(census)} discriminants")
    return census
