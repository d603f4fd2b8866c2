from typing import Union

from core.errors import NotADiscriminant, NotFundamental, InputError
from core.logging.logger import get_module_logger
from models.forms import QuadForm, Discriminant
from modules.ntheory import is_squarefree

logger = get_module_logger('Forms')


def discriminant_of(Q: QuadForm) -> int:
    return Q.b * Q.b - 4 * Q.a * Q.c


def is_fundamental(negD: int) -> Discriminant:
    """Validate a negative discriminant and return its carrier.

    Raises NotADiscriminant unless negD < 0 and negD = 0, 1 (mod 4), and
    NotFundamental when a square factor rules it out.
    """
    if negD >= 0 or negD % 4 not in (0, 1):
        raise NotADiscriminant(f"{negD} is not a negative discriminant (need < 0 and = 0, 1 mod 4)")

    D = -negD
    if D % 4 == 3:
        if not is_squarefree(D):
            raise NotFundamental(f"{negD} is not fundamental: {D} is not squarefree")
    else:
        m = D // 4
        if m % 4 not in (1, 2):
            raise NotFundamental(f"{negD} is not fundamental: {negD}/4 is not 2 or 3 mod 4")
        if not is_squarefree(m):
            raise NotFundamental(f"{negD} is not fundamental: {m} is not squarefree")

    return Discriminant(D=D, fundamental=True)


def as_discriminant(D: Union[Discriminant, int]) -> Discriminant:
    """Accept a validated carrier or a positive magnitude D and return the carrier."""
    if isinstance(D, Discriminant):
        return D
    if D <= 0:
        raise NotADiscriminant(f"discriminant magnitude must be positive, got {D}")
    return is_fundamental(-D)


def is_reduced(Q: QuadForm) -> bool:
    a, b, c = Q.a, Q.b, Q.c
    if not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def _check_definite(Q: QuadForm):
    if not Q.is_positive_definite:
        raise InputError(f"form {Q} is not positive definite")


def reduce(Q: QuadForm) -> QuadForm:
    """The reduced form properly equivalent to Q (translate then swap until stable)."""
    _check_definite(Q)
    disc = discriminant_of(Q)
    a, b, c = Q.a, Q.b, Q.c
    steps = 0

    while True:
        if not -a < b <= a:
            r = b % (2 * a)
            if r > a:
                r -= 2 * a
            b = r
            c = (b * b - disc) // (4 * a)
        if a > c:
            a, b, c = c, -b, a
            steps += 1
            continue
        if a == c and b < 0:
            b = -b
        break

    reduced = QuadForm(a, b, c)
    logger.debug(f"reduced {Q} to {reduced} in {steps} swaps")
    return reduced


def conjugate(Q: QuadForm) -> QuadForm:
    return QuadForm(Q.a, -Q.b, Q.c)


def principal_form(D: Union[Discriminant, int]) -> QuadForm:
    D = int(D)
    if D % 4 == 0:
        return QuadForm(1, 0, D // 4)
    if D % 4 == 3:
        return QuadForm(1, 1, (1 + D) // 4)
    raise NotADiscriminant(f"-{D} is not a discriminant")
