from typing import Dict, Tuple, Union

from core.errors import WrongResidue, VerificationError
from models.forms import QuadForm, Discriminant
from .reduction import reduce

# Pairs for (D+1)/24 < 6, where (6, 1, (D+1)/24) is not yet reduced
SMALL_SCHOENEBERG_PAIRS: Dict[int, Tuple[QuadForm, QuadForm]] = {
    23: (QuadForm(1, 1, 6), QuadForm(2, 1, 3)),
    47: (QuadForm(2, 1, 6), QuadForm(3, 1, 4)),
    71: (QuadForm(3, 1, 6), QuadForm(4, 3, 5)),
    95: (QuadForm(4, 1, 6), QuadForm(5, 5, 6)),
    119: (QuadForm(5, 1, 6), QuadForm(6, 5, 6)),
}


def schoeneberg_pair(D: Union[Discriminant, int]) -> Tuple[QuadForm, QuadForm]:
    """The reduced pair (Q_s, Q_r) whose theta half-difference is eta(z)eta(Dz)."""
    D = int(D)
    if D <= 0 or D % 24 != 23:
        raise WrongResidue(f"D={D} is not 23 mod 24")

    m = (D + 1) // 24
    if m < 6:
        return SMALL_SCHOENEBERG_PAIRS[D]

    pair = (QuadForm(6, 1, m), QuadForm(6, 5, (D + 25) // 24))
    for Q in pair:
        if reduce(Q) != Q:
            raise VerificationError(f"Schoeneberg form {Q} for D={D} is not reduced")
    return pair
