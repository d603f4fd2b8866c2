"""
Theta series at the cusp 1/1.

At 1/1 the expansion of Theta_Q carries the factor -i/sqrt(D) and each lattice
point contributes the root of unity e^{2 pi i Q(x,y)/D}. The phase depends only
on the value m = Q(x, y), so the sum collapses level set by level set into

    (-i/sqrt(D)) * sum_m a(m, Q) e^{2 pi i m/D} q^{m/D}.
"""

from typing import Tuple, Union

import numpy as np

from core.errors import NotApplicable
from core.logging.logger import get_module_logger
from models.forms import QuadForm, Discriminant
from models.theta_data import RootOfUnitySeries
from modules.qforms import enumerate_reduced
from .lattice import theta_series, half_theta_difference

logger = get_module_logger('Theta')

ZERO_THRESHOLD = 1e-9


def cusp_expansion_at_one(Q: QuadForm, M: int) -> RootOfUnitySeries:
    D = -Q.discriminant
    counts = np.asarray(theta_series(Q, M).counts, dtype=float)
    m = np.arange(M + 1)
    coeffs = (-1j / np.sqrt(D)) * counts * np.exp(2j * np.pi * m / D)
    terms = {int(k): complex(coeffs[k]) for k in np.nonzero(counts)[0]}
    return RootOfUnitySeries(D=D, terms=terms)


def _pair_forms(D: Union[Discriminant, int], r: int):
    classes = enumerate_reduced(D)
    if not classes.paired or classes.k == 0:
        raise NotApplicable(f"D={classes.D.D} has class number {classes.h}; cusp orders need odd h >= 3")
    return classes.principal, classes.form(r)


def half_difference_at_one(D: Union[Discriminant, int], r: int, M: int) -> RootOfUnitySeries:
    """(Theta_{Q_0} - Theta_{Q_r}) / 2 expanded at the cusp 1/1."""
    Q0, Qr = _pair_forms(D, r)
    return (cusp_expansion_at_one(Q0, M) - cusp_expansion_at_one(Qr, M)).scaled(0.5)


def cusp_vanishing_orders(D: Union[Discriminant, int], r: int, M: int,
                          threshold: float = ZERO_THRESHOLD) -> Tuple[int, int]:
    """(order at i-infinity, order at 1/1) of F_{D,r}; None marks no term up to the bound."""
    Q0, Qr = _pair_forms(D, r)
    order_infinity = half_theta_difference(Q0, Qr, M).valuation()
    order_one = half_difference_at_one(D, r, M).leading_exponent(threshold)
    logger.debug(f"D={-Q0.discriminant}, r={r}: orders ({order_infinity}, {order_one})")
    return order_infinity, order_one
