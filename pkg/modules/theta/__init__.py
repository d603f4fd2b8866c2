from .lattice import rep_count_bruteforce, theta_series, half_theta_difference, f_dr, f_dsr
from .cusp import (
    ZERO_THRESHOLD, cusp_expansion_at_one, half_difference_at_one, cusp_vanishing_orders,
)

__all__ = [
    'rep_count_bruteforce', 'theta_series', 'half_theta_difference', 'f_dr', 'f_dsr',
    'ZERO_THRESHOLD', 'cusp_expansion_at_one', 'half_difference_at_one', 'cusp_vanishing_orders',
]
