from .arithmetic import (
    series_mul, series_add, series_sub, series_scale, series_div, series_inverse, series_pow,
    shift_up,
)
from .eta import eta_core, eta_cube_core, eta_quotient, eta_quotient_qseries, ramanujan_tau
from .products import product_exponents, expand_product, weighted_divisor_growth

__all__ = [
    'series_mul', 'series_add', 'series_sub', 'series_scale', 'series_div', 'series_inverse',
    'series_pow', 'shift_up', 'eta_core', 'eta_cube_core', 'eta_quotient', 'eta_quotient_qseries',
    'ramanujan_tau', 'product_exponents', 'expand_product', 'weighted_divisor_growth',
]
