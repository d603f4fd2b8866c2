from .reduction import (
    discriminant_of, is_fundamental, as_discriminant, is_reduced, reduce, conjugate, principal_form,
)
from .enumeration import (
    reduced_forms, enumerate_reduced, class_number, units_w, min_nonzero_values,
    odd_class_number_census,
)
from .schoeneberg import SMALL_SCHOENEBERG_PAIRS, schoeneberg_pair

__all__ = [
    'discriminant_of', 'is_fundamental', 'as_discriminant', 'is_reduced', 'reduce', 'conjugate',
    'principal_form', 'reduced_forms', 'enumerate_reduced', 'class_number', 'units_w',
    'min_nonzero_values', 'odd_class_number_census', 'SMALL_SCHOENEBERG_PAIRS', 'schoeneberg_pair',
]
