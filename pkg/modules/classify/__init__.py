from .models import EtaSearchResult, PairSearchResult, ProbeResult
from .eta_search import eta_quotient_search
from .pairs import (
    eta_product, schoeneberg_identity_check, schoeneberg_pair_search, first_distinguishing_value,
    case_one_bound, admissible_pair,
)
from .growth import (
    unboundedness_probe, gamma1_index, total_zero_mass, cusp_count, interior_zero_mass,
    per_cusp_zero_mass,
)

__all__ = [
    'EtaSearchResult', 'PairSearchResult', 'ProbeResult', 'eta_quotient_search', 'eta_product',
    'schoeneberg_identity_check', 'schoeneberg_pair_search', 'first_distinguishing_value',
    'case_one_bound', 'admissible_pair', 'unboundedness_probe', 'gamma1_index', 'total_zero_mass', 'cusp_count',
    'interior_zero_mass', 'per_cusp_zero_mass',
]
