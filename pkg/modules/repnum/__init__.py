from .models import RepFormulaContext, RepFailure, CrossValidationReport
from .context import build_context, eta_product_23
from .formulas import rep_formula, mass_formula_residual, difference_identity_residual, van_der_blij
from .validation import cross_validate

__all__ = [
    'RepFormulaContext', 'RepFailure', 'CrossValidationReport', 'build_context', 'eta_product_23',
    'rep_formula', 'mass_formula_residual', 'difference_identity_residual', 'van_der_blij',
    'cross_validate',
]
