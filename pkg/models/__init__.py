from .base import OutputFormat, CheckStatus, Provenance
from .forms import QuadForm, Discriminant, FormClassList
from .series import IntSeries, EtaQuotientSpec, ProductExponents
from .theta_data import RepCountTable, RootOfUnitySeries

__all__ = [
    'OutputFormat', 'CheckStatus', 'Provenance',
    'QuadForm', 'Discriminant', 'FormClassList',
    'IntSeries', 'EtaQuotientSpec', 'ProductExponents',
    'RepCountTable', 'RootOfUnitySeries',
]
