from functools import lru_cache
from typing import Union

from core.errors import NotApplicable
from core.logging.logger import get_module_logger
from models.base import Provenance
from models.forms import Discriminant
from models.series import EtaQuotientSpec, IntSeries
from modules.qforms import enumerate_reduced, units_w
from modules.qseries import eta_quotient_qseries
from modules.theta import half_theta_difference
from .models import RepFormulaContext

logger = get_module_logger('RepNum')

ETA_23 = EtaQuotientSpec.of({1: 1, 23: 1})


@lru_cache(maxsize=8)
def eta_product_23(N: int) -> IntSeries:
    """eta(z) eta(23z) = q prod (1 - q^n)(1 - q^{23n}) to q^N."""
    return eta_quotient_qseries(ETA_23, N)


def build_context(D: Union[Discriminant, int], N: int,
                  provenance: Provenance = Provenance.THETA) -> RepFormulaContext:
    """Assemble forms, w and t_1..t_k to order N.

    THETA takes t_j from theta half-differences. ETA_PRODUCT exists only for
    D = 23, where t_1 comes from eta(z) eta(23z) independently of any lattice count.
    """
    classes = enumerate_reduced(D)
    if not classes.paired:
        raise NotApplicable(f"D={classes.D.D} has even class number {classes.h}")

    if provenance is Provenance.ETA_PRODUCT:
        if classes.D.D != 23:
            raise NotApplicable("the eta-product source is available only for D=23")
        t_tables = [eta_product_23(N)]
    else:
        t_tables = [half_theta_difference(classes.principal, classes.form(r), N)
                    for r in range(1, classes.k + 1)]

    logger.debug(f"context D={classes.D.D}: h={classes.h}, order {N}, t from {provenance.value}")
    return RepFormulaContext(D=classes.D, classes=classes, t_tables=t_tables,
                             w=units_w(classes.D), order=N, provenance=provenance)
