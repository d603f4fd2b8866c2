import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Union

from core.errors import ValidationFailure
from core.logging.logger import get_module_logger
from models.forms import Discriminant
from modules.theta import rep_count_bruteforce
from .context import build_context
from .formulas import rep_formula
from .models import CrossValidationReport, RepFailure, RepFormulaContext

logger = get_module_logger('RepNum')


def _validate_index(ctx: RepFormulaContext, index: int) -> List[RepFailure]:
    Q = ctx.classes.form(index)
    failures = []
    for n in range(1, ctx.order + 1):
        expected = rep_count_bruteforce(Q, n)
        got = rep_formula(ctx, index, n)
        if got != expected:
            failures.append(RepFailure(index=index, n=n, expected=expected, got=got))
    return failures


def cross_validate(D: Union[Discriminant, int], N: int, workers: int = 1,
                   strict: bool = False) -> CrossValidationReport:
    """Compare the closed formula with lattice counts for every form index and n <= N.

    Form indices are sharded across ``workers`` threads; failures are reported
    sorted by (index, n). With ``strict`` the first mismatch raises ValidationFailure.
    """
    start = time.perf_counter()
    ctx = build_context(D, N)
    indices = list(range(ctx.k + 1))

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(lambda i: _validate_index(ctx, i), indices))

    failures = sorted((f for batch in results for f in batch), key=lambda f: (f.index, f.n))
    report = CrossValidationReport(
        D=ctx.D.D,
        order=N,
        checks_run=len(indices) * N,
        failures=failures,
        elapsed_ms=round((time.perf_counter() - start) * 1000.0, 3),
    )

    if failures:
        first = failures[0]
        logger.error(f"D={ctx.D.D}: {len(failures)} mismatches, first at index {first.index}, n={first.n}")
        if strict:
            raise ValidationFailure(
                f"D={ctx.D.D}: formula gives {first.got} but lattice count is {first.expected} "
                f"for index {first.index}, n={first.n}",
                index=first.index, n=first.n, expected=first.expected, got=first.got)
    else:
        logger.info(f"D={ctx.D.D}: {report.checks_run} checks passed in {report.elapsed_ms:.0f} ms")
    return report
