from fractions import Fraction
from typing import Tuple

from core.errors import InputError, NonIntegralResult
from models.base import Provenance
from modules.ntheory import char_divisor_sum
from modules.theta import rep_count_bruteforce
from .context import build_context
from .models import RepFormulaContext


def _check_n(ctx: RepFormulaContext, n: int):
    if not 1 <= n <= ctx.order:
        raise InputError(f"n must be in 1..{ctx.order}, got {n}")


def rep_formula(ctx: RepFormulaContext, form_index: int, n: int) -> int:
    """a(n, Q_index) from the divisor sum and the t_j(n).

    With h = 2k + 1 > 1:
        a(n, Q_0) = (2S + 4 sum_j t_j(n)) / h
        a(n, Q_r) = (2S + 4 sum_{j != r} t_j(n) - (4k - 2) t_r(n)) / h
    and a(n, Q_0) = w S when k = 0, where S = sum_{d|n} (-D|d).
    """
    _check_n(ctx, n)
    k = ctx.k
    if not 0 <= form_index <= k:
        raise InputError(f"form index must be in 0..{k}, got {form_index}")

    S = char_divisor_sum(n, ctx.D)
    if k == 0:
        return ctx.w * S

    h = 2 * k + 1
    t = [series[n] for series in ctx.t_tables]
    if form_index == 0:
        value = Fraction(2 * S + 4 * sum(t), h)
    else:
        t_r = t[form_index - 1]
        value = Fraction(2 * S + 4 * (sum(t) - t_r) - (4 * k - 2) * t_r, h)

    if value.denominator != 1 or value < 0:
        raise NonIntegralResult(
            f"D={ctx.D.D}, index {form_index}, n={n}: formula gives {value}")
    return int(value)


def mass_formula_residual(ctx: RepFormulaContext, n: int) -> int:
    """a(n, Q_0) + 2 sum_r a(n, Q_r) - w sum_{d|n} (-D|d), from lattice counts; zero when consistent."""
    _check_n(ctx, n)
    classes = ctx.classes
    total = rep_count_bruteforce(classes.principal, n)
    total += 2 * sum(rep_count_bruteforce(classes.form(r), n) for r in range(1, ctx.k + 1))
    return total - ctx.w * char_divisor_sum(n, ctx.D)


def difference_identity_residual(ctx: RepFormulaContext, r: int, n: int) -> int:
    """a(n, Q_0) - a(n, Q_r) - 2 t_r(n) over formula values; zero when consistent."""
    return rep_formula(ctx, 0, n) - rep_formula(ctx, r, n) - 2 * ctx.t_tables[r - 1][n]


def van_der_blij(n: int, N: int) -> Tuple[int, int]:
    """(a(n, x^2+xy+6y^2), a(n, 2x^2+xy+3y^2)) with t(n) read off eta(z) eta(23z)."""
    ctx = build_context(23, N, Provenance.ETA_PRODUCT)
    return rep_formula(ctx, 0, n), rep_formula(ctx, 1, n)
