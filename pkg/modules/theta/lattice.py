from math import isqrt
from typing import Union

import numpy as np

from core.errors import DiscriminantMismatch, InputError, VerificationError
from core.logging.logger import get_module_logger
from models.forms import QuadForm, Discriminant
from models.series import IntSeries
from models.theta_data import RepCountTable
from modules.qforms import enumerate_reduced

logger = get_module_logger('Theta')


def _definite_disc(Q: QuadForm) -> int:
    if not Q.is_positive_definite:
        raise InputError(f"form {Q} is not positive definite")
    return -Q.discriminant


def rep_count_bruteforce(Q: QuadForm, n: int) -> int:
    """#{(x, y) : Q(x, y) = n} by a plain box scan.

    4aQ = (2ax + by)^2 + Dy^2 bounds |y| and the mirrored identity bounds |x|.
    """
    D = _definite_disc(Q)
    if n < 0:
        raise InputError(f"n must be non-negative, got {n}")
    y_max = isqrt(4 * Q.a * n // D)
    x_max = isqrt(4 * Q.c * n // D)
    return sum(1
               for y in range(-y_max, y_max + 1)
               for x in range(-x_max, x_max + 1)
               if Q(x, y) == n)


def theta_series(Q: QuadForm, N: int) -> RepCountTable:
    """All a(n, Q) for n <= N from one sweep over the ellipse Q(x, y) <= N."""
    D = _definite_disc(Q)
    if N < 0:
        raise InputError(f"order must be non-negative, got {N}")
    a, b, c = Q.a, Q.b, Q.c
    y_max = isqrt(4 * a * N // D)

    strips = []
    for y in range(-y_max, y_max + 1):
        s = isqrt(4 * a * N - D * y * y)
        x_lo = -((s + b * y) // (2 * a))
        x_hi = (s - b * y) // (2 * a)
        if x_lo > x_hi:
            continue
        x = np.arange(x_lo, x_hi + 1, dtype=np.int64)
        strips.append(a * x * x + b * y * x + c * y * y)

    values = np.concatenate(strips)
    counts = np.bincount(values[values <= N], minlength=N + 1)
    return RepCountTable(form=Q, order=N, counts=tuple(int(v) for v in counts[:N + 1]))


def half_theta_difference(Qs: QuadForm, Qr: QuadForm, N: int) -> IntSeries:
    """(Theta_{Qs} - Theta_{Qr}) / 2 to q^N."""
    if Qs.discriminant != Qr.discriminant:
        raise DiscriminantMismatch(
            f"{Qs} has discriminant {Qs.discriminant} but {Qr} has {Qr.discriminant}")

    ts = theta_series(Qs, N)
    tr = theta_series(Qr, N)
    coeffs = []
    for n in range(N + 1):
        diff = ts[n] - tr[n]
        if diff % 2:
            raise VerificationError(f"odd theta difference {diff} at n={n} for {Qs}, {Qr}")
        coeffs.append(diff // 2)
    return IntSeries(N, tuple(coeffs))


def f_dr(D: Union[Discriminant, int], r: int, N: int) -> IntSeries:
    """F_{D,r}: half-difference of the principal form and Q_r."""
    if r == 0:
        raise InputError("F_{D,r} needs a non-principal index r >= 1")
    classes = enumerate_reduced(D)
    Qr = classes.form(r)
    logger.debug(f"F_(D={classes.D.D},r={r}) from {classes.principal} - {Qr} to q^{N}")
    return half_theta_difference(classes.principal, Qr, N)


def f_dsr(D: Union[Discriminant, int], s: int, r: int, N: int) -> IntSeries:
    """F_{D,s,r}: half-difference of Q_s and Q_r for form indices s, r."""
    classes = enumerate_reduced(D)
    return half_theta_difference(classes.form(s), classes.form(r), N)
