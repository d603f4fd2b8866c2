"""
Subcommand implementations. Each takes the parsed arguments and the settings
and returns a CommandOutput; rendering and exit handling live in ``main``.
"""

from argparse import Namespace
from math import sqrt

from core.config import Settings, resolve_workers
from core.errors import InputError
from core.logging.logger import get_module_logger
from modules.classify import (
    eta_quotient_search, schoeneberg_identity_check, schoeneberg_pair_search,
    unboundedness_probe, interior_zero_mass, per_cusp_zero_mass,
)
from modules.ntheory import is_prime
from modules.qforms import enumerate_reduced, units_w, schoeneberg_pair
from modules.qseries import product_exponents, weighted_divisor_growth
from modules.repnum import build_context, cross_validate, rep_formula
from modules.theta import (
    rep_count_bruteforce, theta_series, f_dr, cusp_vanishing_orders, half_difference_at_one,
)
from modules.verify import load_fixtures, run_suite
from .models import CommandOutput

logger = get_module_logger('CLI')

EXIT_MISMATCH = 3


def cmd_forms(args: Namespace, settings: Settings) -> CommandOutput:
    classes = enumerate_reduced(args.discriminant)
    rows = []
    if classes.paired:
        rows.append({'index': 0, 'role': 'Q0', 'form': classes.principal.notation(),
                     'pretty': classes.principal.pretty()})
        for r, (q, qbar) in enumerate(classes.pairs, start=1):
            rows.append({'index': r, 'role': f'Q{r}', 'form': q.notation(), 'pretty': q.pretty()})
            rows.append({'index': r, 'role': f'conj Q{r}', 'form': qbar.notation(), 'pretty': qbar.pretty()})
    else:
        for Q in classes.reduced:
            rows.append({'index': None, 'role': '', 'form': Q.notation(), 'pretty': Q.pretty()})

    return CommandOutput(
        command='forms',
        summary={'D': classes.D.D, 'h': classes.h, 'w': units_w(classes.D), 'paired': classes.paired},
        rows=rows,
        document={'classes': classes.to_dict()},
    )


def _cross_validation(args: Namespace, settings: Settings) -> CommandOutput:
    N = args.validate
    if N < 1:
        raise InputError(f"validation order must be positive, got {N}")
    report = cross_validate(args.discriminant, N, workers=resolve_workers(settings))
    # Elapsed time goes to the log only
    report.elapsed_ms = None
    output = CommandOutput(
        command='repcount',
        summary={'D': report.D, 'order': N, 'checks_run': report.checks_run,
                 'failures': len(report.failures), 'passed': report.passed},
        rows=[failure.to_dict() for failure in report.failures],
        document={'validation': report.to_dict()},
    )
    if not report.passed:
        first = report.failures[0]
        output.exit_code = EXIT_MISMATCH
        output.message = (f"first mismatch: index {first.index}, n={first.n}: "
                          f"formula {first.got}, lattice count {first.expected}")
    return output


def cmd_repcount(args: Namespace, settings: Settings) -> CommandOutput:
    if args.validate is not None:
        return _cross_validation(args, settings)
    if args.n is None:
        raise InputError("repcount needs -n, or --validate N")

    classes = enumerate_reduced(args.discriminant)
    Q = classes.form(args.index)
    if args.n < 1:
        raise InputError(f"n must be positive, got {args.n}")

    values = {}
    if args.method in ('brute', 'both'):
        values['brute'] = rep_count_bruteforce(Q, args.n)
    if args.method in ('formula', 'both'):
        ctx = build_context(classes.D, args.n)
        values['formula'] = rep_formula(ctx, args.index, args.n)

    agree = len(set(values.values())) == 1
    output = CommandOutput(
        command='repcount',
        summary={'D': classes.D.D, 'index': args.index, 'form': Q.notation(), 'n': args.n, **values},
    )
    if not agree:
        output.exit_code = EXIT_MISMATCH
        output.message = f"mismatch: brute force {values['brute']} but formula {values['formula']}"
    return output


def cmd_fdr(args: Namespace, settings: Settings) -> CommandOutput:
    N = args.order or settings.cli.fdr_order
    t = f_dr(args.discriminant, args.index, N)
    classes = enumerate_reduced(args.discriminant)
    return CommandOutput(
        command='fdr',
        summary={'D': classes.D.D, 'r': args.index, 'order': N,
                 'Q0': classes.principal.notation(), 'Qr': classes.form(args.index).notation(),
                 'series': str(t)},
        rows=[{'n': n, 't': t[n]} for n in range(1, N + 1)],
        document={'coefficients': t.to_dict(),
                  'theta': [theta_series(Q, N).to_dict() for Q in (classes.principal, classes.form(args.index))]},
    )


def cmd_product_exponents(args: Namespace, settings: Settings) -> CommandOutput:
    N = args.order
    exponents = product_exponents(f_dr(args.discriminant, args.index, N))
    return CommandOutput(
        command='product-exponents',
        summary={'D': args.discriminant, 'r': args.index, 'order': N},
        rows=[{'n': n, 'c': cn, 'alpha': exponents.alpha[n - 1]} for n, cn in exponents.items()],
        document={'exponents': exponents.to_dict()},
    )


def cmd_eta_search(args: Namespace, settings: Settings) -> CommandOutput:
    result = eta_quotient_search(args.discriminant, cusp_form_only=not args.holomorphic)
    return CommandOutput(
        command='eta-search',
        summary={'D': result.D, 'cusp_form_only': result.cusp_form_only,
                 'solutions': len(result.solutions)},
        rows=[{'i': i, 'j': j, 'ell': ell} for (i, j), ell in zip(result.solutions, result.ell)],
    )


def cmd_schoeneberg(args: Namespace, settings: Settings) -> CommandOutput:
    D = args.discriminant
    Qs, Qr = schoeneberg_pair(D)
    if args.search:
        N = args.order or settings.classify.search_order
        result = schoeneberg_pair_search(D, N, workers=resolve_workers(settings))
        output = CommandOutput(
            command='schoeneberg',
            summary={'D': D, 'order': N, 'pair_classes': len(result.pair_classes), 'unique': result.unique},
            rows=[{'Qs': s, 'Qr': r} for s, r in result.matches],
        )
        if not result.unique:
            output.exit_code = EXIT_MISMATCH
            output.message = f"expected one pair class, found {len(result.pair_classes)}"
        return output

    N = args.order or settings.classify.identity_order
    holds = schoeneberg_identity_check(D, N)
    output = CommandOutput(
        command='schoeneberg',
        summary={'D': D, 'order': N, 'Qs': Qs.notation(), 'Qr': Qr.notation(), 'identity': holds},
    )
    if not holds:
        output.exit_code = EXIT_MISMATCH
        output.message = f"half theta difference of {Qs}, {Qr} is not eta(z)eta({D}z) to q^{N}"
    return output


def cmd_cusp(args: Namespace, settings: Settings) -> CommandOutput:
    D, r = args.discriminant, args.index
    M = args.order or 2 * D
    threshold = settings.theta.zero_threshold
    order_infinity, order_one = cusp_vanishing_orders(D, r, M, threshold)
    expansion = half_difference_at_one(D, r, M)
    lead = expansion.coefficient(1)
    rows = [{'m': m, 're': v.real, 'im': v.imag, 'abs': abs(v)}
            for m, v in sorted(expansion.terms.items()) if abs(v) > threshold][:args.terms]
    return CommandOutput(
        command='cusp',
        summary={'D': D, 'r': r, 'order_infinity': order_infinity, 'order_one': order_one,
                 'leading_abs': abs(lead), 'expected_abs': 1 / sqrt(D)},
        rows=rows,
        document={'expansion': expansion.to_dict()},
    )


def cmd_probe(args: Namespace, settings: Settings) -> CommandOutput:
    D, r = args.discriminant, args.index
    N = args.order or settings.classify.probe_order
    threshold = settings.classify.probe_threshold if args.threshold is None else args.threshold
    if threshold < 0:
        raise InputError(f"threshold must be non-negative, got {threshold}")
    probe = unboundedness_probe(D, r, N, threshold)

    summary = {'D': D, 'r': r, 'order': N, 'threshold': threshold,
               'max_c': probe.max_c, 'first_exceed': probe.first_exceed}
    if is_prime(D) and D % 4 == 3:
        summary['interior_zero_mass'] = interior_zero_mass(D)
        summary['per_cusp_zero_mass'] = per_cusp_zero_mass(D)

    rows = []
    if args.alpha is not None:
        exponents = product_exponents(f_dr(D, r, N))
        growth = weighted_divisor_growth(exponents, args.alpha)
        rows = [{'n': n, 'statistic': value} for n, value in enumerate(growth, start=1)]
        summary['alpha'] = args.alpha
        summary['max_statistic'] = max(growth) if growth else 0.0
    return CommandOutput(command='probe', summary=summary, rows=rows)


def cmd_verify(args: Namespace, settings: Settings) -> CommandOutput:
    fixtures = load_fixtures(settings.fixtures_dir())
    report = run_suite(args.suite, settings, fixtures, deterministic=args.deterministic)
    summary = {'suite': report.suite, 'passed': report.passed, 'checks': len(report.checks),
               'failed': len(report.failures)}
    if not args.deterministic:
        summary['elapsed_ms'] = report.elapsed_ms
        summary['peak_rss_mb'] = report.peak_rss_mb

    rows = []
    for check in report.checks:
        row = {'check': check.name, 'status': check.status.value, 'detail': check.detail}
        if not args.deterministic:
            row['elapsed_ms'] = check.elapsed_ms
        rows.append(row)

    output = CommandOutput(command='verify', summary=summary, rows=rows)
    first = report.first_failure()
    if first is not None:
        output.exit_code = EXIT_MISMATCH
        output.message = f"first failing check: {first.name}: {first.detail}"
    return output


COMMANDS = {
    'forms': cmd_forms,
    'repcount': cmd_repcount,
    'fdr': cmd_fdr,
    'product-exponents': cmd_product_exponents,
    'eta-search': cmd_eta_search,
    'schoeneberg': cmd_schoeneberg,
    'cusp': cmd_cusp,
    'probe': cmd_probe,
    'verify': cmd_verify,
}
