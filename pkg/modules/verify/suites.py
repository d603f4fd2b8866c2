from math import sqrt
from typing import List, Tuple

import numpy as np
from typing_extensions import override

from core.base import BaseSuite, Check
from core.config import Settings
from core.errors import VerificationError
from models.forms import QuadForm
from models.series import IntSeries, ProductExponents
from modules.classify import (
    eta_quotient_search, schoeneberg_identity_check, schoeneberg_pair_search,
    unboundedness_probe, interior_zero_mass, first_distinguishing_value, case_one_bound,
)
from modules.ntheory import is_prime
from modules.qforms import enumerate_reduced, units_w, schoeneberg_pair, conjugate
from modules.qseries import product_exponents, expand_product, ramanujan_tau
from modules.repnum import (
    build_context, cross_validate, mass_formula_residual, difference_identity_residual,
    van_der_blij, eta_product_23,
)
from modules.theta import (
    half_theta_difference, theta_series, cusp_vanishing_orders, half_difference_at_one,
)
from .fixtures import FixtureSet

PROBE_DISCRIMINANTS = (31, 47, 59)
CUSP_DISCRIMINANTS = (23, 31, 47)
LARGE_SCHOENEBERG = (167, 191, 239)
SEARCH_DISCRIMINANTS = (23, 47, 71)


def _expect(condition: bool, message: str):
    if not condition:
        raise VerificationError(message)


def _compare_series(label: str, got: IntSeries, expected: IntSeries) -> str:
    for n in range(expected.order + 1):
        if got[n] != expected[n]:
            raise VerificationError(f"{label}: coefficient of q^{n} is {got[n]}, table has {expected[n]}")
    return f"{label} matches to q^{expected.order}"


class TablesSuite(BaseSuite):
    """Re-derive every printed form list and q-expansion and diff against the fixtures."""

    def __init__(self, fixtures: FixtureSet, workers: int = 1):
        super().__init__('tables', workers)
        self.fixtures = fixtures

    @override
    def checks(self) -> List[Tuple[str, Check]]:
        declared = []
        for row in self.fixtures.table1:
            declared.append((f"table1/D={row.D}", lambda row=row: self._schoeneberg_row(row)))
        for row in self.fixtures.table2:
            declared.append((f"table2/D={row.D}", lambda row=row: self._class_one_row(row)))
        for name, rows in (('table3', self.fixtures.table3), ('table4', self.fixtures.table4)):
            for row in rows:
                declared.append((f"{name}/D={row.D}", lambda row=row: self._class_three_row(row)))
        for row in self.fixtures.table5:
            declared.append((f"table5/D={row.D}", lambda row=row: self._class_five_row(row)))
        return declared

    def _schoeneberg_row(self, row) -> str:
        pair = schoeneberg_pair(row.D)
        _expect(pair == (row.s_form, row.r_form),
                f"D={row.D}: computed pair {pair[0]}, {pair[1]} differs from {row.s_form}, {row.r_form}")
        return f"({row.s_form}, {row.r_form})"

    def _class_one_row(self, row) -> str:
        classes = enumerate_reduced(row.D)
        _expect(classes.h == 1, f"D={row.D}: class number {classes.h}, table says 1")
        _expect(classes.principal == row.form, f"D={row.D}: form {classes.principal}, table has {row.form}")
        _expect(units_w(row.D) == row.w, f"D={row.D}: w={units_w(row.D)}, table has {row.w}")
        return f"h=1, {row.form}, w={row.w}"

    def _check_forms(self, D: int, h: int, printed: List[QuadForm]):
        classes = enumerate_reduced(D)
        _expect(classes.h == h, f"D={D}: class number {classes.h}, table says {h}")
        computed = [classes.form(i) for i in range(len(printed))]
        _expect(computed == printed,
                f"D={D}: forms {', '.join(map(str, computed))}, table has {', '.join(map(str, printed))}")

    def _class_three_row(self, row) -> str:
        self._check_forms(row.D, 3, [row.Q0, row.Q1])
        got = half_theta_difference(row.Q0, row.Q1, row.order)
        return _compare_series(f"F_(D={row.D},1)", got, row.expansion())

    def _class_five_row(self, row) -> str:
        self._check_forms(row.D, 5, [row.Q0, row.Q1, row.Q2])
        details = []
        for r, Qr in ((1, row.Q1), (2, row.Q2)):
            expected = row.expansion(r)
            got = half_theta_difference(row.Q0, Qr, expected.order)
            details.append(_compare_series(f"F_(D={row.D},{r})", got, expected))
        return "; ".join(details)


class IdentitiesSuite(BaseSuite):
    """Representation formulas, product expansions and classification claims against independent oracles."""

    def __init__(self, fixtures: FixtureSet, settings: Settings, workers: int = 1):
        super().__init__('identities', workers)
        self.fixtures = fixtures
        self.settings = settings

    @override
    def checks(self) -> List[Tuple[str, Check]]:
        declared = []
        corpus = self.fixtures.corpus()
        for D in corpus:
            declared.append((f"dual-oracle/D={D}", lambda D=D: self._dual_oracle(D)))
            declared.append((f"mass-formula/D={D}", lambda D=D: self._mass_formula(D)))
            if enumerate_reduced(D).k:
                declared.append((f"difference-identity/D={D}", lambda D=D: self._difference_identity(D)))
        declared.append(("van-der-blij", self._van_der_blij))
        declared.append(("tau-congruence", self._tau_congruence))
        declared.append(("product-exponents/D=23", self._product_exponents_23))
        declared.append(("eta-search", self._eta_search))
        for D in [row.D for row in self.fixtures.table1] + list(LARGE_SCHOENEBERG):
            declared.append((f"schoeneberg-identity/D={D}", lambda D=D: self._schoeneberg_identity(D)))
        for D in SEARCH_DISCRIMINANTS:
            declared.append((f"schoeneberg-search/D={D}", lambda D=D: self._schoeneberg_search(D)))
        for D in CUSP_DISCRIMINANTS:
            declared.append((f"cusp-orders/D={D}", lambda D=D: self._cusp_orders(D)))
        for D in PROBE_DISCRIMINANTS:
            declared.append((f"unboundedness/D={D}", lambda D=D: self._unboundedness(D)))
        declared.append(("round-trip/tables", self._round_trip_tables))
        declared.append(("round-trip/random", self._round_trip_random))
        declared.append(("interior-zero-mass", self._interior_zero_mass))
        return declared

    def _dual_oracle(self, D: int) -> str:
        N = self.settings.repnum.validation_order
        report = cross_validate(D, N)
        if not report.passed:
            first = report.failures[0]
            raise VerificationError(f"D={D}: index {first.index}, n={first.n}: formula {first.got}, "
                                    f"lattice {first.expected}")
        return f"{report.checks_run} values agree"

    def _mass_formula(self, D: int) -> str:
        N = self.settings.repnum.validation_order
        ctx = build_context(D, N)
        for n in range(1, N + 1):
            residual = mass_formula_residual(ctx, n)
            _expect(residual == 0, f"D={D}, n={n}: mass formula residual {residual}")
        return f"residual 0 for n <= {N}"

    def _difference_identity(self, D: int) -> str:
        N = self.settings.repnum.validation_order
        ctx = build_context(D, N)
        for r in range(1, ctx.k + 1):
            for n in range(1, N + 1):
                residual = difference_identity_residual(ctx, r, n)
                _expect(residual == 0, f"D={D}, r={r}, n={n}: residual {residual}")
        return f"a(n,Q_0) - a(n,Q_r) = 2 t_r(n) for r <= {ctx.k}, n <= {N}"

    def _van_der_blij(self) -> str:
        N = self.settings.verify.van_der_blij_order
        q0 = theta_series(QuadForm(1, 1, 6), N)
        q1 = theta_series(QuadForm(2, 1, 3), N)
        q1bar = theta_series(QuadForm(2, -1, 3), N)
        for n in range(1, N + 1):
            a0, a1 = van_der_blij(n, N)
            _expect(a0 == q0[n], f"n={n}: formula gives a(n,Q_0)={a0}, lattice count {q0[n]}")
            _expect(a1 == q1[n] == q1bar[n],
                    f"n={n}: formula gives a(n,Q_1)={a1}, lattice counts {q1[n]}, {q1bar[n]}")
        return f"three forms agree for n <= {N}"

    def _tau_congruence(self) -> str:
        N = self.settings.verify.tau_order
        t = eta_product_23(N)
        tau = ramanujan_tau(N)
        for n in range(1, N + 1):
            _expect((t[n] - tau[n]) % 23 == 0, f"n={n}: t(n)={t[n]} and tau(n)={tau[n]} differ mod 23")
        return f"t(n) = tau(n) mod 23 for n <= {N}"

    def _product_exponents_23(self) -> str:
        N = self.settings.verify.product_order
        exponents = product_exponents(eta_product_23(N + 1))
        for n, cn in exponents.items():
            expected = 2 if n % 23 == 0 else 1
            _expect(cn == expected, f"c({n}) = {cn}, expected {expected}")
        return f"c(n) in {{1, 2}} pattern for n <= {N}"

    def _eta_search(self) -> str:
        primes = [p for p in range(3, 500) if is_prime(p)]
        for p in primes:
            result = eta_quotient_search(p, cusp_form_only=True)
            expected = [(1, 1)] if p % 24 == 23 else []
            _expect(result.solutions == expected, f"D={p}: solutions {result.solutions}, expected {expected}")
        return f"{len(primes)} primes"

    def _schoeneberg_identity(self, D: int) -> str:
        N = self.settings.classify.identity_order
        _expect(schoeneberg_identity_check(D, N), f"D={D}: half theta difference differs from eta(z)eta({D}z)")
        return f"identity holds to q^{N}"

    def _schoeneberg_search(self, D: int) -> str:
        N = self.settings.classify.search_order
        result = schoeneberg_pair_search(D, N)
        Qs, Qr = schoeneberg_pair(D)
        expected = [(Qs.theta_key, Qr.theta_key)]
        _expect(result.pair_classes == expected,
                f"D={D}: pair classes {result.pair_classes}, expected {expected}")
        for s, r in result.matches:
            first = first_distinguishing_value(QuadForm.parse(s), QuadForm.parse(r), N)
            _expect(first == (D + 1) // 24, f"D={D}: ({s}), ({r}) first differ at {first}")
            if QuadForm.parse(s).a != 6:
                _expect(D <= case_one_bound(), f"D={D}: pair ({s}), ({r}) lies outside the a < a' bound")
        _expect(half_theta_difference(Qs, conjugate(Qr), N) == half_theta_difference(Qs, Qr, N),
                f"D={D}: conjugating Q_r changes the half difference")
        return f"{len(result.matches)} ordered matches in one class"

    def _cusp_orders(self, D: int) -> str:
        threshold = self.settings.theta.zero_threshold
        classes = enumerate_reduced(D)
        bound = 2 * D
        for r in range(1, classes.k + 1):
            orders = cusp_vanishing_orders(D, r, bound, threshold)
            _expect(orders == (1, 1), f"D={D}, r={r}: orders {orders}")
            lead = abs(half_difference_at_one(D, r, bound).coefficient(1))
            _expect(abs(lead - 1 / sqrt(D)) < threshold,
                    f"D={D}, r={r}: leading coefficient magnitude {lead}, expected {1 / sqrt(D)}")
        return f"(1, 1) for r <= {classes.k}"

    def _unboundedness(self, D: int) -> str:
        probe = unboundedness_probe(D, 1, self.settings.classify.probe_order,
                                    self.settings.classify.probe_threshold)
        _expect(probe.first_exceed is not None,
                f"D={D}: max |c(n)| = {probe.max_c} stays within {probe.threshold}")
        return f"|c({probe.first_exceed})| > {probe.threshold}, max {probe.max_c}"

    def _round_trip_tables(self) -> str:
        N = 100
        count = 0
        rows = [(row.D, 1) for row in self.fixtures.table3 + self.fixtures.table4]
        rows += [(row.D, r) for row in self.fixtures.table5 for r in (1, 2)]
        for D, r in rows:
            classes = enumerate_reduced(D)
            t = half_theta_difference(classes.principal, classes.form(r), N)
            back = expand_product(product_exponents(t), N)
            _expect(back == t, f"D={D}, r={r}: expand_product(product_exponents(F)) differs")
            count += 1
        return f"{count} series"

    def _round_trip_random(self) -> str:
        rng = np.random.default_rng(23)
        for trial in range(100):
            N = int(rng.integers(2, 65))
            c = [int(v) for v in rng.integers(-3, 4, size=N - 1)]
            exponents = ProductExponents.from_exponents(N, c)
            recovered = product_exponents(expand_product(exponents, N))
            _expect(list(recovered.c) == c, f"trial {trial}: exponents {c} came back as {list(recovered.c)}")
        return "100 random exponent vectors"

    def _interior_zero_mass(self) -> str:
        _expect(interior_zero_mass(23) == 0, "D=23: interior zero mass is not 0")
        primes = [p for p in range(24, 500) if is_prime(p) and p % 4 == 3]
        for p in primes:
            _expect(interior_zero_mass(p) > 0, f"D={p}: interior zero mass is not positive")
        return f"0 at D=23, positive for {len(primes)} larger primes"
