#!/usr/bin/env python3
"""
Tests for the closed representation formulas and their cross-validation
"""

import unittest
from unittest.mock import patch
import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

import pytest

from core.errors import InputError, NotApplicable, ValidationFailure, VerificationError
from models.base import Provenance
from models.forms import QuadForm
from modules.repnum import (
    build_context, eta_product_23, rep_formula, mass_formula_residual,
    difference_identity_residual, van_der_blij, cross_validate, CrossValidationReport,
)
from modules.theta import rep_count_bruteforce, theta_series


class TestContext(unittest.TestCase):
    """Assembly of forms, w and the t_j tables"""

    def test_theta_context(self):
        """One t table per conjugate pair"""
        ctx = build_context(47, 30)
        self.assertEqual(ctx.k, 2)
        self.assertEqual(len(ctx.t_tables), 2)
        self.assertEqual(ctx.w, 2)
        self.assertIs(ctx.provenance, Provenance.THETA)

    def test_eta_product_source(self):
        """For D = 23 both sources give the same t"""
        eta = build_context(23, 300, Provenance.ETA_PRODUCT)
        theta = build_context(23, 300)
        self.assertEqual(eta.t_tables, theta.t_tables)
        self.assertEqual(eta_product_23(300), eta.t_tables[0])

    def test_not_applicable(self):
        """Even class number and non-23 eta source"""
        with self.assertRaises(NotApplicable):
            build_context(20, 10)
        with self.assertRaises(NotApplicable):
            build_context(47, 10, Provenance.ETA_PRODUCT)


class TestRepFormula(unittest.TestCase):
    """a(n, Q_i) from divisor sums and t_j(n)"""

    def test_agrees_with_lattice_counts(self):
        """Formula equals the box scan for h = 3, 5, 7"""
        for D in (23, 47, 71):
            ctx = build_context(D, 80)
            for index in range(ctx.k + 1):
                Q = ctx.classes.form(index)
                for n in range(1, 81):
                    self.assertEqual(rep_formula(ctx, index, n), rep_count_bruteforce(Q, n), (D, index, n))

    def test_class_number_one(self):
        """a(n, Q_0) = w sum_{d|n} (-D|d)"""
        ctx = build_context(4, 30)
        r2 = theta_series(QuadForm(1, 0, 1), 30)
        for n in range(1, 31):
            self.assertEqual(rep_formula(ctx, 0, n), r2[n])
        self.assertEqual(rep_formula(build_context(3, 5), 0, 1), 6)

    def test_argument_ranges(self):
        """n beyond the context order and bad indices"""
        ctx = build_context(23, 10)
        with self.assertRaises(InputError):
            rep_formula(ctx, 0, 11)
        with self.assertRaises(InputError):
            rep_formula(ctx, 0, 0)
        with self.assertRaises(InputError):
            rep_formula(ctx, 2, 5)

    def test_inconsistent_tables(self):
        """A corrupted t table gives a non-integral result"""
        ctx = build_context(23, 10)
        t = list(ctx.t_tables[0].coeffs)
        t[1] += 1
        ctx.t_tables[0] = type(ctx.t_tables[0])(10, tuple(t))
        with self.assertRaises(VerificationError):
            rep_formula(ctx, 0, 1)

    def test_residuals_vanish(self):
        """Mass formula and difference identity"""
        for D in (59, 79, 283):
            ctx = build_context(D, 100)
            for n in range(1, 101):
                self.assertEqual(mass_formula_residual(ctx, n), 0, (D, n))
                for r in range(1, ctx.k + 1):
                    self.assertEqual(difference_identity_residual(ctx, r, n), 0, (D, r, n))

    def test_van_der_blij(self):
        """Known values for x^2 + xy + 6y^2 and 2x^2 + xy + 3y^2"""
        self.assertEqual(van_der_blij(1, 10), (2, 0))
        self.assertEqual(van_der_blij(2, 10), (0, 2))
        self.assertEqual(van_der_blij(6, 10), (4, 2))

    @pytest.mark.slow
    def test_van_der_blij_against_lattice(self):
        """Eta-product formula against all three forms up to n = 2000"""
        N = 2000
        q0 = theta_series(QuadForm(1, 1, 6), N)
        q1 = theta_series(QuadForm(2, 1, 3), N)
        for n in range(1, N + 1):
            self.assertEqual(van_der_blij(n, N), (q0[n], q1[n]), n)


class TestCrossValidation(unittest.TestCase):
    """Sharded comparison of formula and lattice counts"""

    def test_report(self):
        """Every index and n is checked"""
        report = cross_validate(47, 60, workers=3)
        self.assertIsInstance(report, CrossValidationReport)
        self.assertTrue(report.passed)
        self.assertEqual(report.checks_run, 3 * 60)
        self.assertIn('"failures": []', report.to_json())

    def test_mismatch_reported_and_strict(self):
        """Failures are sorted; strict mode raises on the first"""
        def off_by_one(ctx, index, n):
            return rep_count_bruteforce(ctx.classes.form(index), n) + (1 if n in (7, 3) else 0)

        with patch('modules.repnum.validation.rep_formula', side_effect=off_by_one):
            report = cross_validate(23, 10, workers=2)
            self.assertFalse(report.passed)
            self.assertEqual([(f.index, f.n) for f in report.failures], [(0, 3), (0, 7), (1, 3), (1, 7)])

            with self.assertRaises(ValidationFailure) as caught:
                cross_validate(23, 10, strict=True)
            self.assertEqual((caught.exception.index, caught.exception.n), (0, 3))
            self.assertEqual(caught.exception.exit_code, 3)

    @pytest.mark.slow
    def test_corpus_scale(self):
        """Class number 3 and 5 discriminants to n = 500"""
        for D in (23, 31, 47, 59, 79, 283):
            self.assertTrue(cross_validate(D, 500, workers=2).passed, D)


if __name__ == '__main__':
    unittest.main()
