#!/usr/bin/env python3
"""
Tests for the classification searches and the growth probe
"""

import unittest
import sys
import os
from fractions import Fraction
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

import pytest

from core.errors import InputError, NotApplicable, WrongResidue
from models.forms import QuadForm
from modules.classify import (
    eta_quotient_search, eta_product, schoeneberg_identity_check, schoeneberg_pair_search,
    first_distinguishing_value, case_one_bound, admissible_pair, unboundedness_probe, gamma1_index,
    total_zero_mass, cusp_count, interior_zero_mass, per_cusp_zero_mass,
)
from modules.ntheory import is_prime


class TestEtaQuotientSearch(unittest.TestCase):
    """eta(z)^i eta(Dz)^j of weight one"""

    def test_unique_solution_at_23_mod_24(self):
        """Only D = 23 mod 24 admits a cusp form, and only (1, 1)"""
        for p in filter(is_prime, range(3, 300)):
            result = eta_quotient_search(p)
            self.assertEqual(result.solutions, [(1, 1)] if p % 24 == 23 else [], p)

    def test_ell_label(self):
        """(1, 1) corresponds to i = 6l + 1 with l = 0"""
        result = eta_quotient_search(47)
        self.assertEqual(result.ell, [0])
        self.assertIn('"cusp_form_only": true', result.to_json())

    def test_holomorphic_relaxation(self):
        """Allowing order 0 keeps (1, 1)"""
        self.assertIn((1, 1), eta_quotient_search(23, cusp_form_only=False).solutions)

    def test_composite_rejected(self):
        """The level must be prime"""
        with self.assertRaises(InputError):
            eta_quotient_search(25)
        with self.assertRaises(InputError):
            eta_quotient_search(2)


class TestSchoenebergPairs(unittest.TestCase):
    """The identity (Theta_s - Theta_r)/2 = eta(z) eta(Dz) and its uniqueness"""

    def test_identity(self):
        """Holds for small and general pairs"""
        for D in (23, 47, 71, 167, 191):
            self.assertTrue(schoeneberg_identity_check(D, 400), D)

    def test_eta_product_shape(self):
        """eta(z) eta(47z) = q^2 - q^3 - q^4 + ... since the lead exponent is 48/24"""
        t = eta_product(47, 50)
        self.assertEqual((t[0], t[1], t[2], t[3], t[4]), (0, 0, 1, -1, -1))
        self.assertEqual(t.valuation(), 2)

    def test_search_is_unique(self):
        """Four ordered matches collapse to one class"""
        result = schoeneberg_pair_search(47, 150, workers=2)
        self.assertTrue(result.unique)
        self.assertEqual(result.pair_classes, [((2, 1, 6), (3, 1, 4))])
        self.assertEqual(len(result.matches), 4)

    def test_first_distinguishing_value(self):
        """The pair first differs at (D+1)/24"""
        self.assertEqual(first_distinguishing_value(QuadForm(1, 1, 6), QuadForm(2, 1, 3), 50), 1)
        self.assertEqual(first_distinguishing_value(QuadForm(6, 1, 7), QuadForm(6, 5, 8), 50), 7)
        self.assertIsNone(first_distinguishing_value(QuadForm(3, 1, 4), QuadForm(3, -1, 4), 50))

    def test_search_preconditions(self):
        """Residue and primality"""
        with self.assertRaises(WrongResidue):
            schoeneberg_pair_search(31, 10)
        with self.assertRaises(NotApplicable):
            schoeneberg_pair_search(95, 10)

    def test_case_one_bound(self):
        """Largest D with (D+1)^2 <= 192 D"""
        bound = case_one_bound()
        self.assertEqual(bound, 189)
        self.assertLessEqual((bound + 1) ** 2, 192 * bound)
        self.assertGreater((bound + 2) ** 2, 192 * (bound + 1))

    def test_admissible_pair(self):
        """Different leading coefficients need Qs.a = (D+1)/24 < Qr.a and D <= 189"""
        self.assertTrue(admissible_pair(QuadForm(2, 1, 6), QuadForm(3, 1, 4), 47, 100))
        self.assertFalse(admissible_pair(QuadForm(3, 1, 4), QuadForm(2, 1, 6), 47, 100))
        self.assertFalse(admissible_pair(QuadForm(1, 1, 12), QuadForm(3, 1, 4), 47, 100))
        self.assertTrue(admissible_pair(QuadForm(3, 1, 4), QuadForm(3, -1, 4), 47, 100))
        self.assertFalse(admissible_pair(QuadForm(4, 3, 11), QuadForm(6, 1, 7), 167, 100))
        # Above the bound only equal leading coefficients remain
        self.assertFalse(admissible_pair(QuadForm(2, 1, 24), QuadForm(3, 1, 16), 191, 100))
        self.assertTrue(admissible_pair(QuadForm(6, 1, 7), QuadForm(6, 5, 8), 167, 100))
        # Too short a series to decide
        self.assertTrue(admissible_pair(QuadForm(3, 1, 4), QuadForm(2, 1, 6), 47, 2))

    def test_pruned_search_matches_exhaustive(self):
        """Pruning discards candidates without losing a match"""
        for D in (47, 71, 167):
            pruned = schoeneberg_pair_search(D, 120)
            full = schoeneberg_pair_search(D, 120, prune=False)
            self.assertEqual(pruned.matches, full.matches, D)
            self.assertEqual(pruned.pair_classes, full.pair_classes, D)
            self.assertGreater(pruned.pruned, 0, D)
            self.assertEqual(full.pruned, 0, D)

    def test_pruned_count_at_47(self):
        """Of the 20 ordered pairs at D = 47 only the 4 matches reach the full comparison"""
        result = schoeneberg_pair_search(47, 120)
        self.assertEqual(len(result.matches), 4)
        self.assertEqual(result.pruned, 16)

    @pytest.mark.slow
    def test_search_to_acceptance_order(self):
        """Uniqueness for D = 23, 47, 71 to q^500"""
        for D in (23, 47, 71):
            self.assertTrue(schoeneberg_pair_search(D, 500).unique, D)


class TestGrowth(unittest.TestCase):
    """Zero counting and the unboundedness probe"""

    def test_zero_masses(self):
        """Interior zero mass vanishes only at D = 23"""
        self.assertEqual(gamma1_index(23), 264)
        self.assertEqual(total_zero_mass(23), 22)
        self.assertEqual(cusp_count(23), 22)
        self.assertEqual(interior_zero_mass(23), 0)
        self.assertEqual(interior_zero_mass(31), 10)
        self.assertEqual(per_cusp_zero_mass(47), 1)
        self.assertEqual(per_cusp_zero_mass(31), Fraction(1, 3))

    def test_zero_mass_needs_prime_level(self):
        """Composite or 1 mod 4 levels are rejected"""
        for D in (20, 35, 29):
            with self.assertRaises(NotApplicable):
                interior_zero_mass(D)

    def test_bounded_at_23(self):
        """c(n) stays in {1, 2} for D = 23"""
        probe = unboundedness_probe(23, 1, 200, 2)
        self.assertEqual(probe.max_c, 2)
        self.assertIsNone(probe.first_exceed)

    @pytest.mark.slow
    def test_unbounded_elsewhere(self):
        """|c(n)| passes 10 below n = 300 for D = 31, 47, 59"""
        for D in (31, 47, 59):
            probe = unboundedness_probe(D, 1, 300, 10)
            self.assertIsNotNone(probe.first_exceed, D)


if __name__ == '__main__':
    unittest.main()
