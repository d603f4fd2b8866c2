#!/usr/bin/env python3
"""
Tests for discriminant validation, reduction and class enumeration
"""

import unittest
import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

import pytest
from hypothesis import given, settings, strategies as st
from sympy import isprime

from core.errors import InputError, NotADiscriminant, NotFundamental, NotApplicable, WrongResidue
from models.forms import QuadForm, Discriminant
from modules.qforms import (
    is_fundamental, as_discriminant, is_reduced, reduce, conjugate, principal_form,
    enumerate_reduced, class_number, units_w, min_nonzero_values, odd_class_number_census,
    schoeneberg_pair, SMALL_SCHOENEBERG_PAIRS,
)

CLASS_NUMBER_ONE = [3, 4, 7, 8, 11, 19, 43, 67, 163]


def _transform(Q: QuadForm, p: int, q: int, r: int, s: int) -> QuadForm:
    # Q(px + qy, rx + sy)
    return QuadForm(Q(p, r), 2 * Q.a * p * q + Q.b * (p * s + q * r) + 2 * Q.c * r * s, Q(q, s))


@st.composite
def sl2z(draw):
    """Words in T^k and S, which generate SL_2(Z)."""
    p, q, r, s = 1, 0, 0, 1
    for k in draw(st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=6)):
        p, q, r, s = p, p * k + q, r, r * k + s
        p, q, r, s = q, -p, s, -r
    return p, q, r, s


class TestDiscriminants(unittest.TestCase):
    """Validation of negative fundamental discriminants"""

    def test_fundamental_accepted(self):
        """Odd squarefree and the even families 4m are accepted"""
        for D in (3, 4, 7, 8, 15, 20, 23, 24, 47, 163):
            disc = is_fundamental(-D)
            self.assertIsInstance(disc, Discriminant)
            self.assertEqual(int(disc), D)
            self.assertEqual(disc.value, -D)

    def test_not_a_discriminant(self):
        """Wrong residue or sign raises NotADiscriminant"""
        for negD in (-1, -2, -5, -6, 0, 5):
            with self.assertRaises(NotADiscriminant):
                is_fundamental(negD)

    def test_not_fundamental(self):
        """Square factors raise NotFundamental"""
        for negD in (-12, -16, -27, -75, -99):
            with self.assertRaises(NotFundamental):
                is_fundamental(negD)

    def test_as_discriminant(self):
        """Magnitudes are validated, carriers pass through"""
        disc = as_discriminant(23)
        self.assertIs(as_discriminant(disc), disc)
        with self.assertRaises(NotADiscriminant):
            as_discriminant(-23)
        self.assertTrue(issubclass(NotFundamental, ValueError))


class TestReduction(unittest.TestCase):
    """Reduction to the unique reduced representative"""

    def test_reduced_predicate(self):
        """Boundary cases of the reduction conditions"""
        self.assertTrue(is_reduced(QuadForm(2, 1, 3)))
        self.assertTrue(is_reduced(QuadForm(2, -1, 3)))
        self.assertFalse(is_reduced(QuadForm(2, -2, 3)))
        self.assertFalse(is_reduced(QuadForm(3, -1, 3)))
        self.assertFalse(is_reduced(QuadForm(3, 1, 2)))

    def test_reduce_known_forms(self):
        """Hand-reduced examples"""
        self.assertEqual(reduce(QuadForm(6, 1, 1)), QuadForm(1, 1, 6))
        self.assertEqual(reduce(QuadForm(3, -1, 2)), QuadForm(2, 1, 3))
        self.assertEqual(reduce(QuadForm(3, 5, 4)), QuadForm(2, 1, 3))

    def test_reduce_rejects_indefinite(self):
        """Only positive definite forms are reduced"""
        with self.assertRaises(InputError):
            reduce(QuadForm(1, 3, 1))

    @settings(max_examples=150, deadline=None)
    @given(sl2z(), st.sampled_from([23, 47, 71, 167]))
    def test_reduction_is_invariant(self, matrix, D):
        """A reduced form survives any SL_2(Z) change of variables"""
        for Q in enumerate_reduced(D).forms():
            moved = _transform(Q, *matrix)
            self.assertEqual(moved.discriminant, -D)
            self.assertEqual(reduce(moved), Q)

    def test_principal_form(self):
        """x^2 + xy + (1+D)/4 y^2 for odd D, x^2 + D/4 y^2 for even D"""
        self.assertEqual(principal_form(23), QuadForm(1, 1, 6))
        self.assertEqual(principal_form(20), QuadForm(1, 0, 5))
        self.assertEqual(conjugate(QuadForm(2, 1, 3)), QuadForm(2, -1, 3))


class TestEnumeration(unittest.TestCase):
    """Class lists ordered as principal form plus conjugate pairs"""

    def test_class_number_one(self):
        """The nine discriminants of class number one"""
        for D in CLASS_NUMBER_ONE:
            classes = enumerate_reduced(D)
            self.assertEqual(classes.h, 1, D)
            self.assertEqual(classes.k, 0)
            self.assertEqual(classes.forms(), [principal_form(D)])

    def test_pairs_for_47(self):
        """h(-47) = 5 with pairs ordered by leading coefficient"""
        classes = enumerate_reduced(47)
        self.assertEqual(classes.h, 5)
        self.assertEqual(classes.principal, QuadForm(1, 1, 12))
        self.assertEqual(classes.pairs, [(QuadForm(2, 1, 6), QuadForm(2, -1, 6)),
                                         (QuadForm(3, 1, 4), QuadForm(3, -1, 4))])
        self.assertEqual(classes.form(2), QuadForm(3, 1, 4))
        self.assertEqual(classes.to_dict()['forms'],
                         ['1,1,12', '2,1,6', '2,-1,6', '3,1,4', '3,-1,4'])

    def test_form_index_bounds(self):
        """Indices beyond k are rejected"""
        classes = enumerate_reduced(23)
        with self.assertRaises(InputError):
            classes.form(2)
        with self.assertRaises(InputError):
            classes.form(-1)

    def test_even_class_number(self):
        """Even h leaves the list unpaired"""
        classes = enumerate_reduced(20)
        self.assertFalse(classes.paired)
        self.assertEqual(classes.h, 2)
        self.assertEqual(classes.pairs, [])
        self.assertEqual(classes.form(0), QuadForm(1, 0, 5))
        with self.assertRaises(InputError):
            classes.form(1)

    def test_known_class_numbers(self):
        """A few tabulated class numbers"""
        expected = {15: 2, 23: 3, 47: 5, 71: 7, 56: 4, 283: 3, 199: 9}
        for D, h in expected.items():
            self.assertEqual(class_number(D), h, D)

    def test_units(self):
        """w is 6, 4 and otherwise 2"""
        self.assertEqual(units_w(3), 6)
        self.assertEqual(units_w(4), 4)
        self.assertEqual(units_w(23), 2)

    def test_min_nonzero_values(self):
        """Minimum values of a non-principal reduced form"""
        self.assertEqual(min_nonzero_values(QuadForm(2, 1, 3)), (2, 3))
        with self.assertRaises(NotApplicable):
            min_nonzero_values(QuadForm(1, 1, 6))
        with self.assertRaises(NotApplicable):
            min_nonzero_values(QuadForm(3, 5, 4))

    def test_odd_class_number_census(self):
        """Odd h occurs only for prime D and D in {4, 8}"""
        census = odd_class_number_census(300)
        self.assertTrue(all(flag for _, _, flag in census))
        self.assertEqual([D for D, h, _ in census if h == 1], CLASS_NUMBER_ONE)
        self.assertIn((23, 3, True), census)

    @pytest.mark.slow
    def test_odd_class_number_parity_to_3000(self):
        """Odd h exactly for prime D = 3 mod 4 and for D = 4, 8"""
        census = odd_class_number_census(3000)
        expected = [4, 8] + [p for p in range(3, 3001) if p % 4 == 3 and isprime(p)]
        self.assertEqual([D for D, _, _ in census], sorted(expected))
        self.assertTrue(all(flag for _, _, flag in census))


class TestSchoenebergPairs(unittest.TestCase):
    """The distinguished pair for D = 23 mod 24"""

    def test_small_pairs(self):
        """Tabulated pairs for (D+1)/24 < 6 are reduced forms of discriminant -D"""
        for D, (Qs, Qr) in SMALL_SCHOENEBERG_PAIRS.items():
            self.assertEqual(schoeneberg_pair(D), (Qs, Qr))
            for Q in (Qs, Qr):
                self.assertEqual(Q.discriminant, -D)
                self.assertTrue(is_reduced(Q))

    def test_general_pair(self):
        """(6, 1, (D+1)/24) and (6, 5, (D+25)/24) from D = 143 on"""
        self.assertEqual(schoeneberg_pair(167), (QuadForm(6, 1, 7), QuadForm(6, 5, 8)))
        self.assertEqual(schoeneberg_pair(239), (QuadForm(6, 1, 10), QuadForm(6, 5, 11)))

    def test_wrong_residue(self):
        """Other residues raise WrongResidue"""
        for D in (24, 31, 47 + 12):
            with self.assertRaises(WrongResidue):
                schoeneberg_pair(D)


class TestQuadFormModel(unittest.TestCase):
    """The QuadForm carrier"""

    def test_parse_and_notation(self):
        """Both 'a,b,c' and '(a, b, c)' are accepted"""
        self.assertEqual(QuadForm.parse("(2, -1, 3)"), QuadForm(2, -1, 3))
        self.assertEqual(QuadForm.parse("1,1,6").notation(), "1,1,6")
        with self.assertRaises(InputError):
            QuadForm.parse("1,2")
        with self.assertRaises(InputError):
            QuadForm.parse("1,x,2")

    def test_pretty(self):
        """Polynomial rendering"""
        self.assertEqual(QuadForm(1, 1, 6).pretty(), "x^2+xy+6y^2")
        self.assertEqual(QuadForm(2, -1, 3).pretty(), "2x^2-xy+3y^2")
        self.assertEqual(QuadForm(1, 0, 5).pretty(), "x^2+5y^2")

    def test_properties(self):
        """Discriminant, definiteness, primitivity and value"""
        Q = QuadForm(2, 1, 3)
        self.assertEqual(Q.discriminant, -23)
        self.assertTrue(Q.is_positive_definite)
        self.assertFalse(QuadForm(2, 2, 4).is_primitive)
        self.assertEqual(Q(1, -1), 4)
        self.assertEqual(QuadForm(2, -1, 3).theta_key, Q.theta_key)


if __name__ == '__main__':
    unittest.main()
