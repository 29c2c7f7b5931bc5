"""
# -*- coding: utf-8 -*-
# ===============================================================================
#
# Copyright (C) 2013/2017 Laurent Labatut / Laurent Champagnac
#
#
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301, USA
# ===============================================================================
"""

import itertools
import logging
import unittest

import numpy as np
from pysolbase.SolBase import SolBase

from pysolrankcodes.Errors.RankCodeErrors import UsageException
from pysolrankcodes.Gf.ExtElement import ExtElement
from pysolrankcodes.Gf.FieldSpec import FieldSpec
from pysolrankcodes.LinAlg.LinAlg import LinAlg

SolBase.logging_init(log_level="INFO", force_reset=True)
logger = logging.getLogger(__name__)


class TestGf(unittest.TestCase):
    """
    Test description
    """

    # noinspection PyPep8Naming
    def setUp(self):
        """
        Setup (called before each test)
        """

        self.rng = np.random.default_rng(1234)
        self.gf4 = FieldSpec(2, 2)
        self.gf8 = FieldSpec(2, 3)
        self.gf9 = FieldSpec(3, 2)

    # noinspection PyPep8Naming
    def tearDown(self):
        """
        Setup (called after each test)
        """

        pass

    def _random_element(self, fs):
        return ExtElement.from_int(fs, int(self.rng.integers(0, fs.order)))

    def test_field_spec_default_modulus(self):
        """
        Test
        """

        self.assertEqual(self.gf4.modulus_poly, (1, 1, 1))
        self.assertEqual(self.gf8.modulus_poly, (1, 1, 0, 1))
        self.assertEqual(self.gf8.order, 8)
        self.assertEqual(FieldSpec(2, 4).to_text(), "gf:p=2,m=4,poly=11001")

    def test_field_spec_text(self):
        """
        Test
        """

        fs = FieldSpec.from_text("gf:p=2,m=4,poly=10011")
        self.assertEqual(fs.p, 2)
        self.assertEqual(fs.m, 4)
        self.assertEqual(fs.modulus_poly, (1, 0, 0, 1, 1))
        self.assertEqual(fs.to_text(), "gf:p=2,m=4,poly=10011")
        self.assertEqual(FieldSpec.from_text(fs.to_text()), fs)
        self.assertNotEqual(fs, FieldSpec(2, 4))

        fs = FieldSpec.from_text("gf:p=3,m=2")
        self.assertEqual(fs, self.gf9)

    def test_field_spec_invalid(self):
        """
        Test
        """

        self.assertRaises(UsageException, FieldSpec, 4, 2)
        self.assertRaises(UsageException, FieldSpec, 2, 0)
        # x^2+1 = (x+1)^2 over GF(2)
        self.assertRaises(UsageException, FieldSpec, 2, 2, "101")
        # Degree mismatch
        self.assertRaises(UsageException, FieldSpec, 2, 3, "111")
        self.assertRaises(UsageException, FieldSpec.from_text, "p=2,m=3")
        self.assertRaises(UsageException, FieldSpec.from_text, "gf:p=2")

    def test_add(self):
        """
        Test
        """

        a = ExtElement(self.gf8, (1, 0, 1))
        b = ExtElement(self.gf8, (1, 1, 0))
        self.assertEqual((a + b).coeffs, (0, 1, 1))
        self.assertEqual(a + ExtElement.zero(self.gf8), a)
        self.assertEqual((a - a), ExtElement.zero(self.gf8))

        a = ExtElement(self.gf9, (2, 1))
        b = ExtElement(self.gf9, (2, 2))
        self.assertEqual((a + b).coeffs, (1, 0))
        self.assertEqual((a + (-a)), ExtElement.zero(self.gf9))

    def test_field_mismatch(self):
        """
        Test
        """

        a = ExtElement.one(self.gf8)
        b = ExtElement.one(self.gf4)
        self.assertRaises(UsageException, a.add, b)
        self.assertRaises(UsageException, a.mul, b)
        self.assertRaises(UsageException, ExtElement, self.gf8, (1, 0))
        self.assertRaises(UsageException, ExtElement, self.gf8, (2, 0, 0))

    def test_mul(self):
        """
        Test
        """

        x = ExtElement.x_power(self.gf4, 1)
        self.assertEqual(x.coeffs, (0, 1))
        self.assertEqual((x * x).coeffs, (1, 1))

        for fs in (self.gf4, self.gf8, self.gf9):
            one = ExtElement.one(fs)
            zero = ExtElement.zero(fs)
            for v in range(fs.order):
                a = ExtElement.from_int(fs, v)
                self.assertEqual(a * one, a)
                self.assertEqual(a * zero, zero)

    def test_field_axioms(self):
        """
        Test
        """

        for fs in (self.gf8, self.gf9, FieldSpec(5, 2), FieldSpec(2, 5)):
            for _ in range(50):
                a = self._random_element(fs)
                b = self._random_element(fs)
                c = self._random_element(fs)
                self.assertEqual((a * b) * c, a * (b * c))
                self.assertEqual((a + b) + c, a + (b + c))
                self.assertEqual(a * (b + c), a * b + a * c)
                self.assertEqual(a * b, b * a)
                if not a.is_zero():
                    self.assertEqual(a * a.inverse(), ExtElement.one(fs))

        self.assertRaises(UsageException, ExtElement.zero(self.gf8).inverse)

    def test_pow(self):
        """
        Test
        """

        for v in range(1, self.gf8.order):
            a = ExtElement.from_int(self.gf8, v)
            self.assertEqual(a.pow(7), ExtElement.one(self.gf8))
            self.assertEqual(a.pow(-1), a.inverse())
        self.assertEqual(ExtElement.x_power(self.gf8, 3), ExtElement(self.gf8, (1, 1, 0)))

    def test_frobenius_pow(self):
        """
        Test
        """

        x = ExtElement.x_power(self.gf8, 1)
        self.assertEqual(x.frobenius_pow(0, 1), x)
        self.assertEqual(x.frobenius_pow(1, 1), x * x)
        self.assertEqual(x.frobenius_pow(1, 1).coeffs, (0, 0, 1))
        self.assertEqual(x.frobenius_pow(3, 1), x)

        # Base field is fixed
        for fs in (self.gf8, self.gf9):
            for c in range(fs.p):
                a = ExtElement.from_int(fs, c)
                self.assertEqual(a.frobenius_pow(1, 1), a)

        # Ring homomorphism
        for _ in range(50):
            a = self._random_element(self.gf9)
            b = self._random_element(self.gf9)
            self.assertEqual((a + b).frobenius_pow(1, 1), a.frobenius_pow(1, 1) + b.frobenius_pow(1, 1))
            self.assertEqual((a * b).frobenius_pow(1, 1), a.frobenius_pow(1, 1) * b.frobenius_pow(1, 1))

        # a must be coprime to m
        fs = FieldSpec(2, 4)
        self.assertRaises(UsageException, ExtElement.one(fs).frobenius_pow, 1, 2)
        self.assertEqual(ExtElement.x_power(fs, 1).frobenius_pow(1, 3), ExtElement.x_power(fs, 8))

    def test_vec_to_matrix(self):
        """
        Test
        """

        zero = [ExtElement.zero(self.gf8)] * 3
        self.assertTrue(self.gf8.vec_to_matrix(zero).is_zero())

        x = ExtElement.x_power(self.gf8, 1)
        mat = self.gf8.vec_to_matrix([x])
        self.assertEqual((mat.rows, mat.cols), (3, 1))
        self.assertEqual(mat.entries[:, 0].tolist(), [0, 1, 0])

        # 1, x, x^2 are independent over GF(2)
        v = [ExtElement.x_power(self.gf8, i) for i in range(3)]
        self.assertEqual(LinAlg.rank(self.gf8.vec_to_matrix(v)), 3)
        # 1, x, 1+x are not
        v = [ExtElement.one(self.gf8), x, x + ExtElement.one(self.gf8)]
        self.assertEqual(LinAlg.rank(self.gf8.vec_to_matrix(v)), 2)

    def test_matrix_round_trip(self):
        """
        Test
        """

        # Exhaustive on GF(4)^2 and GF(9)^2
        for fs in (self.gf4, self.gf9):
            for a, b in itertools.product(range(fs.order), repeat=2):
                v = [ExtElement.from_int(fs, a), ExtElement.from_int(fs, b)]
                self.assertEqual(fs.matrix_to_vec(fs.vec_to_matrix(v)), v)

        self.assertRaises(UsageException, self.gf8.vec_to_matrix, [ExtElement.one(self.gf4)])

    def test_columns_view(self):
        """
        Test
        """

        arr = self.gf9.gf(self.rng.integers(0, 9, size=(5, 4)))
        cols = self.gf9.elements_to_columns(arr)
        self.assertEqual(cols.shape, (5, 2, 4))
        back = self.gf9.columns_to_elements(cols)
        self.assertTrue(np.array_equal(np.asarray(back), np.asarray(arr)))

        # Frobenius on arrays agrees with the element view
        frob = self.gf9.frobenius(arr, 1)
        a = ExtElement.from_int(self.gf9, int(arr[0, 0]))
        self.assertEqual(int(frob[0, 0]), a.frobenius_pow(1).to_int())
