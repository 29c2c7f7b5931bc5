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

import logging
import unittest

from pysolbase.SolBase import SolBase

from pysolrankcodes.Bounds.Bounds import AcValue
from pysolrankcodes.Cdc.CdcConversion import CdcConversion
from pysolrankcodes.Cdc.CdcReports import CdcReports
from pysolrankcodes.Cdc.ConstantDimensionCode import ConstantDimensionCode
from pysolrankcodes.Errors.RankCodeErrors import UsageException
from pysolrankcodes.LinAlg.LinAlg import LinAlg
from pysolrankcodes.LinAlg.MatrixGF import MatrixGF
from pysolrankcodes.LinAlg.Subspace import Subspace
from pysolrankcodes.RankCodes.RankCode import ConstantRankCode
from pysolrankcodes.RankCodes.RankCodes import RankCodes

SolBase.logging_init(log_level="INFO", force_reset=True)
logger = logging.getLogger(__name__)


def spread_of_gf2_4():
    """
    The 5 lines of PG(3,2) spread : {(x, Ax)} for A in {0, I, M, M^2}, M companion of x^2+x+1, plus {(0, y)}
    :return: ConstantDimensionCode
    :rtype: ConstantDimensionCode
    """

    blocks = [
        [[0, 0], [0, 0]],
        [[1, 0], [0, 1]],
        [[0, 1], [1, 1]],
        [[1, 1], [1, 0]],
    ]
    subspaces = []
    for a in blocks:
        subspaces.append(Subspace.from_generators(MatrixGF(2, [[1, 0] + a[0], [0, 1] + a[1]])))
    subspaces.append(Subspace.from_generators(MatrixGF(2, [[0, 0, 1, 0], [0, 0, 0, 1]])))
    return ConstantDimensionCode(2, 4, 2, subspaces, claimed_distance=2)


class TestCdc(unittest.TestCase):
    """
    Test description
    """

    # noinspection PyPep8Naming
    def setUp(self):
        """
        Setup (called before each test)
        """

        self.spread = spread_of_gf2_4()

    # noinspection PyPep8Naming
    def tearDown(self):
        """
        Setup (called after each test)
        """

        pass

    def test_constant_dimension_code(self):
        """
        Test
        """

        self.assertEqual(self.spread.size, 5)
        self.assertEqual(self.spread.min_injection_distance(), 2)
        self.assertIn(Subspace.from_generators(MatrixGF(2, [[0, 0, 1, 0], [0, 0, 0, 1]])), self.spread)

        # Canonical order, duplicates dropped
        again = ConstantDimensionCode(2, 4, 2, list(reversed(self.spread.subspaces)) + [self.spread.subspaces[0]])
        self.assertEqual(again, self.spread)
        self.assertEqual(again.subspaces, tuple(sorted(again.subspaces)))

        self.assertRaises(UsageException, ConstantDimensionCode, 2, 4, 1, self.spread.subspaces)
        one = self.spread.with_members(self.spread.subspaces[:1])
        self.assertEqual(one.size, 1)
        self.assertEqual(one.claimed_distance, 2)

    def test_cdc_pair_to_crc(self):
        """
        Test
        """

        crc = CdcConversion.cdc_pair_to_crc(self.spread, self.spread)
        self.assertEqual(crc.size, 5)
        self.assertEqual(crc.r, 2)
        self.assertEqual((crc.rows, crc.cols), (4, 4))
        self.assertEqual(crc.claimed_distance, 4)
        self.assertEqual(crc.min_rank_distance(), 4)

        # Row and column spaces come from N and M
        x = crc.matrices()[0]
        self.assertIn(LinAlg.row_space(x), self.spread)
        self.assertIn(LinAlg.col_space(x), self.spread)

        rep = CdcConversion.pair_sandwich_report(self.spread, self.spread, crc)
        self.assertTrue(rep.holds)
        self.assertEqual((rep.lower, rep.upper), (4, 4))

        # Any pairing keeps the distance
        crc = CdcConversion.cdc_pair_to_crc(self.spread, self.spread, pairing=[4, 3, 2, 1, 0])
        self.assertEqual(crc.min_rank_distance(), 4)

    def test_cdc_pair_to_crc_invalid(self):
        """
        Test
        """

        small = self.spread.with_members(self.spread.subspaces[:3])
        self.assertRaises(UsageException, CdcConversion.cdc_pair_to_crc, small, self.spread)
        self.assertRaises(UsageException, CdcConversion.cdc_pair_to_crc, self.spread, self.spread, [0, 0, 1, 2, 3])

        lines = ConstantDimensionCode(2, 4, 1, list(Subspace.enumerate_grassmannian(2, 4, 1))[:5])
        self.assertRaises(UsageException, CdcConversion.cdc_pair_to_crc, lines, self.spread)

    def test_crc_to_cdc(self):
        """
        Test
        """

        crc = CdcConversion.cdc_pair_to_crc(self.spread, self.spread)
        rows = CdcConversion.crc_to_cdc(crc)
        self.assertEqual(rows, self.spread)
        self.assertEqual(rows.claimed_distance, 2)
        cols = CdcConversion.crc_to_cdc(crc, CdcConversion.SIDE_COLS)
        self.assertEqual(cols, self.spread)
        self.assertRaises(UsageException, CdcConversion.crc_to_cdc, crc, "diag")

    def test_crc_to_cdc_coset(self):
        """
        Test
        """

        res = RankCodes.coset_crc_search(RankCodes.field(2, 4), 4, 3, 2)
        crc = res.code
        self.assertEqual(crc.size, 35)

        # d_R > r keeps row spaces distinct
        rows = CdcConversion.crc_to_cdc(crc)
        self.assertEqual(rows.size, 35)
        self.assertEqual(rows.n, 4)
        self.assertGreaterEqual(rows.min_injection_distance(), 1)
        self.assertEqual(rows.claimed_distance, crc.min_rank_distance() - 2)

        rep = CdcConversion.crc_sandwich_report(crc)
        self.assertTrue(rep.holds, str(rep))
        self.assertLessEqual(rep.lower, rep.d_rank)

    def test_crc_to_cdc_collapse(self):
        """
        Test
        """

        # Two rank 1 words with the same row space
        a = MatrixGF(2, [[1, 1, 0], [0, 0, 0]])
        b = MatrixGF(2, [[0, 0, 0], [1, 1, 0]])
        crc = ConstantRankCode.from_matrices([a, b])
        rows = CdcConversion.crc_to_cdc(crc)
        self.assertEqual(rows.size, 1)
        self.assertIsNone(rows.claimed_distance)
        cols = CdcConversion.crc_to_cdc(crc, CdcConversion.SIDE_COLS)
        self.assertEqual(cols.size, 2)

    def test_crc_sandwich_report_shared_spaces(self):
        """
        Test
        """

        # a, b share a row space, a, c share a column space, d_R = 1
        a = MatrixGF(2, [[1, 1, 0], [0, 0, 0], [0, 0, 0]])
        b = MatrixGF(2, [[0, 0, 0], [1, 1, 0], [0, 0, 0]])
        c = MatrixGF(2, [[0, 0, 1], [0, 0, 0], [0, 0, 0]])
        crc = ConstantRankCode.from_matrices([a, b, c])
        self.assertEqual(crc.min_rank_distance(), 1)

        # Distinct spaces alone would give 1 + 1 > 1
        self.assertEqual(CdcConversion.crc_to_cdc(crc).min_injection_distance(), 1)
        self.assertEqual(CdcConversion.crc_to_cdc(crc, CdcConversion.SIDE_COLS).min_injection_distance(), 1)

        rep = CdcConversion.crc_sandwich_report(crc)
        self.assertEqual((rep.d_rows, rep.d_cols), (0, 0))
        self.assertEqual((rep.lower, rep.upper), (0, 1))
        self.assertTrue(rep.holds, str(rep))

    def test_p_range(self):
        """
        Test
        """

        self.assertEqual(CdcReports.p_range(4, 4, 2, 2), (0, 0))
        self.assertEqual(CdcReports.p_range(8, 8, 3, 1), (0, 2))
        self.assertEqual(CdcReports.p_range(5, 6, 3, 1), (1, 2))

    def test_prop5_bounds(self):
        """
        Test
        """

        rep = CdcReports.prop5_bounds(2, 4, 4, 2, 2, 0)
        self.assertTrue(rep.nontrivial)
        self.assertEqual(rep.lower, 4)
        self.assertEqual(rep.upper, 5)
        self.assertEqual(rep.suggested_p, 0)

        # Outside the pairing range the lower bound is trivial
        rep = CdcReports.prop5_bounds(2, 4, 4, 2, 2, 1)
        self.assertFalse(rep.nontrivial)
        self.assertEqual(rep.lower, 1)

        # Exact provider
        def _exact(q, n, r, d):
            if (q, n, r, d) == (2, 4, 2, 2):
                return AcValue(5, 5, "search")
            from pysolrankcodes.Bounds.Bounds import Bounds
            return Bounds.ac_bounds(q, n, r, d)

        rep = CdcReports.prop5_bounds(2, 4, 4, 2, 2, 0, ac_provider=_exact)
        self.assertEqual((rep.lower, rep.upper), (5, 5))
        self.assertIn("search", rep.provenance)

        best = CdcReports.prop5_best(2, 8, 8, 3, 1)
        for p in range(0, 4):
            self.assertGreaterEqual(best.lower, CdcReports.prop5_bounds(2, 8, 8, 3, 1, p).lower)
        self.assertLessEqual(best.lower, best.upper)

        self.assertRaises(UsageException, CdcReports.prop5_bounds, 2, 4, 4, 2, 3, 0)
        self.assertRaises(UsageException, CdcReports.prop5_bounds, 2, 3, 4, 2, 2, 0)
        self.assertRaises(UsageException, CdcReports.prop5_bounds, 2, 4, 4, 2, 2, 3)

    def test_theorem6_check(self):
        """
        Test
        """

        crc = CdcConversion.cdc_pair_to_crc(self.spread, self.spread)

        rep = CdcReports.theorem6_check(2, 4, 4, 2, 2, crc, exact_a_r=5)
        self.assertTrue(rep.hypothesis)
        self.assertTrue(rep.certified, rep.message)
        self.assertEqual(rep.cdc, self.spread)
        self.assertEqual(rep.m0, 5)

        rep = CdcReports.theorem6_check(2, 4, 4, 2, 2, crc)
        self.assertFalse(rep.certified)
        self.assertIn("unknown", rep.message)

        rep = CdcReports.theorem6_check(2, 4, 4, 2, 2, crc, exact_a_r=6)
        self.assertFalse(rep.certified)
        self.assertIn("not optimal", rep.message)

        # d = 1 needs m >= (n-r)r + r + 1 = 7
        rep = CdcReports.theorem6_check(2, 4, 4, 2, 1, crc, exact_a_r=5)
        self.assertFalse(rep.hypothesis)
        self.assertFalse(rep.certified)
        self.assertIn("no transfer guarantee", rep.message)

        # Shape mismatch
        rep = CdcReports.theorem6_check(2, 5, 4, 2, 2, crc, exact_a_r=5)
        self.assertFalse(rep.certified)

        self.assertRaises(UsageException, CdcReports.theorem6_check, 2, 4, 3, 2, 2, crc)
