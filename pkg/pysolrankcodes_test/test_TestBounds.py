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
import shutil
import tempfile
import unittest
from fractions import Fraction

from pysolbase.SolBase import SolBase

from pysolrankcodes.Bounds.BoundReport import BoundReport, BoundEntry
from pysolrankcodes.Bounds.Bounds import Bounds, AcValue
from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Counting.JRankOracle import JRankOracle
from pysolrankcodes.Errors.RankCodeErrors import UsageException, CapacityException
from pysolrankcodes.Search.ExactSearch import ExactSearch

SolBase.logging_init(log_level="INFO", force_reset=True)
logger = logging.getLogger(__name__)


class TestBounds(unittest.TestCase):
    """
    Test description
    """

    # noinspection PyPep8Naming
    def setUp(self):
        """
        Setup (called before each test)
        """

        self.cache_dir = tempfile.mkdtemp(prefix="pysolrankcodes_test_")
        self.oracle = JRankOracle(cache_dir=self.cache_dir)

    # noinspection PyPep8Naming
    def tearDown(self):
        """
        Setup (called after each test)
        """

        shutil.rmtree(self.cache_dir, ignore_errors=True)

    def test_cdc_singleton_bounds(self):
        """
        Test
        """

        self.assertEqual(Bounds.cdc_singleton_bounds(2, 4, 2, 2), (4, 5))
        # 31/3 is floored
        self.assertEqual(Bounds.cdc_singleton_bounds(2, 5, 2, 2), (8, 10))
        self.assertEqual(Bounds.cdc_singleton_bounds(2, 4, 2, 1), (35, 35))
        self.assertRaises(UsageException, Bounds.cdc_singleton_bounds, 2, 4, 3, 2)
        self.assertRaises(UsageException, Bounds.cdc_singleton_bounds, 2, 6, 2, 3)

    def test_ac_bounds(self):
        """
        Test
        """

        ac = Bounds.ac_bounds(2, 4, 2, 3)
        self.assertEqual((ac.lower, ac.upper, ac.provenance), (1, 1, "trivial"))
        self.assertTrue(ac.exact)
        ac = Bounds.ac_bounds(2, 4, 0, 2)
        self.assertEqual((ac.lower, ac.upper), (1, 1))
        ac = Bounds.ac_bounds(2, 4, 2, 1)
        self.assertEqual((ac.lower, ac.upper, ac.provenance), (35, 35, "grassmannian"))
        ac = Bounds.ac_bounds(2, 4, 2, 2)
        self.assertEqual((ac.lower, ac.upper, ac.provenance), (4, 5, "cdc_singleton"))
        self.assertFalse(ac.exact)
        # r > n/2 without duality
        ac = Bounds.ac_bounds(2, 5, 3, 2)
        self.assertEqual(ac.upper, Counting.gaussian_binomial(5, 3, 2))
        self.assertRaises(UsageException, Bounds.ac_bounds, 2, 4, 5, 1)

    def test_crc_exact_trivial(self):
        """
        Test
        """

        self.assertEqual(Bounds.crc_exact_trivial(2, 4, 3, 2, 0), 1)
        self.assertEqual(Bounds.crc_exact_trivial(2, 4, 3, 5, 2), 1)
        self.assertEqual(Bounds.crc_exact_trivial(2, 4, 3, 4, 2), 1)
        self.assertEqual(Bounds.crc_exact_trivial(2, 4, 3, 1, 2), 1470)
        self.assertIsNone(Bounds.crc_exact_trivial(2, 4, 3, 2, 2))
        self.assertRaises(UsageException, Bounds.crc_exact_trivial, 2, 4, 3, 0, 2)
        self.assertRaises(UsageException, Bounds.crc_exact_trivial, 2, 4, 3, 2, 4)

    def test_singleton_family(self):
        """
        Test
        """

        self.assertEqual(Bounds.crc_johnson_chain(2, 4, 3, 2, 2), 105)
        self.assertEqual(Bounds.crc_singleton_combined(2, 4, 3, 2, 2), 105)
        self.assertEqual(Bounds.crc_singleton_puncture(2, 4, 3, 2, 2), 255)
        self.assertEqual(Bounds.crc_singleton_complement(2, 4, 3, 2, 2), 255)
        self.assertEqual(Bounds.crc_johnson_step(2, 4, 3, 2, 2, 15), 105)

        # d = r = n : only the full rank words of one MRD code
        self.assertEqual(Bounds.crc_singleton_combined(2, 3, 3, 3, 3), 7)
        # Empty P_r
        self.assertEqual(Bounds.crc_singleton_complement(2, 3, 3, 3, 2), 8)

        self.assertRaises(UsageException, Bounds.crc_johnson_chain, 2, 4, 3, 3, 2)
        self.assertRaises(UsageException, Bounds.crc_singleton_puncture, 2, 4, 3, 4, 2)
        self.assertRaises(UsageException, Bounds.crc_singleton_complement, 2, 3, 4, 2, 2)
        self.assertRaises(UsageException, Bounds.crc_johnson_step, 2, 4, 3, 3, 3, 1)

    def test_upper_bounds_against_mrd_shell(self):
        """
        Test
        """

        # Rank r shell of an MRD code with minimum distance d <= r is a lower bound
        for q, m, n, d, r in ((2, 4, 3, 2, 2), (2, 5, 4, 2, 3), (3, 3, 3, 2, 2), (2, 6, 5, 3, 4)):
            shell = Counting.mrd_rank_distribution(q, m, n, d, r)
            self.assertEqual(Bounds.crc_gabidulin_lower(q, m, n, d, r), (shell, False))
            self.assertLessEqual(shell, Bounds.crc_johnson_chain(q, m, n, d, r))
            self.assertLessEqual(shell, Bounds.crc_singleton_combined(q, m, n, d, r))
            self.assertLessEqual(shell, Bounds.crc_singleton_puncture(q, m, n, d, r))
            self.assertLessEqual(shell, Bounds.crc_singleton_complement(q, m, n, d, r))
            self.assertLessEqual(Bounds.crc_volume_lower(q, m, n, d, r),
                                 Bounds.crc_singleton_combined(q, m, n, d, r))

    def test_constructive_lower(self):
        """
        Test
        """

        self.assertEqual(Bounds.crc_volume_lower(2, 4, 3, 2, 2), 92)
        self.assertEqual(Bounds.crc_volume_lower(2, 4, 3, 4, 2), 1)
        self.assertEqual(Bounds.crc_gabidulin_lower(2, 4, 4, 4, 2), (3, False))
        self.assertEqual(Bounds.crc_gabidulin_lower(2, 4, 4, 5, 2), (1, False))
        self.assertRaises(UsageException, Bounds.crc_gabidulin_lower, 2, 3, 4, 2, 2)
        self.assertRaises(UsageException, Bounds.crc_volume_lower, 2, 3, 3, 0, 2)

    def test_gilbert_hamming(self):
        """
        Test
        """

        # A_R(2,3,3,2,2) = 49
        gilbert, hamming = Bounds.crc_gilbert_hamming(2, 3, 3, 2, 2, self.oracle)
        self.assertGreaterEqual(gilbert, 1)
        self.assertLessEqual(gilbert, 49)
        self.assertGreaterEqual(hamming, 49)

        # d = 1 : the cover is the center alone
        gilbert, _ = Bounds.crc_gilbert_hamming(2, 3, 3, 2, 1, self.oracle)
        self.assertEqual(gilbert, Counting.n_rank(2, 3, 3, 2))

        small = JRankOracle(cache_dir=self.cache_dir, enum_cap=16)
        self.assertRaises(CapacityException, Bounds.crc_gilbert_hamming, 2, 4, 4, 2, 3, small)
        self.assertRaises(UsageException, Bounds.crc_gilbert_hamming, 2, 3, 3, 0, 2, self.oracle)

    def test_bassalygo(self):
        """
        Test
        """

        value, at = Bounds.crc_bassalygo_lower(2, 3, 3, 2, 2, oracle=self.oracle)
        self.assertGreaterEqual(value, 1)
        self.assertLessEqual(value, 49)
        self.assertEqual(len(at), 3)

        # A_R(2,4,4,4,2) = 5
        value, _ = Bounds.crc_bassalygo_lower(2, 4, 4, 4, 2, oracle=self.oracle)
        extended, _ = Bounds.crc_bassalygo_lower(2, 4, 4, 4, 2, use_extended=True, oracle=self.oracle)
        self.assertLessEqual(value, 5)
        self.assertGreaterEqual(extended, 1)
        self.assertLessEqual(extended, 5)

        self.assertRaises(UsageException, Bounds.crc_bassalygo_lower, 2, 3, 3, 2, 2, True, self.oracle)

    def test_tightness_ratios(self):
        """
        Test
        """

        check = Bounds.tightness_ratio_C(2, 4, 3, 2, 2, 105)
        self.assertEqual(check.value, Fraction(8, 7))
        self.assertEqual(check.bound, Fraction(4, 3))
        self.assertFalse(check.strict)
        self.assertTrue(check.holds)

        # r + d - 1 > m
        check = Bounds.tightness_ratio_C(2, 3, 3, 2, 3, 7)
        self.assertTrue(check.strict)
        self.assertTrue(check.holds)

        self.assertEqual(Bounds.ratio_B_bounds(2, 4, 3, 1, 2), (Fraction(2), True, "r<m"))
        self.assertEqual(Bounds.ratio_B_bounds(2, 3, 3, 2, 3), (Fraction(3), False, "q=2,d=m-1"))
        self.assertEqual(Bounds.ratio_B_bounds(3, 3, 3, 2, 3), (Fraction(2), True, "q>2,d=m-1"))
        self.assertEqual(Bounds.ratio_B_bounds(2, 4, 4, 2, 4), (Fraction(3), True, "d=m-2"))
        bound, strict, case = Bounds.ratio_B_bounds(2, 5, 5, 2, 5)
        self.assertEqual(case, "d<m-2")
        self.assertEqual(bound, Fraction(7 * 3 * 1, 6))
        self.assertRaises(UsageException, Bounds.ratio_B_bounds, 2, 4, 3, 2, 2)

        shell = Counting.mrd_rank_distribution(2, 4, 3, 2, 3)
        check = Bounds.tightness_ratio_B(2, 4, 3, 2, 3, shell)
        self.assertEqual(check.value, 1)
        self.assertTrue(check.holds)
        self.assertEqual(check.name, "B[r<m]")

    def test_bound_report_trivial(self):
        """
        Test
        """

        rep = BoundReport.bound_report(2, 3, 3, 1, 1, oracle=self.oracle)
        self.assertEqual(rep.exact, 49)
        self.assertEqual((rep.best_lower, rep.best_upper), (49, 49))
        self.assertTrue(rep.consistent)

        rep = BoundReport.bound_report(2, 3, 3, 1, 3, oracle=self.oracle)
        self.assertEqual(rep.exact, 1)

        self.assertRaises(UsageException, BoundReport.bound_report, 2, 3, 3, 4, 1, self.oracle)
        self.assertRaises(UsageException, BoundReport.bound_report, 2, 3, 3, 1, 0, self.oracle)

    def test_bound_report(self):
        """
        Test
        """

        rep = BoundReport.bound_report(2, 3, 3, 2, 2, oracle=self.oracle)
        self.assertIsNone(rep.exact)
        self.assertTrue(rep.consistent)
        names = [e.name for e in rep.entries]
        for name in ("trivial", "gilbert", "hamming", "johnson_chain", "singleton_combined",
                     "singleton_puncture", "singleton_complement", "gabidulin", "volume", "bassalygo"):
            self.assertIn(name, names)
        self.assertNotIn("bassalygo_extended", names)
        self.assertNotIn("subspace_rows", names)
        self.assertEqual(rep.best_lower, 49)
        self.assertEqual(rep.best_upper, 49)
        self.assertEqual(len(rep.skipped), 0)

        for e in rep.lowers:
            self.assertLessEqual(e.value, 49, str(e))
        for e in rep.uppers:
            self.assertGreaterEqual(e.value, 49, str(e))

        rows = rep.csv_rows()
        self.assertEqual(len(rows), len(rep.entries))
        self.assertEqual(len(rows[0]), len(BoundReport.CSV_HEADER))
        self.assertEqual(rows[0][:7], [2, 3, 3, 2, 2, "trivial", "lower"])
        self.assertIn("best_lower=49", rep.to_text())

    def test_bound_report_swaps_shape(self):
        """
        Test
        """

        rep = BoundReport.bound_report(2, 2, 3, 1, 2, oracle=self.oracle)
        self.assertEqual((rep.m, rep.n), (3, 2))
        self.assertTrue(rep.consistent)
        self.assertNotIn("bassalygo_extended", [e.name for e in rep.entries])
        self.assertIn("subspace_rows", [e.name for e in rep.entries])

    def test_bound_report_subspace(self):
        """
        Test
        """

        def _exact(q, m, n, d, r):
            return 5 if (q, m, n, d, r) == (2, 4, 4, 4, 2) else None

        rep = BoundReport.bound_report(2, 4, 4, 2, 4, oracle=self.oracle, exact_provider=_exact)
        by_name = dict((e.name, e) for e in rep.entries)
        self.assertEqual(by_name["subspace_rows"].value, 5)
        self.assertEqual(by_name["subspace_cols"].value, 5)
        self.assertEqual(by_name["subspace_pairing"].value, 4)
        self.assertEqual(by_name["optimality_transfer"].value, 4)
        self.assertEqual(by_name["exact_search"].kind, BoundEntry.KIND_EXACT)
        self.assertEqual(rep.exact, 5)
        self.assertEqual((rep.best_lower, rep.best_upper), (5, 5))
        self.assertTrue(rep.consistent)

    def test_bound_report_skipped(self):
        """
        Test
        """

        def _capacity(q, m, n, d, r):
            raise CapacityException("clique search", 10, 1)

        small = JRankOracle(cache_dir=self.cache_dir, enum_cap=16)
        rep = BoundReport.bound_report(2, 4, 4, 2, 3, oracle=small, exact_provider=_capacity)
        skipped = [e.name for e in rep.skipped]
        self.assertIn("gilbert", skipped)
        self.assertIn("hamming", skipped)
        self.assertIn("bassalygo", skipped)
        self.assertIn("exact_search", skipped)
        self.assertTrue(rep.consistent)
        self.assertIn("skipped", [row[7] for row in rep.csv_rows()])

    def test_bound_report_inconsistent(self):
        """
        Test
        """

        def _ac(q, n, r, d):
            return AcValue(1, 1, "broken")

        rep = BoundReport.bound_report(2, 4, 4, 2, 4, oracle=self.oracle, exact_provider=lambda *a: 5,
                                       ac_provider=_ac)
        self.assertFalse(rep.consistent)

        rep = BoundReport(2, 3, 3, 2, 2)
        rep.add_lower("a", 10)
        rep.add_upper("b", 9)
        self.assertFalse(rep.finalize().consistent)
        rep = BoundReport(2, 3, 3, 2, 2)
        self.assertEqual(rep.finalize().best_lower, 1)
        self.assertIsNone(rep.best_upper)

    def test_bound_report_grid_against_search(self):
        """
        Test
        """

        search = ExactSearch(vertex_cap=1500, node_cap=200000)

        def _exact(q, m, n, d, r):
            return search.exact_A_R(q, m, n, d, r).value

        checked = 0
        skipped = 0
        for m in range(1, 5):
            for n in range(1, m + 1):
                for r in range(1, n + 1):
                    for d in range(1, n + 1):
                        tag = "m={0}, n={1}, r={2}, d={3}".format(m, n, r, d)
                        rep = BoundReport.bound_report(2, m, n, r, d, oracle=self.oracle, exact_provider=_exact)
                        if rep.exact is None:
                            self.assertIn("exact_search", [e.name for e in rep.skipped], tag)
                            skipped += 1
                            continue
                        self.assertTrue(rep.consistent, tag)
                        for e in rep.lowers:
                            self.assertLessEqual(e.value, rep.exact, "{0}, {1}".format(tag, e))
                        for e in rep.uppers:
                            self.assertGreaterEqual(e.value, rep.exact, "{0}, {1}".format(tag, e))

                        # Rank distance d > r : A_R(q,m,n,d,r) <= A_C(q,n,r,d-r)
                        if d > r:
                            self.assertLessEqual(rep.exact, Bounds.ac_bounds(2, n, r, d - r).upper, tag)
                        if 2 <= d <= r:
                            check = Bounds.tightness_ratio_C(2, m, n, d, r, rep.exact)
                            self.assertTrue(check.holds, "{0}, {1}".format(tag, check))
                        if d < r and m >= 3:
                            check = Bounds.tightness_ratio_B(2, m, n, d, r, rep.exact)
                            self.assertTrue(check.holds, "{0}, {1}".format(tag, check))
                        checked += 1
        logger.info("Grid checked, checked=%s, skipped=%s", checked, skipped)
        self.assertGreater(checked, 20)
