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

from pysolrankcodes.Bounds.Asymptotic import Asymptotic
from pysolrankcodes.Bounds.Bounds import Bounds
from pysolrankcodes.Cdc.CdcConversion import CdcConversion
from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Errors.RankCodeErrors import UsageException

logger = logging.getLogger(__name__)


class PairingBoundReport(object):
    """
    min(A_C(q,n,r,d+p), A_C(q,m,r,r-p)) <= A_R(q,m,n,d+r,r) <= A_C(q,n,r,d)
    """

    def __init__(self):
        """
        Const
        """

        # Parameters (d is the subspace distance, the rank distance is d+r)
        self.q = None
        self.m = None
        self.n = None
        self.r = None
        self.d = None
        self.p = None

        # Bounds on A_R(q,m,n,d+r,r)
        self.lower = None
        self.upper = None

        # Where the A_C values came from
        self.provenance = None

        # p inside max{0, 2r-m} <= p <= min{r-d, n-r-d}
        self.p_min = None
        self.p_max = None
        self.nontrivial = None

        # p maximizing the exponent of the constructive bound, when 2r <= n
        self.suggested_p = None

    def __str__(self):
        return "PairingBoundReport(q={0}, m={1}, n={2}, r={3}, d={4}, p={5}, lower={6}, upper={7}, nontrivial={8}, " \
               "range=[{9},{10}], suggested_p={11}, provenance={12})".format(
                self.q, self.m, self.n, self.r, self.d, self.p, self.lower, self.upper, self.nontrivial,
                self.p_min, self.p_max, self.suggested_p, self.provenance)


class OptimalityTransferReport(object):
    """
    Optimality transfer from constant rank codes to constant dimension codes
    """

    def __init__(self):
        """
        Const
        """

        self.q = None
        self.m = None
        self.n = None
        self.r = None
        self.d = None

        # Threshold and hypothesis (d = r or m >= m0)
        self.m0 = None
        self.hypothesis = None

        # Code under test
        self.crc_size = None
        self.crc_distance = None
        self.exact_a_r = None

        # Row space code, certified optimal when the hypothesis holds and the CRC is optimal
        self.cdc = None
        self.certified = False
        self.message = None

    def __str__(self):
        return "OptimalityTransferReport(q={0}, m={1}, n={2}, r={3}, d={4}, m0={5}, hypothesis={6}, crc_size={7}, " \
               "exact_a_r={8}, certified={9}, message={10})".format(
                self.q, self.m, self.n, self.r, self.d, self.m0, self.hypothesis, self.crc_size,
                self.exact_a_r, self.certified, self.message)


class CdcReports(object):
    """
    Cardinality relations between optimal constant rank and constant dimension codes
    """

    @classmethod
    def p_range(cls, m, n, r, d):
        return max(0, 2 * r - m), min(r - d, n - r - d)

    @classmethod
    def prop5_bounds(cls, q, m, n, r, d, p, ac_provider=None):
        """
        Bounds on A_R(q,m,n,d+r,r) from A_C values
        :param q: int
        :type q: int
        :param m: int
        :type m: int
        :param n: int
        :type n: int
        :param r: int
        :type r: int
        :param d: subspace distance, 1 <= d <= r
        :type d: int
        :param p: int in [0, r]
        :type p: int
        :param ac_provider: callable (q, n, r, d) -> AcValue, default closed-form bounds
        :type ac_provider: callable,None
        :return: PairingBoundReport
        :rtype: PairingBoundReport
        """

        if not (1 <= d <= r <= n <= m and 0 <= p <= r):
            raise UsageException("Need 1<=d<=r<=n<=m, 0<=p<=r, got m={0}, n={1}, r={2}, d={3}, p={4}".format(
                m, n, r, d, p))
        ac_provider = ac_provider or Bounds.ac_bounds

        rep = PairingBoundReport()
        rep.q, rep.m, rep.n, rep.r, rep.d, rep.p = q, m, n, r, d, p
        rep.p_min, rep.p_max = cls.p_range(m, n, r, d)
        rep.nontrivial = rep.p_min <= p <= rep.p_max
        if 2 * r <= n:
            rep.suggested_p = Asymptotic.p_star(m, n, r, d + r)[0]

        ac_rows = ac_provider(q, n, r, d + p)
        ac_cols = ac_provider(q, m, r, r - p)
        ac_top = ac_provider(q, n, r, d)
        rep.upper = ac_top.upper
        rep.lower = min(ac_rows.lower, ac_cols.lower) if rep.nontrivial else 1
        rep.provenance = "rows:{0},cols:{1},upper:{2}".format(
            ac_rows.provenance, ac_cols.provenance, ac_top.provenance)
        return rep

    @classmethod
    def prop5_best(cls, q, m, n, r, d, ac_provider=None):
        """
        Report with the largest lower bound over all p
        :return: PairingBoundReport
        :rtype: PairingBoundReport
        """

        best = None
        for p in range(0, r + 1):
            rep = cls.prop5_bounds(q, m, n, r, d, p, ac_provider)
            if best is None or rep.lower > best.lower:
                best = rep
        return best

    @classmethod
    def theorem6_check(cls, q, m, n, r, d, crc, exact_a_r=None):
        """
        Check whether an optimal CRC with distance d+r certifies its row space code as an optimal CDC
        :param crc: ConstantRankCode of rank r, minimum distance d+r
        :type crc: pysolrankcodes.RankCodes.RankCode.ConstantRankCode
        :param exact_a_r: exact A_R(q,m,n,d+r,r) if known
        :type exact_a_r: int,None
        :return: OptimalityTransferReport
        :rtype: OptimalityTransferReport
        """

        if not (2 * r <= n <= m and 1 <= d <= r):
            raise UsageException("Need 2r<=n<=m and 1<=d<=r, got m={0}, n={1}, r={2}, d={3}".format(m, n, r, d))

        rep = OptimalityTransferReport()
        rep.q, rep.m, rep.n, rep.r, rep.d = q, m, n, r, d
        rep.m0 = Counting.m_zero(n, r, d)
        rep.hypothesis = d == r or m >= rep.m0
        rep.crc_size = crc.size
        rep.crc_distance = crc.min_rank_distance()
        rep.exact_a_r = exact_a_r

        if not rep.hypothesis:
            rep.message = "no transfer guarantee, m={0} < m0={1}".format(m, rep.m0)
            return rep
        if crc.r != r or crc.rows != m or crc.cols != n:
            rep.message = "code parameters do not match"
            return rep
        if rep.crc_distance < d + r:
            rep.message = "code distance {0} below {1}".format(rep.crc_distance, d + r)
            return rep
        if exact_a_r is None:
            rep.message = "optimality of the code unknown"
            return rep
        if crc.size != exact_a_r:
            rep.message = "code not optimal, size={0}, A_R={1}".format(crc.size, exact_a_r)
            return rep

        rep.cdc = CdcConversion.crc_to_cdc(crc, CdcConversion.SIDE_ROWS)
        rep.certified = rep.cdc.size == crc.size and rep.cdc.min_injection_distance() >= d
        rep.message = "row space code optimal, A_C={0}".format(rep.cdc.size) if rep.certified \
            else "row space code failed its distance"
        return rep
