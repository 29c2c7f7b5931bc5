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
import math

import numpy as np

from pysolrankcodes.Cdc.ConstantDimensionCode import ConstantDimensionCode
from pysolrankcodes.Errors.RankCodeErrors import UsageException
from pysolrankcodes.LinAlg.LinAlg import LinAlg
from pysolrankcodes.RankCodes.RankCode import ConstantRankCode

logger = logging.getLogger(__name__)


class SandwichReport(object):
    """
    d_I(cols) + d_I(rows) <= d_R <= min(d_I(cols), d_I(rows)) + r, for a CRC and its two subspace codes
    """

    def __init__(self, r, d_rank, d_rows, d_cols):
        """
        Constructor
        :param r: constant rank
        :type r: int
        :param d_rank: minimum rank distance of the CRC
        :type d_rank: int,float
        :param d_rows: minimum injection distance between row spaces of distinct words
        :type d_rows: int,float
        :param d_cols: minimum injection distance between column spaces of distinct words
        :type d_cols: int,float
        """

        self.r = r
        self.d_rank = d_rank
        self.d_rows = d_rows
        self.d_cols = d_cols

        if math.inf in (d_rank, d_rows, d_cols):
            # Fewer than two words
            self.lower = None
            self.upper = None
            self.holds = True
        else:
            self.lower = d_rows + d_cols
            self.upper = min(d_rows, d_cols) + r
            self.holds = self.lower <= d_rank <= self.upper

    def __str__(self):
        return "SandwichReport(r={0}, d_R={1}, d_I(rows)={2}, d_I(cols)={3}, lower={4}, upper={5}, holds={6})".format(
            self.r, self.d_rank, self.d_rows, self.d_cols, self.lower, self.upper, self.holds)


class CdcConversion(object):
    """
    Conversions between constant rank codes and pairs of constant dimension codes
    """

    SIDE_ROWS = "rows"
    SIDE_COLS = "cols"

    @classmethod
    def crc_to_cdc(cls, crc, side=SIDE_ROWS):
        """
        Row spaces (subspaces of GF(q)^n) or column spaces (subspaces of GF(q)^m) of the codewords.
        When d_R <= r distinct words may share a space, the output is then smaller than the input.
        :param crc: ConstantRankCode
        :type crc: ConstantRankCode
        :param side: rows or cols
        :type side: str
        :return: ConstantDimensionCode
        :rtype: ConstantDimensionCode
        """

        if side == cls.SIDE_ROWS:
            spaces = [LinAlg.row_space(x) for x in crc.matrices()]
            ambient = crc.cols
        elif side == cls.SIDE_COLS:
            spaces = [LinAlg.col_space(x) for x in crc.matrices()]
            ambient = crc.rows
        else:
            raise UsageException("Invalid side, side={0}".format(side))

        d_rank = crc.min_rank_distance()
        claimed = None
        if d_rank != math.inf and d_rank > crc.r:
            claimed = d_rank - crc.r

        cdc = ConstantDimensionCode(crc.p, ambient, crc.r, spaces, claimed_distance=claimed)
        if cdc.size < crc.size:
            logger.warning("Subspace code collapsed, side=%s, words=%s, subspaces=%s, d_R=%s, r=%s",
                           side, crc.size, cdc.size, d_rank, crc.r)
        return cdc

    @classmethod
    def crc_sandwich_report(cls, crc):
        """
        Sandwich between the CRC distance and the row / column space distances.
        Space distances are taken over codeword pairs, two words sharing a space give 0.
        :param crc: ConstantRankCode
        :type crc: ConstantRankCode
        :return: SandwichReport
        :rtype: SandwichReport
        """

        words = crc.matrices()
        d_rows = LinAlg.pairwise_min_injection_distance([LinAlg.row_space(x) for x in words])
        d_cols = LinAlg.pairwise_min_injection_distance([LinAlg.col_space(x) for x in words])
        return SandwichReport(crc.r, crc.min_rank_distance(), d_rows, d_cols)

    @classmethod
    def cdc_pair_to_crc(cls, m_cdc, n_cdc, pairing=None):
        """
        X_i = G_i^T H_(pairing[i]), G_i and H_j the stored rref bases of M and N
        :param m_cdc: code in E_r(q, m), gives the column spaces
        :type m_cdc: ConstantDimensionCode
        :param n_cdc: code in E_r(q, n), gives the row spaces
        :type n_cdc: ConstantDimensionCode
        :param pairing: permutation of range(|N|), None for canonical order
        :type pairing: list,None
        :return: ConstantRankCode
        :rtype: ConstantRankCode
        """

        if m_cdc.size != n_cdc.size:
            raise UsageException("Cardinality mismatch, |M|={0}, |N|={1}".format(m_cdc.size, n_cdc.size))
        if m_cdc.p != n_cdc.p or m_cdc.r != n_cdc.r:
            raise UsageException("Field or dimension mismatch, M={0}, N={1}".format(m_cdc, n_cdc))
        size = m_cdc.size
        if pairing is None:
            pairing = list(range(size))
        if sorted(pairing) != list(range(size)):
            raise UsageException("Pairing is not a permutation, pairing={0}".format(pairing))

        p, r = m_cdc.p, m_cdc.r
        arr = np.zeros((size, m_cdc.n, n_cdc.n), dtype=np.int64)
        for i in range(size):
            g = m_cdc.subspaces[i].basis.entries
            h = n_cdc.subspaces[pairing[i]].basis.entries
            arr[i] = (g.T @ h) % p

        claimed = None
        d_m, d_n = m_cdc.min_injection_distance(), n_cdc.min_injection_distance()
        if d_m != math.inf and d_n != math.inf:
            claimed = d_m + d_n
        return ConstantRankCode(p, m_cdc.n, n_cdc.n, arr, r, claimed_distance=claimed)

    @classmethod
    def pair_sandwich_report(cls, m_cdc, n_cdc, crc):
        return SandwichReport(crc.r, crc.min_rank_distance(), n_cdc.min_injection_distance(),
                              m_cdc.min_injection_distance())
