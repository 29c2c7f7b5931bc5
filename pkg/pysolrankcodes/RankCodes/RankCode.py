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

import numpy as np

from pysolrankcodes.Errors.RankCodeErrors import UsageException
from pysolrankcodes.LinAlg.GaussElim import GaussElim
from pysolrankcodes.LinAlg.LinAlg import LinAlg
from pysolrankcodes.LinAlg.MatrixGF import MatrixGF

logger = logging.getLogger(__name__)


class RankCode(object):
    """
    Explicit set of m x n matrices over GF(p).
    Codewords are deduplicated and kept in lexicographic order of their row-major entries.
    """

    def __init__(self, p, rows, cols, arr, linear=False, claimed_distance=None):
        """
        Constructor
        :param p: prime
        :type p: int
        :param rows: m
        :type rows: int
        :param cols: n
        :type cols: int
        :param arr: array-like (count, rows, cols)
        :type arr: np.ndarray,list
        :param linear: the set is a GF(p)-linear space
        :type linear: bool
        :param claimed_distance: claimed minimum rank distance, None if unknown
        :type claimed_distance: int,float,None
        """

        arr = np.asarray(arr, dtype=np.int64) % p
        if arr.size == 0:
            arr = np.zeros((0, rows, cols), dtype=np.int64)
        if arr.ndim != 3 or arr.shape[1] != rows or arr.shape[2] != cols:
            raise UsageException("Codeword shape mismatch, cur={0}, need=(*, {1}, {2})".format(arr.shape, rows, cols))
        if arr.shape[0] > 0:
            arr = np.unique(arr.reshape(arr.shape[0], rows * cols), axis=0).reshape(-1, rows, cols)
        arr.flags.writeable = False

        self.p = p
        self.rows = rows
        self.cols = cols
        self.array = arr
        self.linear = linear
        self.claimed_distance = claimed_distance
        self._ranks = None
        self._min_distance = None

    @classmethod
    def from_matrices(cls, matrices, rows=None, cols=None, p=None, **kwargs):
        """
        From a list of MatrixGF (shape and field taken from the first one unless given)
        """

        matrices = list(matrices)
        if len(matrices) > 0:
            p = matrices[0].p if p is None else p
            rows = matrices[0].rows if rows is None else rows
            cols = matrices[0].cols if cols is None else cols
            for mat in matrices:
                if mat.p != p or mat.rows != rows or mat.cols != cols:
                    raise UsageException("Codeword shape mismatch, cur={0}, need={1}x{2}".format(mat, rows, cols))
        if p is None or rows is None or cols is None:
            raise UsageException("Empty code needs p, rows, cols")
        return cls(p, rows, cols, LinAlg.stack(matrices), **kwargs)

    # ====================================
    # ACCESS
    # ====================================

    @property
    def size(self):
        return int(self.array.shape[0])

    def __len__(self):
        return self.size

    def matrices(self):
        return [MatrixGF(self.p, a) for a in self.array]

    def __iter__(self):
        return iter(self.matrices())

    def __contains__(self, mat):
        if mat.rows != self.rows or mat.cols != self.cols:
            return False
        return bool(np.any(np.all(self.array == mat.entries[None, :, :], axis=(1, 2))))

    def ranks(self):
        """
        Rank of every codeword, in storage order
        :return: np.ndarray
        :rtype: np.ndarray
        """

        if self._ranks is None:
            if self.size == 0:
                self._ranks = np.zeros(0, dtype=np.int64)
            else:
                self._ranks = GaussElim.batch_rank(self.array, self.p)
        return self._ranks

    def rank_distribution(self):
        """
        [A_0, ..., A_min(m,n)]
        :return: list of int
        :rtype: list
        """

        top = min(self.rows, self.cols)
        return [int(v) for v in np.bincount(self.ranks(), minlength=top + 1)[:top + 1]]

    def min_rank_distance(self, pair_cap=1 << 26):
        """
        Minimum rank distance, inf below two words. Linear codes use the minimum nonzero rank.
        :param pair_cap: pair budget for the pairwise path
        :type pair_cap: int
        :return: int, float
        :rtype: int,float
        """

        if self._min_distance is None:
            if self.size < 2:
                self._min_distance = LinAlg.INFINITE_DISTANCE
            elif self.linear:
                ranks = self.ranks()
                self._min_distance = int(ranks[ranks > 0].min())
            else:
                self._min_distance = LinAlg.pairwise_min_rank_distance(self.array, self.p, pair_cap)
        return self._min_distance

    def transpose(self):
        return RankCode(self.p, self.cols, self.rows, np.swapaxes(self.array, 1, 2),
                        linear=self.linear, claimed_distance=self.claimed_distance)

    def __eq__(self, other):
        if not isinstance(other, RankCode):
            return False
        return self.p == other.p and self.array.shape == other.array.shape and np.array_equal(self.array, other.array)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.array.shape, self.array.tobytes()))

    def __str__(self):
        return "RankCode(p={0}, {1}x{2}, count={3}, linear={4}, claimed_d={5})".format(
            self.p, self.rows, self.cols, self.size, self.linear, self.claimed_distance)


class ConstantRankCode(RankCode):
    """
    Rank code whose words all have rank r
    """

    def __init__(self, p, rows, cols, arr, r, claimed_distance=None):
        """
        Constructor
        :param r: the constant rank
        :type r: int
        """

        RankCode.__init__(self, p, rows, cols, arr, linear=False, claimed_distance=claimed_distance)
        self.r = r
        ranks = self.ranks()
        if np.any(ranks != r):
            bad = int(np.argmax(ranks != r))
            raise UsageException("Codeword rank mismatch, index={0}, cur={1}, need={2}".format(bad, int(ranks[bad]), r))

    @classmethod
    def from_matrices(cls, matrices, r=None, rows=None, cols=None, p=None, claimed_distance=None):
        matrices = list(matrices)
        if len(matrices) > 0:
            p = matrices[0].p if p is None else p
            rows = matrices[0].rows if rows is None else rows
            cols = matrices[0].cols if cols is None else cols
            r = matrices[0].rank() if r is None else r
        if p is None or rows is None or cols is None or r is None:
            raise UsageException("Empty code needs p, rows, cols, r")
        return cls(p, rows, cols, LinAlg.stack(matrices), r, claimed_distance=claimed_distance)

    def transpose(self):
        return ConstantRankCode(self.p, self.cols, self.rows, np.swapaxes(self.array, 1, 2), self.r,
                                claimed_distance=self.claimed_distance)

    def __str__(self):
        return "ConstantRankCode(p={0}, {1}x{2}, r={3}, count={4}, claimed_d={5})".format(
            self.p, self.rows, self.cols, self.r, self.size, self.claimed_distance)
