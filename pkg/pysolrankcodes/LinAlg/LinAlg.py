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

from pysolrankcodes.Errors.RankCodeErrors import UsageException, CapacityException
from pysolrankcodes.LinAlg.GaussElim import GaussElim
from pysolrankcodes.LinAlg.MatrixGF import MatrixGF
from pysolrankcodes.LinAlg.Subspace import Subspace

logger = logging.getLogger(__name__)


class LinAlg(object):
    """
    Rank, row/column spaces, rank factorization and the rank, subspace and injection metrics
    """

    # Minimum distance of a code with fewer than two words
    INFINITE_DISTANCE = math.inf

    # ====================================
    # RANK / SPACES
    # ====================================

    @classmethod
    def rank(cls, x):
        """
        Rank over GF(p)
        :param x: MatrixGF
        :type x: MatrixGF
        :return: int
        :rtype: int
        """
        return x.rank()

    @classmethod
    def row_space(cls, x):
        """
        Row space R(X) in GF(p)^cols
        :param x: MatrixGF
        :type x: MatrixGF
        :return: Subspace
        :rtype: Subspace
        """
        return Subspace.from_generators(x)

    @classmethod
    def col_space(cls, x):
        """
        Column space C(X) in GF(p)^rows
        :param x: MatrixGF
        :type x: MatrixGF
        :return: Subspace
        :rtype: Subspace
        """
        return Subspace.from_generators(x.transpose())

    @classmethod
    def rank_factorization(cls, x):
        """
        X = G^T H, G (r x rows) taken from the pivot columns of X, H (r x cols) the nonzero rref rows
        :param x: MatrixGF
        :type x: MatrixGF
        :return: tuple (G, H)
        :rtype: tuple
        """

        if x.rows == 0 or x.cols == 0 or x.is_zero():
            return MatrixGF.zeros(x.p, 0, x.rows), MatrixGF.zeros(x.p, 0, x.cols)
        top, pivots = GaussElim.rref(x.entries, x.p)
        g = MatrixGF(x.p, x.entries[:, pivots].T)
        h = MatrixGF(x.p, top)
        return g, h

    # ====================================
    # SUBSPACE METRICS
    # ====================================

    @classmethod
    def subspace_sum_dim(cls, u, v):
        """
        dim(U+V)
        :param u: Subspace
        :type u: Subspace
        :param v: Subspace
        :type v: Subspace
        :return: int
        :rtype: int
        """

        u.check_ambient(v)
        return u.basis.vstack(v.basis).rank()

    @classmethod
    def subspace_intersect_dim(cls, u, v):
        return u.dim + v.dim - cls.subspace_sum_dim(u, v)

    @classmethod
    def subspace_distance(cls, u, v):
        return 2 * cls.subspace_sum_dim(u, v) - u.dim - v.dim

    @classmethod
    def injection_distance(cls, u, v):
        return cls.subspace_sum_dim(u, v) - min(u.dim, v.dim)

    @classmethod
    def rank_distance(cls, x, y):
        return x.sub(y).rank()

    # ====================================
    # SUBSPACE DISTANCE SANDWICH
    # ====================================

    @classmethod
    def theorem1_bounds(cls, x, y):
        """
        Lower and upper bounds on d_R(X,Y) from row and column space distances.
        lower = dI(R) + dI(C) - |rk X - rk Y|, upper = min(dI(R), dI(C)) + min(rk X, rk Y)
        :param x: MatrixGF
        :type x: MatrixGF
        :param y: MatrixGF
        :type y: MatrixGF
        :return: tuple (lower, upper)
        :rtype: tuple
        """

        if x.rows != y.rows or x.cols != y.cols:
            raise UsageException("Shape mismatch, cur={0}x{1}, other={2}x{3}".format(x.rows, x.cols, y.rows, y.cols))
        rx, ry = x.rank(), y.rank()
        d_row = cls.injection_distance(cls.row_space(x), cls.row_space(y))
        d_col = cls.injection_distance(cls.col_space(x), cls.col_space(y))
        lower = d_row + d_col - abs(rx - ry)
        upper = min(d_row, d_col) + min(rx, ry)
        return lower, upper

    @classmethod
    def theorem1_bounds_batch(cls, x_arr, y_arr, p):
        """
        theorem1_bounds and d_R for every pair (x_arr[i], y_arr[i])
        :param x_arr: array (count, rows, cols)
        :type x_arr: np.ndarray
        :param y_arr: array (count, rows, cols)
        :type y_arr: np.ndarray
        :param p: prime
        :type p: int
        :return: tuple of arrays (lower, upper, d_rank)
        :rtype: tuple
        """

        x_arr = np.asarray(x_arr, dtype=np.int64) % p
        y_arr = np.asarray(y_arr, dtype=np.int64) % p
        if x_arr.shape != y_arr.shape or x_arr.ndim != 3:
            raise UsageException("Shape mismatch, cur={0}, other={1}".format(x_arr.shape, y_arr.shape))
        rx = GaussElim.batch_rank(x_arr, p)
        ry = GaussElim.batch_rank(y_arr, p)
        low_rk = np.minimum(rx, ry)
        # dim(R(X)+R(Y)) and dim(C(X)+C(Y))
        d_row = GaussElim.batch_rank(np.concatenate([x_arr, y_arr], axis=1), p) - low_rk
        d_col = GaussElim.batch_rank(np.concatenate([x_arr, y_arr], axis=2), p) - low_rk
        lower = d_row + d_col - np.abs(rx - ry)
        upper = np.minimum(d_row, d_col) + low_rk
        return lower, upper, GaussElim.batch_rank((x_arr - y_arr) % p, p)

    # ====================================
    # BATCHED HELPERS
    # ====================================

    @classmethod
    def stack(cls, matrices):
        """
        Stack equal-shape matrices into an int64 array (count, rows, cols)
        :param matrices: list of MatrixGF
        :type matrices: list
        :return: np.ndarray
        :rtype: np.ndarray
        """

        if len(matrices) == 0:
            return np.zeros((0, 0, 0), dtype=np.int64)
        return np.stack([mat.entries for mat in matrices]).astype(np.int64)

    @classmethod
    def rank_distances_from(cls, arr, x_arr, p):
        """
        Ranks of arr[i] - x for every i
        :param arr: array (count, rows, cols)
        :type arr: np.ndarray
        :param x_arr: array (rows, cols)
        :type x_arr: np.ndarray
        :param p: prime
        :type p: int
        :return: np.ndarray
        :rtype: np.ndarray
        """
        return GaussElim.batch_rank((arr - x_arr[None, :, :]) % p, p)

    @classmethod
    def pairwise_min_rank_distance(cls, arr, p, pair_cap=1 << 26):
        """
        Minimum of rk(arr[i] - arr[j]) over i < j, INFINITE_DISTANCE below two words
        :param arr: array (count, rows, cols)
        :type arr: np.ndarray
        :param p: prime
        :type p: int
        :param pair_cap: pair budget
        :type pair_cap: int
        :return: int or inf
        :rtype: int,float
        """

        count = arr.shape[0]
        if count < 2:
            return cls.INFINITE_DISTANCE
        pairs = count * (count - 1) // 2
        if pairs > pair_cap:
            raise CapacityException("pairwise distance", pairs, pair_cap)

        best = cls.INFINITE_DISTANCE
        for i in range(count - 1):
            ranks = cls.rank_distances_from(arr[i + 1:], arr[i], p)
            cur = int(ranks.min())
            if cur < best:
                best = cur
                if best == 1:
                    break
        return best

    @classmethod
    def pairwise_min_injection_distance(cls, subspaces):
        """
        Minimum injection distance over pairs of equal-dimension subspaces
        :param subspaces: list of Subspace, same dim and ambient
        :type subspaces: list
        :return: int or inf
        :rtype: int,float
        """

        count = len(subspaces)
        if count < 2:
            return cls.INFINITE_DISTANCE
        p = subspaces[0].p
        r = subspaces[0].dim
        if r == 0:
            return 0
        bases = cls.stack([s.basis for s in subspaces])
        best = cls.INFINITE_DISTANCE
        for i in range(count - 1):
            others = bases[i + 1:]
            pairs = np.concatenate([np.broadcast_to(bases[i], others.shape), others], axis=1)
            cur = int(GaussElim.batch_rank(pairs, p).min()) - r
            if cur < best:
                best = cur
        return best
