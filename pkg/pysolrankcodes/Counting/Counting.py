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
from functools import lru_cache

from pysolrankcodes.Errors.RankCodeErrors import UsageException

logger = logging.getLogger(__name__)


class Counting(object):
    """
    Closed-form counts, all exact python integers (K_q excepted)
    """

    @classmethod
    @lru_cache(maxsize=4096)
    def alpha(cls, m, r, q):
        """
        alpha(m, r) = prod_{i<r} (q^m - q^i), the number of ordered independent r-tuples of GF(q)^m
        :param m: int
        :type m: int
        :param r: int
        :type r: int
        :param q: int
        :type q: int
        :return: int
        :rtype: int
        """

        if r < 0:
            raise UsageException("Need r>=0, got r={0}".format(r))
        out = 1
        qm = q ** m
        for i in range(r):
            out *= qm - q ** i
        return out

    @classmethod
    @lru_cache(maxsize=4096)
    def gaussian_binomial(cls, n, r, q):
        """
        Number of r-dimensional subspaces of GF(q)^n, 0 when r<0 or r>n
        :param n: int
        :type n: int
        :param r: int
        :type r: int
        :param q: int
        :type q: int
        :return: int
        :rtype: int
        """

        if r < 0 or r > n:
            return 0
        num = cls.alpha(n, r, q)
        den = cls.alpha(r, r, q)
        assert num % den == 0
        return num // den

    @classmethod
    def n_rank(cls, q, m, n, r):
        """
        N_R(q,m,n,r) : number of m x n matrices of rank r
        """

        if r < 0 or r > min(m, n):
            return 0
        return cls.gaussian_binomial(n, r, q) * cls.alpha(m, r, q)

    @classmethod
    def k_q(cls, q, tol=1e-12):
        """
        Truncated prod_{j>=1} (1 - q^-j), stopping once the next factor moves the product by less than tol
        :param q: int
        :type q: int
        :param tol: float
        :type tol: float
        :return: float
        :rtype: float
        """

        if tol <= 0:
            raise UsageException("Need tol>0, got tol={0}".format(tol))
        out = 1.0
        j = 1
        while True:
            term = float(q) ** (-j)
            out *= 1.0 - term
            if term < tol * out:
                break
            j += 1
        return out

    @classmethod
    def n_cdc_ball_shell(cls, q, n, r, d):
        """
        N_C(d) = q^(d^2) [r d] [n-r d] : subspaces of E_r(q,n) at injection distance d of a given one
        """

        if d < 0 or r < 0 or r > n:
            raise UsageException("Invalid shell parameters, n={0}, r={1}, d={2}".format(n, r, d))
        return q ** (d * d) * cls.gaussian_binomial(r, d, q) * cls.gaussian_binomial(n - r, d, q)

    @classmethod
    def mrd_rank_distribution(cls, q, m, n, d, r):
        """
        M(q,m,n,d,r) : rank r codewords of a linear (n, n-d+1, d) MRD code over GF(q^m)
        :param q: int
        :type q: int
        :param m: int
        :type m: int
        :param n: int
        :type n: int
        :param d: int
        :type d: int
        :param r: int
        :type r: int
        :return: int
        :rtype: int
        """

        if not (1 <= d <= r <= n <= m):
            raise UsageException("Need 1<=d<=r<=n<=m, got m={0}, n={1}, d={2}, r={3}".format(m, n, d, r))
        acc = 0
        for j in range(d, r + 1):
            t = r - j
            term = cls.gaussian_binomial(r, j, q) * q ** (t * (t - 1) // 2) * (q ** (m * (j - d + 1)) - 1)
            acc += term if t % 2 == 0 else -term
        return cls.gaussian_binomial(n, r, q) * acc

    @classmethod
    def mrd_distribution(cls, q, m, n, d):
        """
        Full rank distribution [A_0..A_n] of a linear (n, n-d+1, d) MRD code, n<=m
        :return: list of int
        :rtype: list
        """

        out = [1] + [0] * n
        for r in range(d, n + 1):
            out[r] = cls.mrd_rank_distribution(q, m, n, d, r)
        return out

    @classmethod
    def m_zero(cls, n, r, d):
        """
        Row threshold (n-r)(r-d+1)+r+1
        """

        if not (1 <= d <= r <= n):
            raise UsageException("Need 1<=d<=r<=n, got n={0}, r={1}, d={2}".format(n, r, d))
        return (n - r) * (r - d + 1) + r + 1

    @classmethod
    def ceil_div(cls, a, b):
        return -((-a) // b)
