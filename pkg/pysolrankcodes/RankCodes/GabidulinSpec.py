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

from pysolrankcodes.Errors.RankCodeErrors import UsageException
from pysolrankcodes.Gf.ExtElement import ExtElement

logger = logging.getLogger(__name__)


class GabidulinSpec(object):
    """
    Parameters of a generalized Gabidulin code over GF(q^m).
    Generator rows are g^[row_offset], ..., g^[row_offset+k-1], where g^[i] raises each coordinate to the q^(a*i)-th power.
    """

    def __init__(self, field_spec, n, k, a_param=1, g=None, row_offset=0):
        """
        Constructor
        :param field_spec: FieldSpec
        :type field_spec: pysolrankcodes.Gf.FieldSpec.FieldSpec
        :param n: length, n <= m
        :type n: int
        :param k: dimension, k = n-d+1 for the (n, k, d) code
        :type k: int
        :param a_param: automorphism step, coprime to m
        :type a_param: int
        :param g: list of n ExtElement of rank n (None : 1, x, ..., x^(n-1))
        :type g: list,None
        :param row_offset: index of the first Frobenius power
        :type row_offset: int
        """

        self.field_spec = field_spec
        self.n = n
        self.k = k
        self.a_param = a_param
        self.row_offset = row_offset

        if not (1 <= n <= field_spec.m):
            raise UsageException("Need 1<=n<=m, got n={0}, m={1}".format(n, field_spec.m))
        if not (0 <= k <= n):
            raise UsageException("Need 0<=k<=n, got k={0}, n={1}".format(k, n))
        if row_offset < 0:
            raise UsageException("Need row_offset>=0, got row_offset={0}".format(row_offset))
        field_spec.check_automorphism(a_param)

        if g is None:
            g = [ExtElement.x_power(field_spec, i) for i in range(n)]
        g = list(g)
        if len(g) != n:
            raise UsageException("Generator length mismatch, cur={0}, need={1}".format(len(g), n))
        rk = field_spec.vec_to_matrix(g).rank()
        if rk != n:
            raise UsageException("Generator vector rank too low, cur={0}, need={1}".format(rk, n))
        self.g = g

    @property
    def q(self):
        return self.field_spec.p

    @property
    def m(self):
        return self.field_spec.m

    @property
    def d(self):
        """
        Designed minimum rank distance n-k+1
        """
        return self.n - self.k + 1

    @classmethod
    def for_distance(cls, field_spec, n, d, a_param=1, g=None):
        """
        The (n, n-d+1, d) code
        """

        if not (1 <= d <= n):
            raise UsageException("Need 1<=d<=n, got d={0}, n={1}".format(d, n))
        return GabidulinSpec(field_spec, n, n - d + 1, a_param=a_param, g=g)

    def __str__(self):
        return "GabidulinSpec(q={0}, m={1}, n={2}, k={3}, a={4}, offset={5}, g=[{6}])".format(
            self.q, self.m, self.n, self.k, self.a_param, self.row_offset,
            " ".join(str(e.to_int()) for e in self.g))
