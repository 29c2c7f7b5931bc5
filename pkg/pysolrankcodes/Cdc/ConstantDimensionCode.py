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
from pysolrankcodes.LinAlg.LinAlg import LinAlg

logger = logging.getLogger(__name__)


class ConstantDimensionCode(object):
    """
    Set of r-dimensional subspaces of GF(q)^n, kept in canonical order.
    The minimum injection distance is computed on first access.
    """

    def __init__(self, p, n, r, subspaces, claimed_distance=None):
        """
        Constructor
        :param p: prime
        :type p: int
        :param n: ambient dimension
        :type n: int
        :param r: dimension of every member
        :type r: int
        :param subspaces: iterable of Subspace
        :type subspaces: list,set,tuple
        :param claimed_distance: claimed minimum injection distance
        :type claimed_distance: int,None
        """

        members = sorted(set(subspaces))
        for s in members:
            if s.p != p or s.ambient_dim != n or s.dim != r:
                raise UsageException("Member outside E_{0}(GF({1})^{2}), got {3}".format(r, p, n, s))
        self.p = p
        self.n = n
        self.r = r
        self.subspaces = tuple(members)
        self.claimed_distance = claimed_distance
        self._min_distance = None

    @property
    def size(self):
        return len(self.subspaces)

    def __len__(self):
        return len(self.subspaces)

    def __iter__(self):
        return iter(self.subspaces)

    def __contains__(self, s):
        return s in set(self.subspaces)

    def min_injection_distance(self):
        """
        Pairwise minimum, inf below two members
        :return: int, float
        :rtype: int,float
        """

        if self._min_distance is None:
            self._min_distance = LinAlg.pairwise_min_injection_distance(list(self.subspaces))
        return self._min_distance

    def with_members(self, subspaces):
        """
        New code over the same Grassmannian
        """
        return ConstantDimensionCode(self.p, self.n, self.r, subspaces, claimed_distance=self.claimed_distance)

    def __eq__(self, other):
        if not isinstance(other, ConstantDimensionCode):
            return False
        return (self.p, self.n, self.r, self.subspaces) == (other.p, other.n, other.r, other.subspaces)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.n, self.r, self.subspaces))

    def __str__(self):
        return "ConstantDimensionCode(p={0}, n={1}, r={2}, count={3}, claimed_d={4})".format(
            self.p, self.n, self.r, self.size, self.claimed_distance)
