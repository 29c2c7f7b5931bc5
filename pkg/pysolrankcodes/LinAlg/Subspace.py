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

import numpy as np

from pysolrankcodes.Errors.RankCodeErrors import UsageException
from pysolrankcodes.LinAlg.GaussElim import GaussElim
from pysolrankcodes.LinAlg.MatrixGF import MatrixGF

logger = logging.getLogger(__name__)


class Subspace(object):
    """
    Subspace of GF(p)^n held by its reduced row echelon basis.
    Two subspaces are equal iff their bases are identical.
    """

    def __init__(self, basis):
        """
        Constructor. Use from_generators unless basis is already a rref basis.
        :param basis: rref basis, dim x n
        :type basis: MatrixGF
        """

        self.basis = basis
        self.p = basis.p
        self.ambient_dim = basis.cols
        self.dim = basis.rows

    @classmethod
    def from_generators(cls, generators):
        """
        Span of the rows of a matrix
        :param generators: MatrixGF
        :type generators: MatrixGF
        :return: Subspace
        :rtype: Subspace
        """

        if generators.rows == 0 or generators.cols == 0:
            return cls.zero(generators.p, generators.cols)
        top, _ = GaussElim.rref(generators.entries, generators.p)
        return Subspace(MatrixGF(generators.p, top, cols=generators.cols))

    @classmethod
    def zero(cls, p, n):
        return Subspace(MatrixGF.zeros(p, 0, n))

    @classmethod
    def full(cls, p, n):
        return Subspace(MatrixGF.identity(p, n))

    @classmethod
    def enumerate_grassmannian(cls, p, n, r):
        """
        Yield every r-dimensional subspace of GF(p)^n once
        :param p: prime
        :type p: int
        :param n: ambient dimension
        :type n: int
        :param r: dimension
        :type r: int
        :return: generator of Subspace
        :rtype: generator
        """

        if r < 0 or r > n:
            return
        if r == 0:
            yield cls.zero(p, n)
            return
        for pivots in itertools.combinations(range(n), r):
            pivot_set = set(pivots)
            # Free positions : right of the row pivot, outside pivot columns
            free = [(i, j) for i, piv in enumerate(pivots) for j in range(piv + 1, n) if j not in pivot_set]
            base = np.zeros((r, n), dtype=np.int64)
            for i, piv in enumerate(pivots):
                base[i, piv] = 1
            for values in itertools.product(range(p), repeat=len(free)):
                arr = base.copy()
                for (i, j), v in zip(free, values):
                    arr[i, j] = v
                yield Subspace(MatrixGF(p, arr))

    def pivots(self):
        return [int(np.argmax(row != 0)) for row in self.basis.entries]

    def vectors(self):
        """
        All p^dim vectors of the subspace, as a set of tuples
        :return: set
        :rtype: set
        """

        out = set()
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            if self.dim == 0:
                v = np.zeros(self.ambient_dim, dtype=np.int64)
            else:
                v = (np.array(coeffs, dtype=np.int64) @ self.basis.entries) % self.p
            out.add(tuple(int(x) for x in v))
        return out

    def check_ambient(self, other):
        if self.p != other.p or self.ambient_dim != other.ambient_dim:
            raise UsageException("Ambient mismatch, cur=GF({0})^{1}, other=GF({2})^{3}".format(
                self.p, self.ambient_dim, other.p, other.ambient_dim))

    def key(self):
        return self.dim, self.basis.key()

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return False
        return self.basis == other.basis

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash(self.basis)

    def __str__(self):
        return "Subspace(dim={0}, n={1}, [{2}])".format(self.dim, self.ambient_dim, self.basis.to_text())

    def __repr__(self):
        return self.__str__()
