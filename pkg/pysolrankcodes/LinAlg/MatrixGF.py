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

logger = logging.getLogger(__name__)


class MatrixGF(object):
    """
    Immutable dense matrix over GF(p), entries held in a read-only int64 numpy array
    """

    def __init__(self, p, entries, cols=None):
        """
        Constructor. Entries are reduced mod p.
        :param p: prime
        :type p: int
        :param entries: 2d array-like
        :type entries: np.ndarray,list
        :param cols: column count, used when entries has no row
        :type cols: int,None
        """

        arr = np.array(entries, dtype=np.int64)
        if arr.size == 0 and arr.ndim != 2:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise UsageException("Need a 2d matrix, got ndim={0}".format(arr.ndim))
        arr %= p
        arr.flags.writeable = False

        self.p = p
        self.entries = arr
        self.rows, self.cols = arr.shape
        self._rank = None

    @classmethod
    def zeros(cls, p, rows, cols):
        return MatrixGF(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, p, n):
        return MatrixGF(p, np.eye(n, dtype=np.int64))

    @classmethod
    def canonical(cls, p, rows, cols, rank):
        """
        [I_rank 0; 0 0]
        :param p: prime
        :type p: int
        :param rows: int
        :type rows: int
        :param cols: int
        :type cols: int
        :param rank: int
        :type rank: int
        :return: MatrixGF
        :rtype: MatrixGF
        """
        arr = np.zeros((rows, cols), dtype=np.int64)
        for i in range(rank):
            arr[i, i] = 1
        return MatrixGF(p, arr)

    # ====================================
    # TEXT
    # ====================================

    def to_text(self):
        """
        Rows separated by ";", entries by spaces. Empty matrix gives "-".
        :return: str
        :rtype: str
        """

        if self.rows == 0:
            return "-"
        return "; ".join(" ".join(str(int(v)) for v in row) for row in self.entries)

    @classmethod
    def from_text(cls, p, buf, cols=None):
        """
        Parse "1 0 1; 0 1 1"
        :param p: prime
        :type p: int
        :param buf: str
        :type buf: str
        :param cols: expected column count (mandatory for the empty matrix "-")
        :type cols: int,None
        :return: MatrixGF
        :rtype: MatrixGF
        """

        buf = buf.strip()
        if buf in ("", "-"):
            return MatrixGF.zeros(p, 0, cols or 0)

        rows = []
        for row_buf in buf.split(";"):
            try:
                row = [int(v) for v in row_buf.split()]
            except ValueError:
                raise UsageException("Invalid matrix row, row={0}".format(row_buf))
            for v in row:
                if v < 0 or v >= p:
                    raise UsageException("Matrix entry out of range, cur={0}, p={1}".format(v, p))
            rows.append(row)

        widths = set(len(r) for r in rows)
        if len(widths) != 1:
            raise UsageException("Ragged matrix, widths={0}".format(sorted(widths)))
        if cols is not None and widths.pop() != cols:
            raise UsageException("Column count mismatch, cur={0}, need={1}".format(len(rows[0]), cols))
        return MatrixGF(p, rows)

    # ====================================
    # ALGEBRA
    # ====================================

    def _check_same(self, other):
        if not isinstance(other, MatrixGF) or other.p != self.p:
            raise UsageException("Field mismatch, p={0}".format(self.p))
        if other.rows != self.rows or other.cols != self.cols:
            raise UsageException("Shape mismatch, cur={0}x{1}, other={2}x{3}".format(
                self.rows, self.cols, other.rows, other.cols))

    def transpose(self):
        return MatrixGF(self.p, self.entries.T)

    def add(self, other):
        self._check_same(other)
        return MatrixGF(self.p, self.entries + other.entries)

    def sub(self, other):
        self._check_same(other)
        return MatrixGF(self.p, self.entries - other.entries)

    def matmul(self, other):
        """
        Product mod p
        :param other: MatrixGF
        :type other: MatrixGF
        :return: MatrixGF
        :rtype: MatrixGF
        """

        if not isinstance(other, MatrixGF) or other.p != self.p:
            raise UsageException("Field mismatch, p={0}".format(self.p))
        if self.cols != other.rows:
            raise UsageException("Inner dimension mismatch, cur={0}, other={1}".format(self.cols, other.rows))
        return MatrixGF(self.p, (self.entries @ other.entries) % self.p)

    def vstack(self, other):
        if other.p != self.p or other.cols != self.cols:
            raise UsageException("Column count mismatch, cur={0}, other={1}".format(self.cols, other.cols))
        return MatrixGF(self.p, np.vstack([self.entries, other.entries]))

    def rank(self):
        """
        Rank over GF(p), cached
        :return: int
        :rtype: int
        """

        if self._rank is None:
            if self.rows == 0 or self.cols == 0:
                self._rank = 0
            else:
                self._rank = int(GaussElim.batch_rank(self.entries[None, :, :], self.p)[0])
        return self._rank

    def is_zero(self):
        return not self.entries.any()

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __matmul__(self, other):
        return self.matmul(other)

    # ====================================
    # IDENTITY
    # ====================================

    def key(self):
        """
        Canonical ordering/hashing key
        :return: tuple
        :rtype: tuple
        """
        return self.p, self.rows, self.cols, self.entries.tobytes()

    def __eq__(self, other):
        if not isinstance(other, MatrixGF):
            return False
        return self.key() == other.key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return "MatrixGF(p={0}, {1}x{2}, [{3}])".format(self.p, self.rows, self.cols, self.to_text())

    def __repr__(self):
        return self.__str__()
