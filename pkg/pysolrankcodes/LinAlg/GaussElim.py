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

import numpy as np
from pysolbase.SolBase import SolBase

logger = logging.getLogger(__name__)


class GaussElim(object):
    """
    Batched Gaussian elimination over GF(p).
    Works on int64 arrays of shape (batch, rows, cols), all entries reduced mod p.
    """

    # Matrices processed per numpy pass
    CHUNK_SIZE = 1 << 15

    @classmethod
    @lru_cache(maxsize=64)
    def inverse_table(cls, p):
        """
        Multiplicative inverses mod p, index 0 maps to 0
        :param p: prime
        :type p: int
        :return: numpy array
        :rtype: np.ndarray
        """

        inv = np.zeros(p, dtype=np.int64)
        for v in range(1, p):
            inv[v] = pow(v, p - 2, p)
        inv.flags.writeable = False
        return inv

    @classmethod
    def batch_rref(cls, arr, p):
        """
        Reduced row echelon form of every matrix of the batch.
        :param arr: array (batch, rows, cols)
        :type arr: np.ndarray
        :param p: prime
        :type p: int
        :return: tuple (rref array, ranks array)
        :rtype: tuple
        """

        a = np.array(arr, dtype=np.int64) % p
        if a.ndim != 3:
            raise ValueError("Need a 3d array, got ndim={0}".format(a.ndim))
        b_count, rows, cols = a.shape
        ranks = np.zeros(b_count, dtype=np.int64)
        if b_count == 0 or rows == 0 or cols == 0:
            return a, ranks

        inv = cls.inverse_table(p)
        all_b = np.arange(b_count)
        row_idx = np.arange(rows)

        for col in range(cols):
            # Candidate pivots : nonzero, at or below the current pivot row
            cand = (a[:, :, col] != 0) & (row_idx[None, :] >= ranks[:, None])
            has = cand.any(axis=1)
            if not has.any():
                continue
            b = all_b[has]
            piv = np.argmax(cand[b], axis=1)
            r0 = ranks[b]

            # Swap
            pivot_rows = a[b, piv, :].copy()
            a[b, piv, :] = a[b, r0, :]

            # Normalize
            pivot_rows = (pivot_rows * inv[pivot_rows[:, col]][:, None]) % p
            a[b, r0, :] = pivot_rows

            # Eliminate above and below
            factors = a[b, :, col].copy()
            factors[np.arange(len(b)), r0] = 0
            a[b] = (a[b] - factors[:, :, None] * pivot_rows[:, None, :]) % p
            ranks[b] += 1

        return a, ranks

    @classmethod
    def batch_rank(cls, arr, p):
        """
        Rank of every matrix of the batch, chunked to bound memory.
        :param arr: array (batch, rows, cols)
        :type arr: np.ndarray
        :param p: prime
        :type p: int
        :return: ranks
        :rtype: np.ndarray
        """

        arr = np.asarray(arr)
        total = arr.shape[0]
        if total <= cls.CHUNK_SIZE:
            return cls.batch_rref(arr, p)[1]

        out = np.empty(total, dtype=np.int64)
        for start in range(0, total, cls.CHUNK_SIZE):
            stop = min(total, start + cls.CHUNK_SIZE)
            out[start:stop] = cls.batch_rref(arr[start:stop], p)[1]
            SolBase.sleep(0)
        return out

    @classmethod
    def rref(cls, entries, p):
        """
        Reduced row echelon form of a single matrix
        :param entries: array (rows, cols)
        :type entries: np.ndarray
        :param p: prime
        :type p: int
        :return: tuple (nonzero rref rows, pivot column list)
        :rtype: tuple
        """

        entries = np.asarray(entries, dtype=np.int64)
        rows, cols = entries.shape
        red, ranks = cls.batch_rref(entries.reshape(1, rows, cols), p)
        r = int(ranks[0])
        top = red[0, :r, :]
        pivots = [int(np.argmax(top[i] != 0)) for i in range(r)]
        return top, pivots

    @classmethod
    def index_to_digits(cls, indices, base, width):
        """
        Base-`base` digits of each index, most significant digit first
        :param indices: 1d int array
        :type indices: np.ndarray
        :param base: digit base
        :type base: int
        :param width: number of digits
        :type width: int
        :return: array (len(indices), width)
        :rtype: np.ndarray
        """

        out = np.zeros((len(indices), width), dtype=np.int64)
        cur = np.array(indices, dtype=np.int64)
        for pos in range(width - 1, -1, -1):
            out[:, pos] = cur % base
            cur //= base
        return out
