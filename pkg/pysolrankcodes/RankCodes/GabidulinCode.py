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
from pysolbase.SolBase import SolBase

from pysolrankcodes.Errors.RankCodeErrors import CapacityException
from pysolrankcodes.LinAlg.GaussElim import GaussElim
from pysolrankcodes.LinAlg.MatrixGF import MatrixGF

logger = logging.getLogger(__name__)


class GabidulinCode(object):
    """
    Linear generalized Gabidulin code handle: generator matrix over GF(q^m), lazy message-space encoding.
    Message index i is the base q^m number whose most significant digit is message coordinate 0.
    """

    DEFAULT_ENUM_CAP = 1 << 22

    def __init__(self, spec):
        """
        Constructor
        :param spec: GabidulinSpec
        :type spec: pysolrankcodes.RankCodes.GabidulinSpec.GabidulinSpec
        """

        self.spec = spec
        self.field_spec = spec.field_spec
        fs = self.field_spec
        g = fs.gf([e.to_int() for e in spec.g])
        rows = [fs.frobenius(g, spec.row_offset + i, spec.a_param) for i in range(spec.k)]
        if spec.k == 0:
            self.generator = fs.gf(np.zeros((0, spec.n), dtype=np.int64))
        else:
            self.generator = fs.gf(np.stack([np.asarray(row.view(np.ndarray)) for row in rows]))

    @property
    def q(self):
        return self.field_spec.p

    @property
    def m(self):
        return self.field_spec.m

    @property
    def n(self):
        return self.spec.n

    @property
    def k(self):
        return self.spec.k

    @property
    def size(self):
        return self.field_spec.order ** self.k

    def generator_rows(self):
        """
        Generator rows as lists of ExtElement
        :return: list of list
        :rtype: list
        """

        from pysolrankcodes.Gf.ExtElement import ExtElement

        out = []
        for row in self.generator:
            out.append([ExtElement.from_int(self.field_spec, int(v)) for v in row])
        return out

    def messages(self, start, stop):
        """
        Message coordinates (stop-start, k) as galois integers
        """
        return GaussElim.index_to_digits(np.arange(start, stop, dtype=np.int64), self.field_spec.order, self.k)

    def encode_messages(self, msgs):
        """
        Encode message rows into matrices
        :param msgs: int array (count, k)
        :type msgs: np.ndarray
        :return: array (count, m, n)
        :rtype: np.ndarray
        """

        count = msgs.shape[0]
        if self.k == 0:
            return np.zeros((count, self.m, self.n), dtype=np.int64)
        words = self.field_spec.gf(msgs) @ self.generator
        return self.field_spec.elements_to_columns(words)

    def encode_range(self, start, stop):
        return self.encode_messages(self.messages(start, stop))

    def check_cap(self, enum_cap):
        if self.size > enum_cap:
            raise CapacityException("codeword enumeration", self.size, enum_cap)

    def iter_chunks(self, enum_cap=DEFAULT_ENUM_CAP):
        """
        Yield (start, array (count, m, n)) blocks covering the code in message order
        """

        self.check_cap(enum_cap)
        total = self.size
        for start in range(0, total, GaussElim.CHUNK_SIZE):
            stop = min(total, start + GaussElim.CHUNK_SIZE)
            yield start, self.encode_range(start, stop)
            SolBase.sleep(0)

    def codeword_array(self, enum_cap=DEFAULT_ENUM_CAP):
        """
        All codewords stacked in message order
        :return: array (q^(mk), m, n)
        :rtype: np.ndarray
        """

        blocks = [block for _, block in self.iter_chunks(enum_cap)]
        return np.concatenate(blocks, axis=0)

    def enumerate_codewords(self, enum_cap=DEFAULT_ENUM_CAP):
        """
        Stream every codeword once, as MatrixGF
        :return: generator of MatrixGF
        :rtype: generator
        """

        for _, block in self.iter_chunks(enum_cap):
            for mat in block:
                yield MatrixGF(self.q, mat)

    def rank_histogram(self, enum_cap=DEFAULT_ENUM_CAP):
        """
        Rank distribution [A_0..A_n], without storing the code
        :return: list of int
        :rtype: list
        """

        hist = np.zeros(self.n + 1, dtype=np.int64)
        for _, block in self.iter_chunks(enum_cap):
            hist += np.bincount(GaussElim.batch_rank(block, self.q), minlength=self.n + 1)
        return [int(v) for v in hist]

    def __str__(self):
        return "GabidulinCode({0}, size={1})".format(self.spec, self.size)
