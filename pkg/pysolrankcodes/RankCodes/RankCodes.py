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
from fractions import Fraction

import numpy as np
from gevent.pool import Pool
from pysolbase.SolBase import SolBase

from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Errors.RankCodeErrors import CapacityException, UsageException
from pysolrankcodes.Gf.FieldSpec import FieldSpec
from pysolrankcodes.LinAlg.GaussElim import GaussElim
from pysolrankcodes.LinAlg.MatrixGF import MatrixGF
from pysolrankcodes.RankCodes.GabidulinCode import GabidulinCode
from pysolrankcodes.RankCodes.GabidulinSpec import GabidulinSpec
from pysolrankcodes.RankCodes.RankCode import RankCode, ConstantRankCode

logger = logging.getLogger(__name__)


class CosetSearchResult(object):
    """
    Outcome of a coset translate search
    """

    def __init__(self):
        """
        Const
        """

        # Parameters
        self.q = None
        self.m = None
        self.n = None
        self.d = None
        self.r = None

        # sigma_r(c') for every c' in message order (0 for skipped c')
        self.sigma = list()

        # Index and word of the first maximizing c'
        self.best_index = None
        self.best_c_prime = None

        # Rank r words of C + best c'
        self.code = None

        # Rank r words of every coset, when requested (index -> ConstantRankCode)
        self.all_codes = None

        # Sum of sigma, and the guaranteed [n r] q^(m(r-d+1))
        self.tau = None
        self.guaranteed = None

        # Elapsed
        self.elapsed_ms = None

    @property
    def best_sigma(self):
        return self.sigma[self.best_index]

    def __str__(self):
        return "CosetSearchResult(q={0}, m={1}, n={2}, d={3}, r={4}, best_index={5}, best_sigma={6}, " \
               "tau={7}, guaranteed={8}, ms={9})".format(
                self.q, self.m, self.n, self.d, self.r, self.best_index,
                self.best_sigma if self.best_index is not None else None,
                self.tau, self.guaranteed, self.elapsed_ms)


class RankCodes(object):
    """
    Rank metric code operations : Gabidulin construction, rank shells, distances, coset translates
    """

    @classmethod
    def field(cls, q, m, modulus_poly=None):
        return FieldSpec(q, m, modulus_poly)

    @classmethod
    def build_gabidulin(cls, spec):
        """
        Build the code handle
        :param spec: GabidulinSpec
        :type spec: GabidulinSpec
        :return: GabidulinCode
        :rtype: GabidulinCode
        """

        code = GabidulinCode(spec)
        logger.debug("Built %s", code)
        return code

    @classmethod
    def enumerate_codewords(cls, code, enum_cap=GabidulinCode.DEFAULT_ENUM_CAP):
        return code.enumerate_codewords(enum_cap)

    @classmethod
    def to_rank_code(cls, code, enum_cap=GabidulinCode.DEFAULT_ENUM_CAP):
        """
        Explicit RankCode of a Gabidulin handle
        """

        return RankCode(code.q, code.m, code.n, code.codeword_array(enum_cap), linear=True,
                        claimed_distance=code.spec.d if code.k > 0 else None)

    @classmethod
    def rank_shell(cls, code, r, enum_cap=GabidulinCode.DEFAULT_ENUM_CAP):
        """
        Codewords of rank r
        :param code: GabidulinCode or RankCode
        :type code: GabidulinCode,RankCode
        :param r: rank
        :type r: int
        :param enum_cap: enumeration budget
        :type enum_cap: int
        :return: ConstantRankCode
        :rtype: ConstantRankCode
        """

        if isinstance(code, GabidulinCode):
            blocks = []
            for _, block in code.iter_chunks(enum_cap):
                ranks = GaussElim.batch_rank(block, code.q)
                blocks.append(block[ranks == r])
            arr = np.concatenate(blocks, axis=0)
            claimed = code.spec.d if code.k > 0 else None
            return ConstantRankCode(code.q, code.m, code.n, arr, r, claimed_distance=claimed)

        arr = code.array[code.ranks() == r]
        return ConstantRankCode(code.p, code.rows, code.cols, arr, r, claimed_distance=code.claimed_distance)

    @classmethod
    def rank_distribution(cls, code, enum_cap=GabidulinCode.DEFAULT_ENUM_CAP):
        if isinstance(code, GabidulinCode):
            return code.rank_histogram(enum_cap)
        return code.rank_distribution()

    @classmethod
    def min_rank_distance(cls, code, enum_cap=GabidulinCode.DEFAULT_ENUM_CAP):
        """
        Minimum rank distance, inf for fewer than two words
        """

        if isinstance(code, GabidulinCode):
            hist = code.rank_histogram(enum_cap)
            nonzero = [i for i in range(1, len(hist)) if hist[i] > 0]
            if len(nonzero) == 0:
                return float("inf")
            return nonzero[0]
        return code.min_rank_distance()

    # ====================================
    # COSET TRANSLATES
    # ====================================

    @classmethod
    def coset_codes(cls, field_spec, n, d, r, a_param=1, g=None):
        """
        C = (n, n-d+1, d) code from rows 0..n-d, C' = (n, d-r, n-d+r+1) code from rows n-d+1..n-r
        :return: tuple (C, C')
        :rtype: tuple
        """

        c_spec = GabidulinSpec(field_spec, n, n - d + 1, a_param=a_param, g=g)
        c_prime_spec = GabidulinSpec(field_spec, n, d - r, a_param=a_param, g=c_spec.g, row_offset=n - d + 1)
        return GabidulinCode(c_spec), GabidulinCode(c_prime_spec)

    @classmethod
    def coset_crc_search(cls, field_spec, n, d, r, a_param=1, g=None, jobs=1, all_cosets=False,
                         enum_cap=GabidulinCode.DEFAULT_ENUM_CAP):
        """
        Scan the translates C + c' and keep the one with the most rank r words.
        c' whose last message coordinate c_(n-r) is zero are skipped (sigma = 0).
        Ties go to the first c' in message order.
        :param field_spec: FieldSpec (q, m)
        :type field_spec: FieldSpec
        :param n: length
        :type n: int
        :param d: target minimum distance, r < d <= n
        :type d: int
        :param r: constant rank
        :type r: int
        :param a_param: automorphism step
        :type a_param: int
        :param g: generator vector (None : default)
        :type g: list,None
        :param jobs: gevent pool size. Greenlets share one thread and the rank computations are CPU bound, so jobs > 1 gives no speed-up. Results do not depend on it.
        :type jobs: int
        :param all_cosets: also keep the rank r words of every coset
        :type all_cosets: bool
        :param enum_cap: budget on |C| * |C'|
        :type enum_cap: int
        :return: CosetSearchResult
        :rtype: CosetSearchResult
        """

        q, m = field_spec.p, field_spec.m
        if not (1 <= r < d <= n <= m):
            raise UsageException("Need 1<=r<d<=n<=m, got m={0}, n={1}, d={2}, r={3}".format(m, n, d, r))

        ms = SolBase.mscurrent()
        c_code, c_prime_code = cls.coset_codes(field_spec, n, d, r, a_param=a_param, g=g)
        work = c_code.size * c_prime_code.size
        if work > enum_cap:
            raise CapacityException("coset search", work, enum_cap)

        c_arr = c_code.codeword_array(enum_cap)
        q_m = field_spec.order

        def _count(index):
            # c_(n-r) is the least significant message digit
            if index % q_m == 0:
                return index, 0, None
            c_prime = c_prime_code.encode_range(index, index + 1)[0]
            translate = (c_arr + c_prime[None, :, :]) % q
            ranks = GaussElim.batch_rank(translate, q)
            words = translate[ranks == r] if all_cosets else None
            return index, int(np.count_nonzero(ranks == r)), words

        result = CosetSearchResult()
        result.q, result.m, result.n, result.d, result.r = q, m, n, d, r
        result.sigma = [0] * c_prime_code.size
        if all_cosets:
            result.all_codes = dict()

        pool = Pool(max(1, jobs))
        for index, sigma, words in pool.imap(_count, range(c_prime_code.size)):
            result.sigma[index] = sigma
            if words is not None:
                result.all_codes[index] = ConstantRankCode(q, m, n, words, r, claimed_distance=d)

        best = max(result.sigma)
        result.best_index = result.sigma.index(best)
        best_word = c_prime_code.encode_range(result.best_index, result.best_index + 1)[0]
        result.best_c_prime = MatrixGF(q, best_word)
        translate = (c_arr + best_word[None, :, :]) % q
        ranks = GaussElim.batch_rank(translate, q)
        result.code = ConstantRankCode(q, m, n, translate[ranks == r], r, claimed_distance=d)

        result.tau = sum(result.sigma)
        result.guaranteed = Fraction(Counting.gaussian_binomial(n, r, q)) * Fraction(q) ** (m * (r - d + 1))
        result.elapsed_ms = SolBase.msdiff(ms)
        logger.info("Coset search done, %s", result)
        return result
