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

from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Counting.JRankOracle import JRankOracle
from pysolrankcodes.Errors.RankCodeErrors import UsageException, CapacityException

logger = logging.getLogger(__name__)


class AcValue(object):
    """
    Known bounds on A_C(q,n,r,d)
    """

    def __init__(self, lower, upper, provenance):
        self.lower = lower
        self.upper = upper
        self.provenance = provenance

    @property
    def exact(self):
        return self.lower == self.upper

    def __str__(self):
        return "AcValue(lower={0}, upper={1}, provenance={2})".format(self.lower, self.upper, self.provenance)


class RatioCheck(object):
    """
    Tightness ratio against its scalar bound
    """

    def __init__(self, name, value, bound, strict):
        self.name = name
        self.value = value
        self.bound = bound
        self.strict = strict
        self.holds = value < bound if strict else value <= bound

    def __str__(self):
        return "RatioCheck(name={0}, value={1}, bound={2}, strict={3}, holds={4})".format(
            self.name, self.value, self.bound, self.strict, self.holds)


class Bounds(object):
    """
    Bounds on A_R(q,m,n,d,r) and A_C(q,n,r,d), exact integer arithmetic.
    Lower bounds are rounded up, upper bounds down.
    """

    # ====================================
    # CONSTANT DIMENSION CODES
    # ====================================

    @classmethod
    def cdc_singleton_bounds(cls, q, n, r, d):
        """
        q^((n-r)(r-d+1)) <= A_C(q,n,r,d) <= [n r-d+1] / [r r-d+1], for r <= n/2 and 2 <= d <= r.
        d = 1 gives the whole Grassmannian.
        :return: tuple (lower, upper)
        :rtype: tuple
        """

        if d == 1 and 0 <= r <= n:
            g = Counting.gaussian_binomial(n, r, q)
            return g, g
        if not (r <= n // 2 and 2 <= d <= r):
            raise UsageException("Need r<=n/2 and 2<=d<=r, got n={0}, r={1}, d={2}".format(n, r, d))
        lower = q ** ((n - r) * (r - d + 1))
        upper = Counting.gaussian_binomial(n, r - d + 1, q) // Counting.gaussian_binomial(r, r - d + 1, q)
        return lower, upper

    @classmethod
    def ac_bounds(cls, q, n, r, d):
        """
        Best closed-form knowledge on A_C(q,n,r,d)
        :return: AcValue
        :rtype: AcValue
        """

        if r < 0 or r > n:
            raise UsageException("Need 0<=r<=n, got n={0}, r={1}".format(n, r))
        if r == 0 or d > r:
            return AcValue(1, 1, "trivial")
        if d <= 1:
            g = Counting.gaussian_binomial(n, r, q)
            return AcValue(g, g, "grassmannian")
        if r <= n // 2:
            lower, upper = cls.cdc_singleton_bounds(q, n, r, d)
            return AcValue(lower, upper, "cdc_singleton")
        return AcValue(1, Counting.gaussian_binomial(n, r, q), "trivial")

    # ====================================
    # TRIVIAL
    # ====================================

    @classmethod
    def crc_exact_trivial(cls, q, m, n, d, r):
        """
        Exact A_R when a trivial case applies, else None
        """

        if r < 0 or r > min(m, n):
            raise UsageException("Need 0<=r<=min(m,n), got m={0}, n={1}, r={2}".format(m, n, r))
        if d < 1:
            raise UsageException("Need d>=1, got d={0}".format(d))
        if r == 0 or d > 2 * r or d > min(m, n):
            return 1
        if d == 1:
            return Counting.n_rank(q, m, n, r)
        return None

    # ====================================
    # GILBERT / HAMMING
    # ====================================

    @classmethod
    def crc_gilbert_hamming(cls, q, m, n, r, d, oracle=None):
        """
        Sphere covering lower bound and sphere packing upper bound, from the J_R oracle
        :return: tuple (gilbert_lower, hamming_upper)
        :rtype: tuple
        """

        oracle = oracle or JRankOracle.default()
        if not (1 <= r <= min(m, n) and d >= 1):
            raise UsageException("Need 1<=r<=min(m,n), d>=1, got m={0}, n={1}, r={2}, d={3}".format(m, n, r, d))
        k = min(m, n)
        n_r = Counting.n_rank(q, m, n, r)

        cover = sum(oracle.j_rank(q, m, n, i, r, r) for i in range(0, min(d - 1, 2 * k) + 1))
        lower = Counting.ceil_div(n_r, cover)

        t = (d - 1) // 2
        upper = None
        for s in range(1, k + 1):
            pack = sum(oracle.j_rank(q, m, n, i, s, r) for i in range(0, t + 1))
            if pack == 0:
                continue
            cur = Counting.n_rank(q, m, n, s) // pack
            if upper is None or cur < upper:
                upper = cur
        return lower, upper

    # ====================================
    # JOHNSON / SINGLETON
    # ====================================

    @classmethod
    def crc_johnson_step(cls, q, m, n, d, r, a_next):
        """
        floor((q^n - 1) / (q^(n-r) - 1) * a_next), a_next bounding A_R(q,m,n-1,d,r)
        """

        if not (r < n and d < n):
            raise UsageException("Need r<n and d<n, got n={0}, r={1}, d={2}".format(n, r, d))
        return ((q ** n - 1) * a_next) // (q ** (n - r) - 1)

    @classmethod
    def crc_johnson_chain(cls, q, m, n, d, r):
        """
        Johnson steps from n = r, seeded with the punctured Singleton value alpha(m, r-d+1)
        """

        cls._check_d_le_r(m, n, d, r)
        cur = Counting.alpha(m, r - d + 1, q)
        for nn in range(r + 1, n + 1):
            cur = cls.crc_johnson_step(q, m, nn, d, r, cur)
        return cur

    @classmethod
    def crc_singleton_combined(cls, q, m, n, d, r):
        """
        [n r] alpha(m, r-d+1)
        """

        cls._check_d_le_r(m, n, d, r)
        return Counting.gaussian_binomial(n, r, q) * Counting.alpha(m, r - d + 1, q)

    @classmethod
    def crc_singleton_puncture(cls, q, m, n, d, r):
        """
        Puncture d-1 coordinates : sum of N_R(q,m,n-d+1,j) for j in [r-d+1, min(n-d+1, r)]. Needs d <= r+1.
        """

        if not (1 <= d <= r + 1 and d <= n and r <= min(m, n)):
            raise UsageException("Need 1<=d<=r+1, d<=n, got n={0}, r={1}, d={2}".format(n, r, d))
        i = d - 1
        return sum(Counting.n_rank(q, m, n - i, j) for j in range(r - i, min(n - i, r) + 1))

    @classmethod
    def crc_singleton_complement(cls, q, m, n, d, r):
        """
        q^(m(n-d+1)) minus one word of rank in P_r = {i : |i-r| >= d}, when P_r is not empty. Needs n <= m.
        """

        if not (1 <= d <= n <= m):
            raise UsageException("Need 1<=d<=n<=m, got m={0}, n={1}, d={2}".format(m, n, d))
        p_r = [i for i in range(0, n + 1) if abs(i - r) >= d]
        return q ** (m * (n - d + 1)) - (1 if len(p_r) > 0 else 0)

    # ====================================
    # BASSALYGO-ELIAS
    # ====================================

    @classmethod
    def crc_bassalygo_lower(cls, q, m, n, d, r, use_extended=False, oracle=None):
        """
        max over s, k in [max(r,d), n], l in [k, m] of
        sum_i A_i J_R(l,k,s,r,i) / (N_R(l,k,s) [- sum_i A_i sum_{t<=d-r-1} J_R(l,k,s,t,i)])
        with A_i the rank distribution of a (k, k-d+1, d) MRD code over GF(q^l).
        (l, k) pairs beyond the oracle budget are skipped.
        :return: tuple (ceiling of the best quotient, (s, k, l) of the best)
        :rtype: tuple
        """

        oracle = oracle or JRankOracle.default()
        if not (1 <= d <= 2 * r and r <= n <= m and d <= n):
            raise UsageException("Need 1<=d<=2r, d<=n, r<=n<=m, got m={0}, n={1}, d={2}, r={3}".format(m, n, d, r))
        if use_extended and not (r + 1 < d <= 2 * r):
            raise UsageException("Extended form needs r+1<d<=2r, got d={0}, r={1}".format(d, r))

        best = None
        best_at = None
        skipped = 0
        for k in range(max(r, d), n + 1):
            for l in range(k, m + 1):
                try:
                    dist = Counting.mrd_distribution(q, l, k, d)
                    for s in range(0, k + 1):
                        num = sum(a * oracle.j_rank(q, l, k, s, r, i) for i, a in enumerate(dist) if a)
                        if num == 0:
                            continue
                        den = Counting.n_rank(q, l, k, s)
                        if use_extended:
                            den -= sum(a * oracle.j_rank(q, l, k, s, t, i)
                                       for i, a in enumerate(dist) if a
                                       for t in range(0, d - r))
                        if den <= 0:
                            continue
                        cur = Fraction(num, den)
                        if best is None or cur > best:
                            best = cur
                            best_at = (s, k, l)
                except CapacityException as e:
                    skipped += 1
                    logger.debug("Bassalygo skipped pair, k=%s, l=%s, ex=%s", k, l, e)

        if best is None:
            if skipped > 0:
                raise CapacityException("bassalygo (l, k) pairs", skipped, 0)
            return 1, None
        return max(1, Counting.ceil_div(best.numerator, best.denominator)), best_at

    @classmethod
    def crc_volume_lower(cls, q, m, n, d, r):
        """
        ceil(N_R(q,m,n,r) q^(m(1-d)))
        """

        if d < 1:
            raise UsageException("Need d>=1, got d={0}".format(d))
        return max(1, Counting.ceil_div(Counting.n_rank(q, m, n, r), q ** (m * (d - 1))))

    # ====================================
    # CONSTRUCTIVE LOWER BOUNDS
    # ====================================

    @classmethod
    def crc_gabidulin_lower(cls, q, m, n, d, r):
        """
        d <= r : M(q,m,n,d,r). r < d <= 2r : ceil([n r] q^(n(r-d+1))), clamped to 1. d > 2r : 1.
        :return: tuple (value, clamped flag)
        :rtype: tuple
        """

        if not (1 <= r <= n <= m):
            raise UsageException("Need 1<=r<=n<=m, got m={0}, n={1}, r={2}".format(m, n, r))
        if d < 1:
            raise UsageException("Need d>=1, got d={0}".format(d))
        if d > 2 * r or d > n:
            return 1, False
        if d <= r:
            return Counting.mrd_rank_distribution(q, m, n, d, r), False

        value = Fraction(Counting.gaussian_binomial(n, r, q)) * Fraction(q) ** (n * (r - d + 1))
        ceil = Counting.ceil_div(value.numerator, value.denominator)
        if ceil < 1:
            logger.warning("Clamped constructive lower bound, q=%s, n=%s, r=%s, d=%s, value=%s", q, n, r, d, value)
            return 1, True
        return ceil, False

    # ====================================
    # TIGHTNESS RATIOS
    # ====================================

    @classmethod
    def tightness_ratio_C(cls, q, m, n, d, r, a_r):
        """
        C = A_R / (N_R(r) q^(m(1-d))), against q^2/(q^2-1) when r+d-1 <= m, else (q-1)/q K_q^-1 (strict)
        :param a_r: exact (or best upper) A_R
        :type a_r: int
        :return: RatioCheck
        :rtype: RatioCheck
        """

        if not (2 <= d <= r <= n <= m):
            raise UsageException("Need 2<=d<=r<=n<=m, got m={0}, n={1}, d={2}, r={3}".format(m, n, d, r))
        value = Fraction(a_r * q ** (m * (d - 1)), Counting.n_rank(q, m, n, r))
        if r + d - 1 <= m:
            return RatioCheck("C", value, Fraction(q * q, q * q - 1), False)
        return RatioCheck("C", value, Fraction(q - 1, q) / Fraction(Counting.k_q(q)), True)

    @classmethod
    def ratio_B_bounds(cls, q, m, n, d, r):
        """
        Scalar bound on B = A_R / M(q,m,n,d,r)
        :return: tuple (bound Fraction, strict flag, case name)
        :rtype: tuple
        """

        if not (1 <= d < r <= n <= m and m >= 3):
            raise UsageException("Need 1<=d<r<=n<=m, m>=3, got m={0}, n={1}, d={2}, r={3}".format(m, n, d, r))
        if r < m:
            return Fraction(q, q - 1), True, "r<m"
        # r = n = m
        if d == m - 1:
            if q == 2:
                return Fraction(2 ** (m - 1) - 1), False, "q=2,d=m-1"
            return Fraction(q - 1, q - 2), True, "q>2,d=m-1"
        if d == m - 2:
            return Fraction((q * q - 1) * (q - 1), (q * q - 1) * (q - 2) + 1), True, "d=m-2"
        num = (q ** 3 - 1) * (q * q - 1) * (q - 1)
        den = (q ** 3 - 1) * (q * q - 1) * (q - 2) + q ** 3 - 2
        return Fraction(num, den), True, "d<m-2"

    @classmethod
    def tightness_ratio_B(cls, q, m, n, d, r, a_r):
        """
        B = A_R / M against its case bound
        :return: RatioCheck
        :rtype: RatioCheck
        """

        bound, strict, case = cls.ratio_B_bounds(q, m, n, d, r)
        value = Fraction(a_r, Counting.mrd_rank_distribution(q, m, n, d, r))
        return RatioCheck("B[{0}]".format(case), value, bound, strict)

    @classmethod
    def _check_d_le_r(cls, m, n, d, r):
        if not (1 <= d <= r <= n <= m):
            raise UsageException("Need 1<=d<=r<=n<=m, got m={0}, n={1}, d={2}, r={3}".format(m, n, d, r))
