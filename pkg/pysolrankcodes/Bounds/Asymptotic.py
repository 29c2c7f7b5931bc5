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

from pysolrankcodes.Errors.RankCodeErrors import UsageException

logger = logging.getLogger(__name__)


class AsymptoticPoint(object):
    """
    Normalized parameters nu = n/m, rho = r/m, delta = d/m
    """

    REGIME_EXACT = "delta<=rho"
    REGIME_SMALL_RHO = "2rho<=nu"
    REGIME_MID_RHO = "nu<=2rho<=1"
    REGIME_LARGE_RHO = "2rho>=1"
    REGIME_ZERO = "delta>2rho"

    def __init__(self, nu, rho, delta):
        """
        Constructor
        :param nu: n/m
        :type nu: Fraction,int,str
        :param rho: r/m
        :type rho: Fraction,int,str
        :param delta: d/m
        :type delta: Fraction,int,str
        """

        self.nu = Fraction(nu)
        self.rho = Fraction(rho)
        self.delta = Fraction(delta)
        if not (0 <= self.rho <= self.nu <= 1 and 0 <= self.delta <= self.nu):
            raise UsageException("Need 0<=rho,delta<=nu<=1, got nu={0}, rho={1}, delta={2}".format(
                self.nu, self.rho, self.delta))

    @property
    def regime(self):
        if self.delta > 2 * self.rho:
            return self.REGIME_ZERO
        if self.delta <= self.rho:
            return self.REGIME_EXACT
        if 2 * self.rho <= self.nu:
            return self.REGIME_SMALL_RHO
        if 2 * self.rho <= 1:
            return self.REGIME_MID_RHO
        return self.REGIME_LARGE_RHO

    def __str__(self):
        return "AsymptoticPoint(nu={0}, rho={1}, delta={2}, regime={3})".format(
            self.nu, self.rho, self.delta, self.regime)


class Asymptotic(object):
    """
    Bounds on the asymptotic rate a_R(nu, delta, rho) of constant rank codes, as exact rationals
    """

    # Named (nu, rho) sweeps
    PRESETS = {
        "fig1": (Fraction(3, 4), Fraction(1, 5)),
        "fig2": (Fraction(3, 4), Fraction(2, 5)),
        "fig3": (Fraction(3, 4), Fraction(3, 5)),
    }

    @classmethod
    def asymptotic_rate(cls, point):
        """
        Lower and upper bounds on the rate
        :param point: AsymptoticPoint
        :type point: AsymptoticPoint
        :return: tuple (lower, upper, exact flag)
        :rtype: tuple
        """

        nu, rho, delta = point.nu, point.rho, point.delta
        regime = point.regime

        if regime == AsymptoticPoint.REGIME_ZERO:
            return Fraction(0), Fraction(0), True
        if regime == AsymptoticPoint.REGIME_EXACT:
            v = rho * (1 + nu - rho) - delta
            return v, v, True

        gabidulin = rho * (2 * nu - rho) - nu * delta
        if regime == AsymptoticPoint.REGIME_SMALL_RHO:
            lower = max((1 - rho) * (nu - rho) * (2 * rho - delta) / (1 + nu - 2 * rho), gabidulin)
            upper = (nu - rho) * (2 * rho - delta)
        elif regime == AsymptoticPoint.REGIME_MID_RHO:
            lower = max(rho * (1 - rho) * (nu - delta), gabidulin)
            upper = rho * (nu - delta)
        else:
            lower = max(rho * (1 + nu - 2 * rho - delta) / 2, gabidulin, Fraction(0))
            upper = rho * (nu - delta)
        return lower, upper, lower == upper

    @classmethod
    def sweep(cls, nu, rho, steps):
        """
        Rate bounds for delta = i/steps * min(nu, 2rho), i = 0..steps
        :param nu: Fraction
        :type nu: Fraction
        :param rho: Fraction
        :type rho: Fraction
        :param steps: int >= 1
        :type steps: int
        :return: list of (point, lower, upper, exact)
        :rtype: list
        """

        if steps < 1:
            raise UsageException("Need steps>=1, got steps={0}".format(steps))
        nu, rho = Fraction(nu), Fraction(rho)
        top = min(nu, 2 * rho)
        out = []
        for i in range(steps + 1):
            point = AsymptoticPoint(nu, rho, top * Fraction(i, steps))
            lower, upper, exact = cls.asymptotic_rate(point)
            out.append((point, lower, upper, exact))
        return out

    @classmethod
    def p_star(cls, m, n, r, d):
        """
        Integral p for the subspace-pairing lower bound at d > r, 2r <= n, and the resulting exponent
        min{(n-r)(2r-d-p+1), (m-r)(p+1)} of q.
        :return: tuple (p, exponent)
        :rtype: tuple
        """

        if not (1 <= r < d <= 2 * r and 2 * r <= n <= m):
            raise UsageException("Need r<d<=2r, 2r<=n<=m, got m={0}, n={1}, r={2}, d={3}".format(m, n, r, d))
        num = (n - r) * (2 * r - d + 1) - m + r
        lo, hi = max(0, 2 * r - m), min(2 * r - d, n - d)
        best = None
        for p in sorted({num // (m + n - 2 * r), num // (m + n - 2 * r) + 1}):
            p = max(lo, min(p, hi))
            exponent = min((n - r) * (2 * r - d - p + 1), (m - r) * (p + 1))
            if best is None or exponent > best[1]:
                best = (p, exponent)
        return best
