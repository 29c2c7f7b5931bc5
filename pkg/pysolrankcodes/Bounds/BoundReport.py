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

from pysolbase.SolBase import SolBase

from pysolrankcodes.Bounds.Bounds import Bounds
from pysolrankcodes.Cdc.CdcReports import CdcReports
from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Counting.JRankOracle import JRankOracle
from pysolrankcodes.Errors.RankCodeErrors import UsageException, CapacityException

logger = logging.getLogger(__name__)


class BoundEntry(object):
    """
    One named bound
    """

    KIND_LOWER = "lower"
    KIND_UPPER = "upper"
    KIND_EXACT = "exact"

    def __init__(self, name, kind, value, provenance, skipped=False):
        self.name = name
        self.kind = kind
        self.value = value
        self.provenance = provenance
        self.skipped = skipped

    def __str__(self):
        return "BoundEntry(name={0}, kind={1}, value={2}, provenance={3}, skipped={4})".format(
            self.name, self.kind, self.value, self.provenance, self.skipped)


class BoundReport(object):
    """
    All applicable bounds on A_R(q,m,n,d,r), the best of both sides and a consistency flag
    """

    CSV_HEADER = ["q", "m", "n", "r", "d", "bound_name", "kind", "value", "provenance"]

    def __init__(self, q, m, n, r, d):
        """
        Constructor
        """

        self.q = q
        self.m = m
        self.n = n
        self.r = r
        self.d = d

        # Entries, in insertion order
        self.entries = list()

        # Exact value, if known
        self.exact = None

        # Computed by finalize
        self.best_lower = None
        self.best_upper = None
        self.consistent = None

    @property
    def lowers(self):
        return [e for e in self.entries if e.kind == BoundEntry.KIND_LOWER and not e.skipped]

    @property
    def uppers(self):
        return [e for e in self.entries if e.kind == BoundEntry.KIND_UPPER and not e.skipped]

    @property
    def skipped(self):
        return [e for e in self.entries if e.skipped]

    def add_lower(self, name, value, provenance="closed-form"):
        self.entries.append(BoundEntry(name, BoundEntry.KIND_LOWER, value, provenance))

    def add_upper(self, name, value, provenance="closed-form"):
        self.entries.append(BoundEntry(name, BoundEntry.KIND_UPPER, value, provenance))

    def add_skipped(self, name, kind, reason):
        logger.warning("Bound skipped, name=%s, q=%s, m=%s, n=%s, r=%s, d=%s, reason=%s",
                       name, self.q, self.m, self.n, self.r, self.d, reason)
        self.entries.append(BoundEntry(name, kind, None, reason, skipped=True))

    def set_exact(self, name, value, provenance):
        """
        Record an exact value. It counts as a lower and an upper bound.
        """

        self.exact = value
        self.entries.append(BoundEntry(name, BoundEntry.KIND_EXACT, value, provenance))

    def finalize(self):
        """
        Compute best bounds and check that every lower bound is below every upper bound
        :return: self
        :rtype: BoundReport
        """

        lows = [e.value for e in self.lowers]
        ups = [e.value for e in self.uppers]
        if self.exact is not None:
            lows.append(self.exact)
            ups.append(self.exact)

        self.best_lower = max(lows) if len(lows) > 0 else 1
        self.best_upper = min(ups) if len(ups) > 0 else None
        self.consistent = self.best_upper is None or self.best_lower <= self.best_upper
        if not self.consistent:
            logger.error("Inconsistent bounds, q=%s, m=%s, n=%s, r=%s, d=%s, best_lower=%s, best_upper=%s, entries=%s",
                         self.q, self.m, self.n, self.r, self.d, self.best_lower, self.best_upper,
                         [str(e) for e in self.entries])
        return self

    def csv_rows(self):
        """
        Rows matching CSV_HEADER
        :return: list of list
        :rtype: list
        """

        out = list()
        for e in self.entries:
            value = "skipped" if e.skipped else str(e.value)
            out.append([self.q, self.m, self.n, self.r, self.d, e.name, e.kind, value, e.provenance])
        return out

    def to_text(self):
        """
        Human readable table
        :rtype: str
        """

        lines = ["A_R(q={0}, m={1}, n={2}, d={3}, r={4})".format(self.q, self.m, self.n, self.d, self.r)]
        width = max([len(e.name) for e in self.entries] + [10])
        for e in self.entries:
            value = "skipped" if e.skipped else e.value
            lines.append("  {0:<{1}}  {2:<6} {3}  [{4}]".format(e.name, width, e.kind, value, e.provenance))
        lines.append("  best_lower={0} best_upper={1} consistent={2}".format(
            self.best_lower, self.best_upper, self.consistent))
        return "\n".join(lines) + "\n"

    def __str__(self):
        return "BoundReport(q={0}, m={1}, n={2}, r={3}, d={4}, exact={5}, best_lower={6}, best_upper={7}, " \
               "consistent={8})".format(self.q, self.m, self.n, self.r, self.d, self.exact, self.best_lower,
                                        self.best_upper, self.consistent)

    # ====================================
    # AGGREGATION
    # ====================================

    @classmethod
    def bound_report(cls, q, m, n, r, d, oracle=None, exact_provider=None, ac_provider=None):
        """
        Aggregate every applicable bound on A_R(q,m,n,d,r).
        A_R is symmetric in (m, n), the report is built with n <= m.
        :param q: field size
        :type q: int
        :param m: int
        :type m: int
        :param n: int
        :type n: int
        :param r: int
        :type r: int
        :param d: rank distance
        :type d: int
        :param oracle: JRankOracle, None for the shared one
        :type oracle: JRankOracle,None
        :param exact_provider: callable (q, m, n, d, r) -> int or None
        :type exact_provider: callable,None
        :param ac_provider: callable (q, n, r, d) -> AcValue, default closed-form A_C bounds
        :type ac_provider: callable,None
        :return: BoundReport
        :rtype: BoundReport
        """

        if n > m:
            m, n = n, m
        if q < 2 or n < 1 or not (0 <= r <= n) or d < 1:
            raise UsageException("Invalid parameters, q={0}, m={1}, n={2}, r={3}, d={4}".format(q, m, n, r, d))
        oracle = oracle or JRankOracle.default()
        ac_provider = ac_provider or Bounds.ac_bounds

        ms = SolBase.mscurrent()
        rep = BoundReport(q, m, n, r, d)
        rep.add_lower("trivial", 1)
        rep.add_upper("trivial", Counting.n_rank(q, m, n, r))

        exact = Bounds.crc_exact_trivial(q, m, n, d, r)
        if exact is not None:
            rep.set_exact("trivial_exact", exact, "closed-form")
            return rep.finalize()

        cls._add_sphere_bounds(rep, oracle)
        cls._add_singleton_bounds(rep)
        cls._add_constructive_bounds(rep, oracle)
        cls._add_subspace_bounds(rep, ac_provider)

        if exact_provider is not None:
            try:
                value = exact_provider(q, m, n, d, r)
                if value is not None:
                    rep.set_exact("exact_search", value, "search")
            except CapacityException as e:
                rep.add_skipped("exact_search", BoundEntry.KIND_EXACT, str(e))

        rep.finalize()
        logger.info("Bound report, rep=%s, ms=%s", rep, SolBase.msdiff(ms))
        return rep

    @classmethod
    def _add_sphere_bounds(cls, rep, oracle):
        q, m, n, r, d = rep.q, rep.m, rep.n, rep.r, rep.d
        try:
            gilbert, hamming = Bounds.crc_gilbert_hamming(q, m, n, r, d, oracle)
            rep.add_lower("gilbert", gilbert, "jr-oracle")
            if hamming is not None:
                rep.add_upper("hamming", hamming, "jr-oracle")
        except CapacityException as e:
            rep.add_skipped("gilbert", BoundEntry.KIND_LOWER, str(e))
            rep.add_skipped("hamming", BoundEntry.KIND_UPPER, str(e))

    @classmethod
    def _add_singleton_bounds(cls, rep):
        q, m, n, r, d = rep.q, rep.m, rep.n, rep.r, rep.d
        if d <= r:
            rep.add_upper("johnson_chain", Bounds.crc_johnson_chain(q, m, n, d, r))
            rep.add_upper("singleton_combined", Bounds.crc_singleton_combined(q, m, n, d, r))
        if d <= r + 1:
            rep.add_upper("singleton_puncture", Bounds.crc_singleton_puncture(q, m, n, d, r))
        rep.add_upper("singleton_complement", Bounds.crc_singleton_complement(q, m, n, d, r))

    @classmethod
    def _add_constructive_bounds(cls, rep, oracle):
        q, m, n, r, d = rep.q, rep.m, rep.n, rep.r, rep.d

        value, clamped = Bounds.crc_gabidulin_lower(q, m, n, d, r)
        rep.add_lower("gabidulin", value, "closed-form,clamped" if clamped else "closed-form")

        rep.add_lower("volume", Bounds.crc_volume_lower(q, m, n, d, r))
        try:
            value, at = Bounds.crc_bassalygo_lower(q, m, n, d, r, oracle=oracle)
            rep.add_lower("bassalygo", value, "jr-oracle,skl={0}".format(at))
        except CapacityException as e:
            rep.add_skipped("bassalygo", BoundEntry.KIND_LOWER, str(e))
        if r + 1 < d <= 2 * r:
            try:
                value, at = Bounds.crc_bassalygo_lower(q, m, n, d, r, use_extended=True, oracle=oracle)
                rep.add_lower("bassalygo_extended", value, "jr-oracle,skl={0}".format(at))
            except CapacityException as e:
                rep.add_skipped("bassalygo_extended", BoundEntry.KIND_LOWER, str(e))

    @classmethod
    def _add_subspace_bounds(cls, rep, ac_provider):
        """
        Rank distance d = d_c + r with 1 <= d_c <= r : bounds through row and column space codes
        """

        q, m, n, r, d = rep.q, rep.m, rep.n, rep.r, rep.d
        d_c = d - r
        if not (1 <= d_c <= r):
            return

        rows = ac_provider(q, n, r, d_c)
        cols = ac_provider(q, m, r, d_c)
        rep.add_upper("subspace_rows", rows.upper, "ac:{0}".format(rows.provenance))
        rep.add_upper("subspace_cols", cols.upper, "ac:{0}".format(cols.provenance))

        best = CdcReports.prop5_best(q, m, n, r, d_c, ac_provider)
        if best.nontrivial:
            rep.add_lower("subspace_pairing", best.lower, "p={0},{1}".format(best.p, best.provenance))

        if 2 * r <= n and (d_c == r or m >= Counting.m_zero(n, r, d_c)):
            rep.add_lower("optimality_transfer", rows.lower, "ac:{0}".format(rows.provenance))
