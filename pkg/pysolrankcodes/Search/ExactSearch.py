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
import os

import galois
from gevent.pool import Pool
from gevent.threading import Lock
from pysolbase.FileUtility import FileUtility
from pysolbase.SolBase import SolBase

from pysolrankcodes.Bounds.Bounds import Bounds, AcValue
from pysolrankcodes.Cdc.CdcConversion import CdcConversion
from pysolrankcodes.Cdc.CdcReports import CdcReports
from pysolrankcodes.Cdc.ConstantDimensionCode import ConstantDimensionCode
from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Errors.RankCodeErrors import UsageException, CapacityException, VerificationException
from pysolrankcodes.LinAlg.MatrixGF import MatrixGF
from pysolrankcodes.LinAlg.Subspace import Subspace
from pysolrankcodes.RankCodes.CodeFile import CodeFile
from pysolrankcodes.RankCodes.GabidulinCode import GabidulinCode
from pysolrankcodes.RankCodes.GabidulinSpec import GabidulinSpec
from pysolrankcodes.RankCodes.RankCode import ConstantRankCode
from pysolrankcodes.RankCodes.RankCodes import RankCodes
from pysolrankcodes.Search.CliqueSolver import CliqueSolver
from pysolrankcodes.Search.CompatGraph import CompatGraph

logger = logging.getLogger(__name__)


class ExactResult(object):
    """
    Exact A_R or A_C value with a witness
    """

    def __init__(self):
        """
        Const
        """

        # R or C
        self.metric = None

        # Parameters (m is None for C)
        self.q = None
        self.m = None
        self.n = None
        self.r = None
        self.d = None

        # Exact value and a code reaching it (ConstantRankCode or ConstantDimensionCode)
        self.value = None
        self.witness = None

        # What proved optimality : trivial, a bound name, or clique
        self.closed_by = None

        # Search statistics
        self.vertices = 0
        self.nodes = 0
        self.elapsed_ms = 0

        # Witness file, when persisted
        self.witness_file = None

    def __str__(self):
        return "ExactResult(metric={0}, q={1}, m={2}, n={3}, r={4}, d={5}, value={6}, closed_by={7}, " \
               "vertices={8}, nodes={9}, ms={10})".format(
                self.metric, self.q, self.m, self.n, self.r, self.d, self.value, self.closed_by,
                self.vertices, self.nodes, self.elapsed_ms)


class EqualityCheck(object):
    """
    One grid tuple of verify_equality_theorems
    """

    def __init__(self, q, m, n, r, d):
        """
        Const
        """

        # Parameters, d is the subspace distance (rank distance d+r)
        self.q = q
        self.m = m
        self.n = n
        self.r = r
        self.d = d

        # A_R(q,m,n,d+r,r) and A_C(q,n,r,d)
        self.a_r = None
        self.a_c = None

        # Checked relations, list of (name, holds)
        self.relations = list()

        # Capacity message when skipped
        self.skipped = None

    @property
    def holds(self):
        return all(h for _, h in self.relations)

    def __str__(self):
        return "EqualityCheck(q={0}, m={1}, n={2}, r={3}, d={4}, a_r={5}, a_c={6}, relations={7}, skipped={8})".format(
            self.q, self.m, self.n, self.r, self.d, self.a_r, self.a_c, self.relations, self.skipped)


class ExactSearch(object):
    """
    Exact A_R(q,m,n,d,r) and A_C(q,n,r,d) on tiny parameters.
    Constructive codes seed the incumbent, proven upper bounds close the search early,
    the rest is a maximum clique search on the distance compatibility graph.
    Results are memoized per instance and optionally persisted (witness files and a TSV summary).
    """

    TSV_NAME = "exact-values.tsv"
    TSV_HEADER = "metric\tq\tm\tn\tr\td\tvalue\twitness_file"

    def __init__(self, vertex_cap=CompatGraph.DEFAULT_VERTEX_CAP, node_cap=CliqueSolver.DEFAULT_NODE_CAP,
                 enum_cap=1 << 24, witness_dir=None, tsv_path=None, symmetry=False, normalize=True, jobs=1):
        """
        Constructor
        :param vertex_cap: max graph vertices
        :type vertex_cap: int
        :param node_cap: max branch and bound nodes
        :type node_cap: int
        :param enum_cap: max enumerated matrices / codewords
        :type enum_cap: int
        :param witness_dir: directory for witness files, None to skip
        :type witness_dir: str,None
        :param tsv_path: summary TSV path, None to skip
        :type tsv_path: str,None
        :param symmetry: force the first vertex into the clique (graphs are vertex transitive)
        :type symmetry: bool
        :param normalize: compute A_R with n <= m and transpose the witness back
        :type normalize: bool
        :param jobs: gevent pool size for grid sweeps and coset search. Greenlets share one thread, the numpy work is CPU bound, so jobs > 1 interleaves work without speeding it up. Results do not depend on it.
        :type jobs: int
        """

        self.vertex_cap = vertex_cap
        self.node_cap = node_cap
        self.enum_cap = enum_cap
        self.witness_dir = witness_dir
        self.tsv_path = tsv_path
        self.symmetry = symmetry
        self.normalize = normalize
        self.jobs = max(1, jobs)

        self._locker = Lock()
        self._results = dict()

    # ====================================
    # A_C
    # ====================================

    def exact_A_C(self, q, n, r, d):
        """
        Exact A_C(q,n,r,d) and a witness
        :return: ExactResult
        :rtype: ExactResult
        """

        key = ("C", q, None, n, r, d)
        if key in self._results:
            return self._results[key]
        if not galois.is_prime(q):
            raise UsageException("Need a prime q, got q={0}".format(q))
        if not (0 <= r <= n) or d < 0:
            raise UsageException("Need 0<=r<=n and d>=0, got n={0}, r={1}, d={2}".format(n, r, d))

        ms = SolBase.mscurrent()
        res = ExactResult()
        res.metric, res.q, res.n, res.r, res.d = "C", q, n, r, d

        if r == 0 or r == n or d > r:
            spaces = [Subspace.from_generators(MatrixGF.canonical(q, r, n, r))]
            res.closed_by = "trivial"
        elif d <= 1:
            count = Counting.gaussian_binomial(n, r, q)
            if count > self.enum_cap:
                raise CapacityException("grassmannian enumeration", count, self.enum_cap)
            spaces = list(Subspace.enumerate_grassmannian(q, n, r))
            res.closed_by = "trivial"
        else:
            upper = Bounds.ac_bounds(q, n, r, d).upper
            graph = CompatGraph.for_subspaces(q, n, r, d, self.vertex_cap)
            order = graph.degeneracy_order()
            solver = CliqueSolver(graph.adjacency, order, self.node_cap)
            clique = solver.solve(upper_bound=upper, fixed=order[0] if self.symmetry else None)
            spaces = [graph.vertices[i] for i in clique]
            res.vertices, res.nodes = graph.vertex_count, solver.nodes
            res.closed_by = "clique,ac_upper" if len(clique) >= upper else "clique"

        res.witness = ConstantDimensionCode(q, n, r, spaces, claimed_distance=d)
        res.value = res.witness.size
        self._check_cdc(res)
        res.elapsed_ms = SolBase.msdiff(ms)
        self._record(key, res)
        return res

    def ac_value(self, q, n, r, d):
        """
        A_C provider : exact when the search fits the budgets, closed-form bounds otherwise
        :return: AcValue
        :rtype: AcValue
        """

        try:
            v = self.exact_A_C(q, n, r, d).value
            return AcValue(v, v, "search")
        except CapacityException as e:
            logger.debug("A_C fallback to closed-form, q=%s, n=%s, r=%s, d=%s, ex=%s", q, n, r, d, e)
            return Bounds.ac_bounds(q, n, r, d)

    # ====================================
    # A_R
    # ====================================

    def exact_A_R(self, q, m, n, d, r):
        """
        Exact A_R(q,m,n,d,r) and a witness
        :return: ExactResult
        :rtype: ExactResult
        """

        key = ("R", q, m, n, r, d)
        if key in self._results:
            return self._results[key]
        if not galois.is_prime(q):
            raise UsageException("Need a prime q, got q={0}".format(q))
        if not (0 <= r <= min(m, n)) or d < 1:
            raise UsageException("Need 0<=r<=min(m,n) and d>=1, got m={0}, n={1}, r={2}, d={3}".format(m, n, r, d))

        if self.normalize and n > m:
            res = self._transposed(self.exact_A_R(q, n, m, d, r))
            self._record(key, res)
            return res

        ms = SolBase.mscurrent()
        res = ExactResult()
        res.metric, res.q, res.m, res.n, res.r, res.d = "R", q, m, n, r, d

        trivial = Bounds.crc_exact_trivial(q, m, n, d, r)
        if trivial == 1:
            res.witness = ConstantRankCode(q, m, n, [MatrixGF.canonical(q, m, n, r).entries], r, claimed_distance=d)
            res.closed_by = "trivial"
        elif trivial is not None:
            res.witness = ConstantRankCode(q, m, n, CompatGraph.rank_universe(q, m, n, r, self.enum_cap), r,
                                           claimed_distance=d)
            res.closed_by = "trivial"
        else:
            self._search_rank(res)

        res.value = res.witness.size
        self._check_crc(res)
        res.elapsed_ms = SolBase.msdiff(ms)
        logger.info("Exact search done, res=%s", res)
        self._record(key, res)
        return res

    def _search_rank(self, res):
        q, m, n, r, d = res.q, res.m, res.n, res.r, res.d
        upper, upper_name = self._rank_upper(q, m, n, d, r)

        seed = None
        for name, code in self._rank_seeds(q, m, n, d, r, upper):
            if code.min_rank_distance() < d:
                raise VerificationException("Seed below distance, seed={0}, cur={1}, need={2}".format(
                    name, code.min_rank_distance(), d))
            logger.debug("Seed, name=%s, size=%s, upper=%s", name, code.size, upper)
            if seed is None or code.size > seed[1].size:
                seed = (name, code)
            if seed[1].size >= upper:
                break

        if seed is not None and seed[1].size > upper:
            raise VerificationException("Seed above proven bound, seed={0}, cur={1}, max={2}, bound={3}".format(
                seed[0], seed[1].size, upper, upper_name))
        if seed is not None and seed[1].size == upper:
            res.witness = seed[1]
            res.closed_by = "{0},{1}".format(seed[0], upper_name)
            return

        graph = CompatGraph.for_rank(q, m, n, r, d, self.vertex_cap, self.enum_cap)
        order = graph.degeneracy_order()
        solver = CliqueSolver(graph.adjacency, order, self.node_cap)
        incumbent = graph.index_of(seed[1].array) if seed is not None else None
        clique = solver.solve(incumbent=incumbent, upper_bound=upper, fixed=order[0] if self.symmetry else None)
        res.vertices, res.nodes = graph.vertex_count, solver.nodes
        res.witness = ConstantRankCode(q, m, n, graph.vertices[clique], r, claimed_distance=d)
        res.closed_by = "clique,{0}".format(upper_name) if len(clique) >= upper else "clique"

    def _rank_upper(self, q, m, n, d, r):
        """
        Smallest proven upper bound, computed with rows >= cols
        :return: tuple (value, name)
        :rtype: tuple
        """

        hi, lo = max(m, n), min(m, n)
        cands = [(Counting.n_rank(q, m, n, r), "trivial")]
        if d <= r:
            cands.append((Bounds.crc_singleton_combined(q, hi, lo, d, r), "singleton_combined"))
            cands.append((Bounds.crc_johnson_chain(q, hi, lo, d, r), "johnson_chain"))
        if d <= r + 1:
            cands.append((Bounds.crc_singleton_puncture(q, hi, lo, d, r), "singleton_puncture"))
        d_c = d - r
        if 1 <= d_c <= r:
            rows = self.ac_value(q, lo, r, d_c)
            cols = self.ac_value(q, hi, r, d_c)
            cands.append((rows.upper, "subspace_rows:{0}".format(rows.provenance)))
            cands.append((cols.upper, "subspace_cols:{0}".format(cols.provenance)))
        return min(cands, key=lambda c: c[0])

    def _rank_seeds(self, q, m, n, d, r, upper):
        """
        Yield (name, ConstantRankCode) constructive codes of distance >= d, in m x n orientation
        """

        hi, lo = max(m, n), min(m, n)
        flip = m < n

        def _orient(code):
            return code.transpose() if flip else code

        fs = None
        if d <= r or d <= lo:
            fs = RankCodes.field(q, hi)

        if d <= r:
            code = GabidulinCode(GabidulinSpec.for_distance(fs, lo, d))
            try:
                yield "rank_shell", _orient(RankCodes.rank_shell(code, r, self.enum_cap))
            except CapacityException as e:
                logger.debug("Seed skipped, name=rank_shell, ex=%s", e)
        elif d <= lo:
            try:
                found = RankCodes.coset_crc_search(fs, lo, d, r, jobs=self.jobs, enum_cap=self.enum_cap)
                yield "coset", _orient(found.code)
            except CapacityException as e:
                logger.debug("Seed skipped, name=coset, ex=%s", e)

        d_c = d - r
        if 1 <= d_c <= r:
            p_min, p_max = CdcReports.p_range(hi, lo, r, d_c)
            for p in range(p_min, p_max + 1):
                try:
                    n_code = self.exact_A_C(q, lo, r, d_c + p).witness
                    m_code = self.exact_A_C(q, hi, r, r - p).witness
                except CapacityException as e:
                    logger.debug("Seed skipped, name=pairing, p=%s, ex=%s", p, e)
                    continue
                size = min(n_code.size, m_code.size)
                crc = CdcConversion.cdc_pair_to_crc(m_code.with_members(m_code.subspaces[:size]),
                                                    n_code.with_members(n_code.subspaces[:size]))
                yield "pairing:p={0}".format(p), _orient(crc)

    def _transposed(self, res):
        out = ExactResult()
        out.metric, out.q, out.m, out.n, out.r, out.d = res.metric, res.q, res.n, res.m, res.r, res.d
        out.value = res.value
        out.witness = res.witness.transpose()
        out.closed_by = res.closed_by
        out.vertices, out.nodes, out.elapsed_ms = res.vertices, res.nodes, res.elapsed_ms
        return out

    # ====================================
    # CHECKS
    # ====================================

    def _check_crc(self, res):
        w = res.witness
        if w.r != res.r or w.rows != res.m or w.cols != res.n:
            raise VerificationException("Witness shape mismatch, cur={0}, need=({1}x{2}, r={3})".format(
                w, res.m, res.n, res.r))
        if res.d > 1 and w.size > 1 and w.min_rank_distance() < res.d:
            raise VerificationException("Witness distance, cur={0}, need={1}".format(w.min_rank_distance(), res.d))

    def _check_cdc(self, res):
        w = res.witness
        if res.d > 1 and w.size > 1 and w.min_injection_distance() < res.d:
            raise VerificationException("Witness distance, cur={0}, need={1}".format(
                w.min_injection_distance(), res.d))

    def verify_equality_theorems(self, grid):
        """
        For every (q, m, n, r, d) with d the subspace distance, check
        A_R(q,m,n,d+r,r) <= A_C(q,n,r,d), equality when 2r <= n <= m and (d = r or m >= m0),
        and A_R(q,m,n,r+1,r) = [n r] for m >= n.
        Tuples beyond the budgets are reported as skipped.
        :param grid: iterable of (q, m, n, r, d)
        :type grid: list
        :return: list of EqualityCheck, grid order
        :rtype: list
        """

        def _check(item):
            q, m, n, r, d = item
            chk = EqualityCheck(q, m, n, r, d)
            try:
                chk.a_r = self.exact_A_R(q, m, n, d + r, r).value
                chk.a_c = self.exact_A_C(q, n, r, d).value
            except CapacityException as e:
                chk.skipped = str(e)
                return chk
            chk.relations.append(("a_r<=a_c", chk.a_r <= chk.a_c))
            if 2 * r <= n <= m and (d == r or m >= Counting.m_zero(n, r, d)):
                chk.relations.append(("a_r==a_c", chk.a_r == chk.a_c))
            if d == 1 and n <= m:
                chk.relations.append(("a_r==[n r]", chk.a_r == Counting.gaussian_binomial(n, r, q)))
            return chk

        ms = SolBase.mscurrent()
        out = list(Pool(self.jobs).imap(_check, list(grid)))
        bad = [c for c in out if not c.holds]
        logger.info("Equality checks done, count=%s, skipped=%s, failed=%s, ms=%s",
                    len(out), len([c for c in out if c.skipped]), len(bad), SolBase.msdiff(ms))
        if len(bad) > 0:
            raise VerificationException("Equality violated, first={0}, failed={1}".format(bad[0], len(bad)))
        return out

    # ====================================
    # REGISTRY
    # ====================================

    def witness_name(self, res):
        if res.metric == "R":
            return "R-q{0}-m{1}-n{2}-r{3}-d{4}.txt".format(res.q, res.m, res.n, res.r, res.d)
        return "C-q{0}-n{1}-r{2}-d{3}.txt".format(res.q, res.n, res.r, res.d)

    def _record(self, key, res):
        with self._locker:
            self._results[key] = res
            if self.witness_dir is not None:
                if not os.path.isdir(self.witness_dir):
                    os.makedirs(self.witness_dir)
                res.witness_file = os.path.join(self.witness_dir, self.witness_name(res))
                if res.metric == "R":
                    CodeFile.save_rank_code(res.witness_file, res.witness, res.d)
                else:
                    CodeFile.save_cdc(res.witness_file, res.witness, res.d)
            if self.tsv_path is not None:
                self._write_tsv(res)

    def _write_tsv(self, res):
        """
        Insert or replace the row of res, rows sorted. Caller holds the lock.
        """

        rows = dict()
        if FileUtility.is_file_exist(self.tsv_path):
            for line in FileUtility.file_to_textbuffer(self.tsv_path, "utf-8").splitlines():
                fields = line.split("\t")
                if len(fields) != 8 or line == self.TSV_HEADER:
                    continue
                rows[tuple(fields[:6])] = line
        m = "-" if res.m is None else res.m
        fields = [res.metric, res.q, m, res.n, res.r, res.d, res.value, res.witness_file or "-"]
        rows[tuple(str(f) for f in fields[:6])] = "\t".join(str(f) for f in fields)
        lines = [self.TSV_HEADER] + [rows[k] for k in sorted(rows.keys())]
        FileUtility.append_text_to_file(self.tsv_path, "\n".join(lines) + "\n", "utf-8", overwrite=True)
