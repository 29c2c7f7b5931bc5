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
import tempfile

import numpy as np
from gevent.threading import Lock
from pysolbase.FileUtility import FileUtility
from pysolbase.SolBase import SolBase

from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Errors.RankCodeErrors import CapacityException, VerificationException
from pysolrankcodes.LinAlg.GaussElim import GaussElim

logger = logging.getLogger(__name__)


class JRankOracle(object):
    """
    J_R(q,m,n,r,s,d) : number of m x n matrices X with rk(X) = r and rk(X - C) = s, for a fixed C of rank d.
    Computed by enumerating GF(q)^(m x n), memoized in memory and in a tab separated cache file.
    """

    CACHE_FILE = "jr-cache.tsv"
    CACHE_HEADER = "# jr-cache v1\tq\tm\tn\tr\ts\td\tvalue"
    DEFAULT_ENUM_CAP = 1 << 24

    _default = None
    _default_locker = Lock()

    def __init__(self, cache_dir=None, enum_cap=DEFAULT_ENUM_CAP, seed=0, check_centers=True):
        """
        Constructor
        :param cache_dir: cache directory (None : RANKCODES_CACHE_DIR or the system temp dir)
        :type cache_dir: str,None
        :param enum_cap: max number of enumerated matrices
        :type enum_cap: int
        :param seed: seed of the second center drawn for the invariance check
        :type seed: int
        :param check_centers: recount each table around a random center and compare
        :type check_centers: bool
        """

        if cache_dir is None:
            cache_dir = os.environ.get("RANKCODES_CACHE_DIR", os.path.join(tempfile.gettempdir(), "pysolrankcodes"))
        self.cache_dir = cache_dir
        self.enum_cap = enum_cap
        self.seed = seed
        self.check_centers = check_centers

        self._locker = Lock()
        self._values = dict()
        self._loaded = False

    @classmethod
    def default(cls):
        """
        Shared instance
        :return: JRankOracle
        :rtype: JRankOracle
        """

        if cls._default is None:
            with cls._default_locker:
                if cls._default is None:
                    cls._default = JRankOracle()
        return cls._default

    @property
    def cache_path(self):
        return os.path.join(self.cache_dir, self.CACHE_FILE)

    # ====================================
    # PUBLIC
    # ====================================

    def j_rank(self, q, m, n, r, s, d):
        """
        J_R value, symmetric in (r, s)
        :param q: int
        :type q: int
        :param m: int
        :type m: int
        :param n: int
        :type n: int
        :param r: rank of X
        :type r: int
        :param s: rank distance from X to the center
        :type s: int
        :param d: rank of the center
        :type d: int
        :return: int
        :rtype: int
        """

        if n > m:
            m, n = n, m
        k = n
        if min(r, s, d) < 0 or max(r, s, d) > k:
            return 0
        if d == 0:
            return Counting.n_rank(q, m, n, r) if r == s else 0
        if r == 0:
            return 1 if s == d else 0
        if s == 0:
            return 1 if r == d else 0

        key = (q, m, n, r, s, d)
        self._load()
        if key in self._values:
            return self._values[key]

        with self._locker:
            if key not in self._values:
                self._compute_table(q, m, n)
                self._save()
        return self._values[key]

    def clear_memory(self):
        with self._locker:
            self._values = dict()
            self._loaded = False

    # ====================================
    # TABLES
    # ====================================

    def _histograms(self, q, m, n, centers):
        """
        For each center, hist[a, b] = #{X : rk X = a, rk(X - center) = b}
        :param centers: list of (m, n) arrays
        :type centers: list
        :return: list of np.ndarray
        :rtype: list
        """

        total = q ** (m * n)
        k = n
        hists = [np.zeros((k + 1, k + 1), dtype=np.int64) for _ in centers]
        chunk = GaussElim.CHUNK_SIZE
        for start in range(0, total, chunk):
            stop = min(total, start + chunk)
            mats = GaussElim.index_to_digits(np.arange(start, stop, dtype=np.int64), q, m * n).reshape(-1, m, n)
            rx = GaussElim.batch_rank(mats, q)
            for hist, center in zip(hists, centers):
                rs = GaussElim.batch_rank((mats - center[None, :, :]) % q, q)
                hist += np.bincount(rx * (k + 1) + rs, minlength=(k + 1) * (k + 1)).reshape(k + 1, k + 1)
            SolBase.sleep(0)
        return hists

    def _random_center(self, rng, q, m, n, d):
        while True:
            g = rng.integers(0, q, size=(d, m))
            h = rng.integers(0, q, size=(d, n))
            c = (g.T @ h) % q
            if GaussElim.batch_rank(c[None, :, :], q)[0] == d:
                return c.astype(np.int64)

    def _compute_table(self, q, m, n):
        """
        Enumerate GF(q)^(m x n) once for every center rank d >= 1
        """

        total = q ** (m * n)
        if total > self.enum_cap:
            raise CapacityException("j_rank enumeration", total, self.enum_cap)

        ms = SolBase.mscurrent()
        k = n
        centers = []
        for d in range(1, k + 1):
            c = np.zeros((m, n), dtype=np.int64)
            for i in range(d):
                c[i, i] = 1
            centers.append(c)
        if self.check_centers:
            rng = np.random.default_rng(self.seed)
            centers.extend(self._random_center(rng, q, m, n, d) for d in range(1, k + 1))

        hists = self._histograms(q, m, n, centers)
        if self.check_centers:
            for d in range(1, k + 1):
                if not np.array_equal(hists[d - 1], hists[k + d - 1]):
                    raise VerificationException("j_rank depends on the center, q={0}, m={1}, n={2}, d={3}".format(
                        q, m, n, d))

        for d in range(1, k + 1):
            hist = hists[d - 1]
            for r in range(k + 1):
                for s in range(k + 1):
                    self._values[(q, m, n, r, s, d)] = int(hist[r, s])
        logger.info("Computed j_rank table, q=%s, m=%s, n=%s, total=%s, ms=%s", q, m, n, total, SolBase.msdiff(ms))

    # ====================================
    # CACHE FILE
    # ====================================

    def _load(self):
        if self._loaded:
            return
        with self._locker:
            if self._loaded:
                return
            path = self.cache_path
            if FileUtility.is_file_exist(path):
                buf = FileUtility.file_to_textbuffer(path, "utf-8")
                bad = 0
                for line in buf.splitlines():
                    if not line or line.startswith("#"):
                        continue
                    fields = line.split("\t")
                    try:
                        if len(fields) != 7:
                            raise ValueError("field count")
                        q, m, n, r, s, d, v = [int(f) for f in fields]
                    except ValueError:
                        bad += 1
                        continue
                    self._values[(q, m, n, r, s, d)] = v
                if bad > 0:
                    logger.warning("Skipped malformed cache lines, path=%s, bad=%s", path, bad)
                logger.debug("Loaded j_rank cache, path=%s, count=%s", path, len(self._values))
            self._loaded = True

    def _save(self):
        """
        Rewrite the whole cache, sorted, through a temp file. Caller holds the lock.
        """

        path = self.cache_path
        try:
            if not os.path.isdir(self.cache_dir):
                os.makedirs(self.cache_dir)
            lines = [self.CACHE_HEADER]
            for key in sorted(self._values.keys()):
                lines.append("\t".join(str(v) for v in key + (self._values[key],)))
            tmp = "{0}.{1}.tmp".format(path, os.getpid())
            FileUtility.append_text_to_file(tmp, "\n".join(lines) + "\n", "utf-8", overwrite=True)
            os.replace(tmp, path)
        except Exception as e:
            logger.warning("Cache write failed, path=%s, ex=%s", path, SolBase.extostr(e))
