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

import networkx as nx
import numpy as np
from pysolbase.SolBase import SolBase

from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Errors.RankCodeErrors import UsageException, CapacityException, VerificationException
from pysolrankcodes.LinAlg.GaussElim import GaussElim
from pysolrankcodes.LinAlg.LinAlg import LinAlg
from pysolrankcodes.LinAlg.Subspace import Subspace

logger = logging.getLogger(__name__)


class CompatGraph(object):
    """
    Distance compatibility graph : vertices are the rank r matrices of GF(q)^(m x n) (metric R)
    or the r-dimensional subspaces of GF(q)^n (metric C), edges join pairs at distance >= d.
    Vertices are in canonical (lexicographic) order.
    """

    METRIC_RANK = "R"
    METRIC_SUBSPACE = "C"

    # Default vertex budget
    DEFAULT_VERTEX_CAP = 2000

    def __init__(self, metric, q, m, n, r, d, vertices, adjacency):
        """
        Constructor
        :param metric: METRIC_RANK or METRIC_SUBSPACE
        :type metric: str
        :param vertices: rank metric : array (count, m, n). Subspace metric : list of Subspace
        :type vertices: np.ndarray,list
        :param adjacency: bool array (count, count), diagonal False
        :type adjacency: np.ndarray
        """

        self.metric = metric
        self.q = q
        self.m = m
        self.n = n
        self.r = r
        self.d = d
        self.vertices = vertices
        self.adjacency = adjacency

    @property
    def vertex_count(self):
        return int(self.adjacency.shape[0])

    # ====================================
    # BUILD
    # ====================================

    @classmethod
    def rank_universe(cls, q, m, n, r, enum_cap=1 << 24):
        """
        All m x n matrices of rank r, lexicographic order
        :return: array (N_R, m, n)
        :rtype: np.ndarray
        """

        total = q ** (m * n)
        if total > enum_cap:
            raise CapacityException("matrix enumeration", total, enum_cap)
        blocks = []
        for start in range(0, total, GaussElim.CHUNK_SIZE):
            stop = min(total, start + GaussElim.CHUNK_SIZE)
            arr = GaussElim.index_to_digits(np.arange(start, stop), q, m * n).reshape(-1, m, n)
            blocks.append(arr[GaussElim.batch_rank(arr, q) == r])
            SolBase.sleep(0)
        out = np.concatenate(blocks, axis=0)
        if out.shape[0] != Counting.n_rank(q, m, n, r):
            raise VerificationException("Rank universe size mismatch, cur={0}, need={1}".format(
                out.shape[0], Counting.n_rank(q, m, n, r)))
        return out

    @classmethod
    def for_rank(cls, q, m, n, r, d, vertex_cap=DEFAULT_VERTEX_CAP, enum_cap=1 << 24):
        """
        Rank metric graph
        :return: CompatGraph
        :rtype: CompatGraph
        """

        if not (0 <= r <= min(m, n)):
            raise UsageException("Need 0<=r<=min(m,n), got m={0}, n={1}, r={2}".format(m, n, r))
        count = Counting.n_rank(q, m, n, r)
        if count > vertex_cap:
            raise CapacityException("clique vertex", count, vertex_cap)

        ms = SolBase.mscurrent()
        arr = cls.rank_universe(q, m, n, r, enum_cap)
        adj = np.zeros((count, count), dtype=bool)
        for i in range(count):
            adj[i] = LinAlg.rank_distances_from(arr, arr[i], q) >= d
            adj[i, i] = False
        logger.info("Rank graph built, q=%s, m=%s, n=%s, r=%s, d=%s, vertices=%s, edges=%s, ms=%s",
                    q, m, n, r, d, count, int(adj.sum()) // 2, SolBase.msdiff(ms))
        return CompatGraph(cls.METRIC_RANK, q, m, n, r, d, arr, adj)

    @classmethod
    def for_subspaces(cls, q, n, r, d, vertex_cap=DEFAULT_VERTEX_CAP):
        """
        Injection metric graph over the Grassmannian
        :return: CompatGraph
        :rtype: CompatGraph
        """

        if not (0 <= r <= n):
            raise UsageException("Need 0<=r<=n, got n={0}, r={1}".format(n, r))
        count = Counting.gaussian_binomial(n, r, q)
        if count > vertex_cap:
            raise CapacityException("clique vertex", count, vertex_cap)

        ms = SolBase.mscurrent()
        spaces = sorted(Subspace.enumerate_grassmannian(q, n, r))
        if len(spaces) != count:
            raise VerificationException("Grassmannian size mismatch, cur={0}, need={1}".format(len(spaces), count))
        adj = np.zeros((count, count), dtype=bool)
        if r > 0:
            bases = LinAlg.stack([s.basis for s in spaces])
            for i in range(count):
                pairs = np.concatenate([np.broadcast_to(bases[i], bases.shape), bases], axis=1)
                adj[i] = GaussElim.batch_rank(pairs, q) - r >= d
                adj[i, i] = False
        logger.info("Subspace graph built, q=%s, n=%s, r=%s, d=%s, vertices=%s, edges=%s, ms=%s",
                    q, n, r, d, count, int(adj.sum()) // 2, SolBase.msdiff(ms))
        return CompatGraph(cls.METRIC_SUBSPACE, q, None, n, r, d, spaces, adj)

    # ====================================
    # VIEWS
    # ====================================

    def to_networkx(self):
        """
        :return: nx.Graph with integer vertices
        :rtype: nx.Graph
        """

        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        g.add_edges_from(zip(rows.tolist(), cols.tolist()))
        return g

    def degeneracy_order(self):
        """
        Vertices by decreasing core number, then decreasing degree, then index
        :return: list of int
        :rtype: list
        """

        g = self.to_networkx()
        core = nx.core_number(g)
        return sorted(g.nodes(), key=lambda v: (-core[v], -g.degree(v), v))

    def index_of(self, items):
        """
        Vertex indices of matrices (rank metric, array (count, m, n)) or subspaces.
        Raise UsageException on unknown item.
        :rtype: list
        """

        if self.metric == self.METRIC_RANK:
            lookup = {self.vertices[i].tobytes(): i for i in range(self.vertex_count)}
            keys = [np.asarray(x, dtype=np.int64).tobytes() for x in items]
        else:
            lookup = {s: i for i, s in enumerate(self.vertices)}
            keys = list(items)
        out = []
        for k in keys:
            if k not in lookup:
                raise UsageException("Item is not a vertex of {0}".format(self))
            out.append(lookup[k])
        return out

    def is_clique(self, indices):
        indices = list(indices)
        sub = self.adjacency[np.ix_(indices, indices)]
        return bool(np.all(sub | np.eye(len(indices), dtype=bool)))

    def __str__(self):
        return "CompatGraph(metric={0}, q={1}, m={2}, n={3}, r={4}, d={5}, vertices={6})".format(
            self.metric, self.q, self.m, self.n, self.r, self.d, self.vertex_count)
