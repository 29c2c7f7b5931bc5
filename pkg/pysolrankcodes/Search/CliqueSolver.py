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

from pysolrankcodes.Errors.RankCodeErrors import CapacityException, UsageException

logger = logging.getLogger(__name__)


class CliqueSolver(object):
    """
    Exact maximum clique, branch and bound with greedy coloring bounds.
    Candidate sets are python int bitsets over positions of a fixed vertex order.
    """

    # Default search node budget
    DEFAULT_NODE_CAP = 2000000

    # Cooperative yield period, in nodes
    YIELD_EVERY = 4096

    def __init__(self, adjacency, order=None, node_cap=DEFAULT_NODE_CAP):
        """
        Constructor
        :param adjacency: bool array (count, count)
        :type adjacency: np.ndarray
        :param order: vertex order (list of vertex index), None for natural order
        :type order: list,None
        :param node_cap: node budget
        :type node_cap: int
        """

        count = int(adjacency.shape[0])
        self.order = list(order) if order is not None else list(range(count))
        if sorted(self.order) != list(range(count)):
            raise UsageException("Order is not a permutation of the vertices, count={0}".format(count))
        self.node_cap = node_cap

        # Position bitsets
        pos = {v: i for i, v in enumerate(self.order)}
        self._nbr = []
        for v in self.order:
            bits = 0
            for w in adjacency[v].nonzero()[0].tolist():
                bits |= 1 << pos[w]
            self._nbr.append(bits)
        self._pos = pos

        self.nodes = 0
        self._best = []
        self._target = None

    def solve(self, incumbent=None, upper_bound=None, fixed=None):
        """
        Maximum clique
        :param incumbent: known clique (vertex indices), used as the initial lower bound
        :type incumbent: list,None
        :param upper_bound: proven bound on the clique number, the search stops when reached
        :type upper_bound: int,None
        :param fixed: vertex forced into the clique (vertex-transitive graphs)
        :type fixed: int,None
        :return: sorted list of vertex indices of a maximum clique
        :rtype: list
        """

        ms = SolBase.mscurrent()
        self.nodes = 0
        self._target = upper_bound
        self._best = sorted(self._pos[v] for v in incumbent) if incumbent else []

        if self._target is None or len(self._best) < self._target:
            full = (1 << len(self.order)) - 1
            if fixed is None:
                self._expand([], full)
            else:
                f = self._pos[fixed]
                self._expand([f], self._nbr[f])

        out = sorted(self.order[i] for i in self._best)
        logger.info("Clique solved, vertices=%s, size=%s, nodes=%s, ms=%s",
                    len(self.order), len(out), self.nodes, SolBase.msdiff(ms))
        return out

    def _done(self):
        return self._target is not None and len(self._best) >= self._target

    def _color_sort(self, p_bits):
        """
        Greedy sequential coloring of the candidates, lowest position first
        :return: list of (position, color), colors non-decreasing
        :rtype: list
        """

        out = []
        color = 0
        uncolored = p_bits
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                uncolored &= ~low
                avail &= ~low
                avail &= ~self._nbr[v]
                out.append((v, color))
        return out

    def _expand(self, current, p_bits):
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise CapacityException("clique node", self.nodes, self.node_cap)
        if self.nodes % self.YIELD_EVERY == 0:
            SolBase.sleep(0)

        if not p_bits:
            self._offer(current)
            return

        for v, color in reversed(self._color_sort(p_bits)):
            if len(current) + color <= len(self._best):
                return
            current.append(v)
            sub = p_bits & self._nbr[v]
            if sub:
                self._expand(current, sub)
            else:
                self._offer(current)
            current.pop()
            if self._done():
                return
            p_bits &= ~(1 << v)

    def _offer(self, current):
        if len(current) > len(self._best):
            self._best = sorted(current)
        elif len(current) == len(self._best) and self._labels(current) < self._labels(self._best):
            self._best = sorted(current)

    def _labels(self, positions):
        return sorted(self.order[i] for i in positions)
