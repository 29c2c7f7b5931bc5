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
import os
import tempfile

from pysolrankcodes.Errors.RankCodeErrors import UsageException


class RunConfig(object):
    """
    Command line run configuration
    """

    def __init__(self):
        """
        Const
        """

        # Subcommand : construct|verify|bounds|search|asympt|distro
        self.subcommand = None

        # Construct kind : gabidulin|shell|coset-crc|crc-to-cdc|cdc-pair-to-crc
        self.kind = None

        # Parameters
        self.q = 2
        self.m = None
        self.n = None
        self.r = None
        self.d = None
        self.k = None
        self.a_param = 1
        self.p_param = None

        # Search metric : R|C
        self.metric = "R"

        # Subspace side for crc-to-cdc : rows|cols
        self.side = "rows"

        # Input paths (cdc-pair-to-crc takes two)
        self.input_paths = list()

        # Explicit M to N pairing for cdc-pair-to-crc, "2,0,1"
        self.pairing = None

        # Output path (None : stdout)
        self.output_path = None

        # Budgets
        self.enum_cap = 1 << 24
        self.vertex_cap = 2000
        self.node_cap = 2000000

        # Search persistence
        self.witness_dir = "witnesses"
        self.exact_tsv = "exact-values.tsv"

        # J_R cache
        self.cache_dir = os.environ.get("RANKCODES_CACHE_DIR", os.path.join(tempfile.gettempdir(), "pysolrankcodes"))

        # Seed for randomized sweeps
        self.seed = 0

        # Gevent pool size (cooperative, single thread : no speed-up on CPU bound work)
        self.jobs = 1

        # Field polynomial override, digits low-to-high ("11001")
        self.poly = None

        # Flags
        self.symmetry = False
        self.all_cosets = False
        self.csv = False
        self.use_search = False

        # Asymptotic sweep
        self.preset = None
        self.nu = None
        self.rho = None
        self.delta_steps = 60

        # Logging
        self.log_level = "INFO"

    def require(self, *names):
        """
        Raise UsageException when one of the named parameters is unset
        """

        missing = [name for name in names if getattr(self, name) is None]
        if len(missing) > 0:
            raise UsageException("Missing parameters, cmd={0}, missing={1}".format(self.subcommand, ",".join(missing)))

    def __str__(self):
        return "cfg:cmd={0}*kind={1}*q/m/n/r/d/k={2}/{3}/{4}/{5}/{6}/{7}*a={8}*p={9}*metric={10}*side={11}*in={12}*" \
               "out={13}*caps={14}/{15}/{16}*seed={17}*jobs={18}*poly={19}*sym={20}*csv={21}".format(
                self.subcommand, self.kind,
                self.q, self.m, self.n, self.r, self.d, self.k,
                self.a_param, self.p_param, self.metric, self.side,
                self.input_paths, self.output_path,
                self.enum_cap, self.vertex_cap, self.node_cap,
                self.seed, self.jobs, self.poly, self.symmetry, self.csv,
        )
