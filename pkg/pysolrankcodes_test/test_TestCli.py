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

import io
import logging
import os
import shutil
import tempfile
import unittest

from pysolbase.FileUtility import FileUtility
from pysolbase.SolBase import SolBase

from pysolrankcodes.Cli.RankCodesCli import RankCodesCli, main
from pysolrankcodes.RankCodes.CodeFile import CodeFile

SolBase.logging_init(log_level="INFO", force_reset=True)
logger = logging.getLogger(__name__)


class TestCli(unittest.TestCase):
    """
    Test description
    """

    # noinspection PyPep8Naming
    def setUp(self):
        """
        Setup (called before each test)
        """

        self.tmp_dir = tempfile.mkdtemp(prefix="pysolrankcodes_cli_")

    # noinspection PyPep8Naming
    def tearDown(self):
        """
        Setup (called after each test)
        """

        shutil.rmtree(self.tmp_dir, ignore_errors=True)

    def _path(self, name):
        return os.path.join(self.tmp_dir, name)

    def _run(self, argv):
        cfg = RankCodesCli.parse_args(argv)
        out = io.StringIO()
        code = RankCodesCli.run(cfg, out=out)
        logger.info("Ran, argv=%s, code=%s", argv, code)
        return code, out.getvalue()

    def test_parse_args(self):
        """
        Test
        """

        cfg = RankCodesCli.parse_args(["construct", "shell", "-m", "3", "-n", "3", "-d", "2", "-r", "2", "--jobs", "2"])
        self.assertEqual(cfg.subcommand, "construct")
        self.assertEqual(cfg.kind, "shell")
        self.assertEqual((cfg.q, cfg.m, cfg.n, cfg.d, cfg.r, cfg.jobs), (2, 3, 3, 2, 2, 2))
        self.assertIsNone(cfg.output_path)
        self.assertIsNotNone(cfg.cache_dir)

        self.assertRaises(SystemExit, RankCodesCli.parse_args, [])
        self.assertRaises(SystemExit, RankCodesCli.parse_args, ["construct", "nope"])

    def test_construct_verify(self):
        """
        Test
        """

        path = self._path("shell.txt")
        code, _ = self._run(["construct", "shell", "-m", "3", "-n", "3", "-d", "2", "-r", "2", "-o", path])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        buf = FileUtility.file_to_textbuffer(path, "utf-8")
        self.assertIn("crc q=2 m=3 n=3 r=2 d=2 count=49", buf)

        code, out = self._run(["verify", path])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        self.assertIn("count=49", out)
        self.assertIn("ok=True", out)

        # Corrupted claim
        FileUtility.append_text_to_file(path, buf.replace("count=49", "count=50"), "utf-8", overwrite=True)
        code, out = self._run(["verify", path])
        self.assertEqual(code, RankCodesCli.EXIT_VERIFICATION)
        self.assertIn("ok=False", out)
        self.assertIn("violation ", out)

    def test_construct_to_stream(self):
        """
        Test
        """

        code, out = self._run(["construct", "gabidulin", "-m", "3", "-n", "3", "-d", "3"])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        self.assertIn("rank q=2 m=3 n=3 d=3 count=8 min_dist=3", out)

    def test_construct_subspaces(self):
        """
        Test
        """

        crc_path = self._path("coset.txt")
        cdc_path = self._path("rows.txt")
        pair_path = self._path("pair.txt")

        code, _ = self._run(["construct", "coset-crc", "-m", "3", "-n", "3", "-d", "2", "-r", "1", "-o", crc_path])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        self.assertTrue(CodeFile.verify(crc_path).ok)

        code, _ = self._run(["construct", "crc-to-cdc", "--in", crc_path, "-o", cdc_path])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        report = CodeFile.verify(cdc_path)
        self.assertTrue(report.ok, str(report))
        self.assertEqual(report.count, 7)

        code, _ = self._run(["construct", "cdc-pair-to-crc", "--in", cdc_path, "--in", cdc_path, "-o", pair_path])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        report = CodeFile.verify(pair_path)
        self.assertTrue(report.ok, str(report))
        self.assertEqual(report.count, 7)

        # A crc file where a cdc is expected
        code, _ = self._run(["construct", "cdc-pair-to-crc", "--in", crc_path, "--in", cdc_path])
        self.assertEqual(code, RankCodesCli.EXIT_USAGE)
        code, _ = self._run(["construct", "cdc-pair-to-crc", "--in", cdc_path])
        self.assertEqual(code, RankCodesCli.EXIT_USAGE)

    def test_usage_and_capacity(self):
        """
        Test
        """

        code, _ = self._run(["construct", "shell", "-m", "3", "-n", "3", "-d", "2"])
        self.assertEqual(code, RankCodesCli.EXIT_USAGE)

        code, _ = self._run(["construct", "gabidulin", "-m", "3", "-n", "3", "-d", "1", "--enum-cap", "4"])
        self.assertEqual(code, RankCodesCli.EXIT_CAPACITY)

        code, _ = self._run(["asympt", "--nu", "x", "--rho", "1/5"])
        self.assertEqual(code, RankCodesCli.EXIT_USAGE)

        code, _ = self._run(["verify", self._path("missing.txt")])
        self.assertEqual(code, RankCodesCli.EXIT_USAGE)

    def test_bounds_csv(self):
        """
        Test
        """

        code, out = self._run(["bounds", "-m", "3", "-n", "3", "-r", "2", "-d", "2", "--csv",
                               "--cache-dir", self.tmp_dir])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], "q,m,n,r,d,bound_name,kind,value,provenance")
        self.assertGreater(len(lines), 2)
        for line in lines[1:]:
            self.assertTrue(line.startswith("2,3,3,2,2,"), line)

        code, out = self._run(["bounds", "-m", "3", "-n", "3", "-r", "2", "-d", "2", "--cache-dir", self.tmp_dir])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        self.assertIn("49", out)

    def test_search(self):
        """
        Test
        """

        tsv = self._path("exact.tsv")
        code, out = self._run(["search", "-m", "3", "-n", "2", "-r", "2", "-d", "2",
                               "--witness-dir", self._path("w"), "--exact-tsv", tsv])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        self.assertIn("value=7", out)
        self.assertTrue(FileUtility.is_file_exist(tsv))
        self.assertTrue(CodeFile.verify(self._path("w/R-q2-m3-n2-r2-d2.txt")).ok)

        code, out = self._run(["search", "--metric", "C", "-n", "4", "-r", "2", "-d", "2",
                               "--witness-dir", self._path("w"), "--exact-tsv", tsv])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        self.assertIn("metric=C q=2 m=- n=4 r=2 d=2 value=5", out)

        code, _ = self._run(["search", "--metric", "C", "-n", "6", "-r", "3", "-d", "2", "--vertex-cap", "10",
                             "--witness-dir", self._path("w"), "--exact-tsv", tsv])
        self.assertEqual(code, RankCodesCli.EXIT_CAPACITY)

    def test_asympt(self):
        """
        Test
        """

        code, out = self._run(["asympt", "--preset", "fig1", "--csv", "--delta-steps", "10"])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], "nu,rho,delta,lower,upper,exact_flag")
        self.assertEqual(len(lines), 12)
        self.assertTrue(lines[1].startswith("3/4,1/5,0,"))

        code, out = self._run(["asympt", "--nu", "3/4", "--rho", "2/5", "--delta-steps", "4"])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        self.assertEqual(len(out.splitlines()), 5)

    def test_distro(self):
        """
        Test
        """

        code, out = self._run(["distro", "-m", "3", "-n", "3", "-d", "2"])
        self.assertEqual(code, RankCodesCli.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], "r enumerated formula")
        self.assertEqual(lines[3], "2 49 49")
        self.assertEqual(lines[4], "3 14 14")

    def test_main(self):
        """
        Test
        """

        path = self._path("curve.csv")
        self.assertEqual(main(["asympt", "--preset", "fig2", "--csv", "--delta-steps", "5", "-o", path]), 0)
        self.assertEqual(len(FileUtility.file_to_textbuffer(path, "utf-8").splitlines()), 7)
