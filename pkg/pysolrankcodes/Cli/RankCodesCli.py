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
import argparse
import csv
import io
import logging
import sys
from fractions import Fraction

from pysolbase.FileUtility import FileUtility
from pysolbase.SolBase import SolBase

from pysolrankcodes.Bounds.Asymptotic import Asymptotic
from pysolrankcodes.Bounds.BoundReport import BoundReport
from pysolrankcodes.Cdc.CdcConversion import CdcConversion
from pysolrankcodes.Cli.RunConfig import RunConfig
from pysolrankcodes.Counting.Counting import Counting
from pysolrankcodes.Counting.JRankOracle import JRankOracle
from pysolrankcodes.Errors.RankCodeErrors import UsageException, CapacityException, VerificationException
from pysolrankcodes.RankCodes.CodeFile import CodeFile
from pysolrankcodes.RankCodes.GabidulinSpec import GabidulinSpec
from pysolrankcodes.RankCodes.RankCode import ConstantRankCode
from pysolrankcodes.RankCodes.RankCodes import RankCodes
from pysolrankcodes.Search.ExactSearch import ExactSearch

logger = logging.getLogger(__name__)


class RankCodesCli(object):
    """
    Command line entry point
    """

    EXIT_OK = 0
    EXIT_USAGE = 2
    EXIT_CAPACITY = 3
    EXIT_VERIFICATION = 4

    KINDS = ["gabidulin", "shell", "coset-crc", "crc-to-cdc", "cdc-pair-to-crc"]

    # ====================================
    # PARSING
    # ====================================

    @classmethod
    def build_parser(cls):
        """
        :return: argparse.ArgumentParser
        :rtype: argparse.ArgumentParser
        """

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--log-level", dest="log_level", default="INFO")
        common.add_argument("--jobs", type=int, default=1)
        common.add_argument("--seed", type=int, default=0)
        common.add_argument("--enum-cap", dest="enum_cap", type=int, default=1 << 24)
        common.add_argument("--cache-dir", dest="cache_dir", default=None)
        common.add_argument("-o", "--out", dest="output_path", default=None)

        params = argparse.ArgumentParser(add_help=False)
        params.add_argument("-q", type=int, default=2)
        params.add_argument("-m", type=int, default=None)
        params.add_argument("-n", type=int, default=None)
        params.add_argument("-r", type=int, default=None)
        params.add_argument("-d", type=int, default=None)

        parser = argparse.ArgumentParser(prog="pysolrankcodes", description="Constant rank and constant dimension codes")
        sub = parser.add_subparsers(dest="subcommand")
        sub.required = True

        p = sub.add_parser("construct", parents=[common, params], help="Build a code file")
        p.add_argument("kind", choices=cls.KINDS)
        p.add_argument("-k", type=int, default=None)
        p.add_argument("--a-param", dest="a_param", type=int, default=1)
        p.add_argument("--poly", default=None)
        p.add_argument("--side", choices=[CdcConversion.SIDE_ROWS, CdcConversion.SIDE_COLS], default="rows")
        p.add_argument("--in", dest="input_paths", action="append", default=[])
        p.add_argument("--pairing", default=None)
        p.add_argument("--all-cosets", dest="all_cosets", action="store_true")

        p = sub.add_parser("verify", parents=[common], help="Recompute the claims of a code file")
        p.add_argument("input_paths", nargs=1)

        p = sub.add_parser("bounds", parents=[common, params], help="Bounds on A_R(q,m,n,d,r)")
        p.add_argument("--csv", action="store_true")
        p.add_argument("--search", dest="use_search", action="store_true")
        p.add_argument("--vertex-cap", dest="vertex_cap", type=int, default=2000)
        p.add_argument("--node-cap", dest="node_cap", type=int, default=2000000)

        p = sub.add_parser("search", parents=[common, params], help="Exact A_R or A_C")
        p.add_argument("--metric", choices=["R", "C"], default="R")
        p.add_argument("--symmetry", action="store_true")
        p.add_argument("--vertex-cap", dest="vertex_cap", type=int, default=2000)
        p.add_argument("--node-cap", dest="node_cap", type=int, default=2000000)
        p.add_argument("--witness-dir", dest="witness_dir", default="witnesses")
        p.add_argument("--exact-tsv", dest="exact_tsv", default="exact-values.tsv")

        p = sub.add_parser("asympt", parents=[common], help="Asymptotic rate curves")
        p.add_argument("--preset", choices=sorted(Asymptotic.PRESETS.keys()), default=None)
        p.add_argument("--nu", default=None)
        p.add_argument("--rho", default=None)
        p.add_argument("--delta-steps", dest="delta_steps", type=int, default=60)
        p.add_argument("--csv", action="store_true")

        p = sub.add_parser("distro", parents=[common, params], help="Enumerated MRD rank distribution vs formula")
        p.add_argument("--poly", default=None)
        return parser

    @classmethod
    def parse_args(cls, argv):
        """
        :param argv: argument list, without the program name
        :type argv: list
        :return: RunConfig
        :rtype: RunConfig
        """

        ns = cls.build_parser().parse_args(argv)
        cfg = RunConfig()
        for k, v in vars(ns).items():
            if v is not None:
                setattr(cfg, k, v)
        return cfg

    # ====================================
    # RUN
    # ====================================

    @classmethod
    def run(cls, cfg, out=None):
        """
        Dispatch, map exceptions to exit codes
        :param cfg: RunConfig
        :type cfg: RunConfig
        :param out: text stream for results (None : stdout)
        :return: exit code
        :rtype: int
        """

        out = out or sys.stdout
        ms = SolBase.mscurrent()
        logger.debug("Run, cfg=%s", cfg)
        try:
            handler = {
                "construct": cls.cmd_construct,
                "verify": cls.cmd_verify,
                "bounds": cls.cmd_bounds,
                "search": cls.cmd_search,
                "asympt": cls.cmd_asympt,
                "distro": cls.cmd_distro,
            }.get(cfg.subcommand)
            if handler is None:
                raise UsageException("Unknown subcommand, cmd={0}".format(cfg.subcommand))
            code = handler(cfg, out)
            logger.info("Done, cmd=%s, exit=%s, ms=%s", cfg.subcommand, code, SolBase.msdiff(ms))
            return code
        except UsageException as e:
            return cls._fail("usage", e, cls.EXIT_USAGE)
        except CapacityException as e:
            return cls._fail("capacity", e, cls.EXIT_CAPACITY)
        except VerificationException as e:
            return cls._fail("verification", e, cls.EXIT_VERIFICATION)

    @classmethod
    def _fail(cls, kind, e, code):
        logger.warning("Command failed, kind=%s, ex=%s", kind, SolBase.extostr(e))
        sys.stderr.write("error={0} reason={1}\n".format(kind, str(e).replace("\n", " ")))
        return code

    @classmethod
    def _emit(cls, cfg, out, text):
        if cfg.output_path:
            FileUtility.append_text_to_file(cfg.output_path, text, "utf-8", overwrite=True)
            logger.info("Wrote, path=%s", cfg.output_path)
        else:
            out.write(text)

    @classmethod
    def _field(cls, cfg):
        cfg.require("m")
        return RankCodes.field(cfg.q, cfg.m, cfg.poly)

    # ====================================
    # CONSTRUCT
    # ====================================

    @classmethod
    def cmd_construct(cls, cfg, out):
        """
        Build a code and write it with a recomputed stamp
        """

        if cfg.kind == "gabidulin":
            cfg.require("m", "n")
            fs = cls._field(cfg)
            if cfg.k is None:
                cfg.require("d")
                spec = GabidulinSpec.for_distance(fs, cfg.n, cfg.d, a_param=cfg.a_param)
            else:
                spec = GabidulinSpec(fs, cfg.n, cfg.k, a_param=cfg.a_param)
            code = RankCodes.to_rank_code(RankCodes.build_gabidulin(spec), cfg.enum_cap)
            cls._emit(cfg, out, CodeFile.rank_code_to_text(code, spec.d, fs))

        elif cfg.kind == "shell":
            cfg.require("m", "n", "d", "r")
            fs = cls._field(cfg)
            spec = GabidulinSpec.for_distance(fs, cfg.n, cfg.d, a_param=cfg.a_param)
            shell = RankCodes.rank_shell(RankCodes.build_gabidulin(spec), cfg.r, cfg.enum_cap)
            cls._emit(cfg, out, CodeFile.rank_code_to_text(shell, cfg.d, fs))

        elif cfg.kind == "coset-crc":
            cfg.require("m", "n", "d", "r")
            fs = cls._field(cfg)
            res = RankCodes.coset_crc_search(fs, cfg.n, cfg.d, cfg.r, a_param=cfg.a_param, jobs=cfg.jobs,
                                             all_cosets=cfg.all_cosets, enum_cap=cfg.enum_cap)
            logger.info("Coset search, res=%s, sigma=%s", res, res.sigma)
            if cfg.all_cosets and cfg.output_path:
                for index in sorted(res.all_codes.keys()):
                    path = "{0}.coset{1}".format(cfg.output_path, index)
                    CodeFile.save_rank_code(path, res.all_codes[index], cfg.d, fs)
            cls._emit(cfg, out, CodeFile.rank_code_to_text(res.code, cfg.d, fs))

        elif cfg.kind == "crc-to-cdc":
            crc = cls._load_crc(cfg, 0)
            cdc = CdcConversion.crc_to_cdc(crc, cfg.side)
            d = cdc.claimed_distance if cdc.claimed_distance is not None else cdc.min_injection_distance()
            cls._emit(cfg, out, CodeFile.cdc_to_text(cdc, CodeFile.distance_to_text(d)))

        elif cfg.kind == "cdc-pair-to-crc":
            if len(cfg.input_paths) != 2:
                raise UsageException("Need two --in files (M then N), got {0}".format(len(cfg.input_paths)))
            codes = []
            for path in cfg.input_paths:
                tag, _, code = CodeFile.load(path)
                if tag != CodeFile.TAG_CDC:
                    raise UsageException("Not a cdc file, path={0}, tag={1}".format(path, tag))
                codes.append(code)
            pairing = None
            if cfg.pairing:
                try:
                    pairing = [int(v) for v in cfg.pairing.split(",")]
                except ValueError:
                    raise UsageException("Invalid pairing, pairing={0}".format(cfg.pairing))
            crc = CdcConversion.cdc_pair_to_crc(codes[0], codes[1], pairing)
            report = CdcConversion.pair_sandwich_report(codes[0], codes[1], crc)
            logger.info("Pair sandwich, report=%s", report)
            if not report.holds:
                raise VerificationException("Distance sandwich violated, report={0}".format(report))
            d = crc.claimed_distance if crc.claimed_distance is not None else crc.min_rank_distance()
            cls._emit(cfg, out, CodeFile.rank_code_to_text(crc, CodeFile.distance_to_text(d)))

        else:
            raise UsageException("Unknown kind, kind={0}".format(cfg.kind))
        return cls.EXIT_OK

    @classmethod
    def _load_crc(cls, cfg, index):
        if len(cfg.input_paths) <= index:
            raise UsageException("Missing --in file")
        path = cfg.input_paths[index]
        tag, _, code = CodeFile.load(path)
        if not isinstance(code, ConstantRankCode):
            raise UsageException("Not a crc file, path={0}, tag={1}".format(path, tag))
        return code

    # ====================================
    # VERIFY
    # ====================================

    @classmethod
    def cmd_verify(cls, cfg, out):
        report = CodeFile.verify(cfg.input_paths[0])
        out.write("verify path={0} tag={1} count={2} min_dist={3} ok={4}\n".format(
            report.path, report.tag, report.count,
            CodeFile.distance_to_text(report.min_distance) if report.min_distance is not None else "-", report.ok))
        for v in report.violations:
            out.write("violation {0}\n".format(v))
        return cls.EXIT_OK if report.ok else cls.EXIT_VERIFICATION

    # ====================================
    # BOUNDS
    # ====================================

    @classmethod
    def cmd_bounds(cls, cfg, out):
        cfg.require("m", "n", "r", "d")
        oracle = JRankOracle(cache_dir=cfg.cache_dir, enum_cap=cfg.enum_cap, seed=cfg.seed)
        exact_provider = ac_provider = None
        if cfg.use_search:
            search = cls._search(cfg, persist=False)
            exact_provider = lambda q, m, n, d, r: search.exact_A_R(q, m, n, d, r).value
            ac_provider = search.ac_value
        rep = BoundReport.bound_report(cfg.q, cfg.m, cfg.n, cfg.r, cfg.d, oracle=oracle,
                                       exact_provider=exact_provider, ac_provider=ac_provider)
        if cfg.csv:
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(BoundReport.CSV_HEADER)
            w.writerows(rep.csv_rows())
            cls._emit(cfg, out, buf.getvalue())
        else:
            cls._emit(cfg, out, rep.to_text())
        if not rep.consistent:
            raise VerificationException("Inconsistent bounds, rep={0}".format(rep))
        return cls.EXIT_OK

    # ====================================
    # SEARCH
    # ====================================

    @classmethod
    def _search(cls, cfg, persist=True):
        return ExactSearch(vertex_cap=cfg.vertex_cap, node_cap=cfg.node_cap, enum_cap=cfg.enum_cap,
                           witness_dir=cfg.witness_dir if persist else None,
                           tsv_path=cfg.exact_tsv if persist else None,
                           symmetry=cfg.symmetry, jobs=cfg.jobs)

    @classmethod
    def cmd_search(cls, cfg, out):
        search = cls._search(cfg)
        if cfg.metric == "C":
            cfg.require("n", "r", "d")
            res = search.exact_A_C(cfg.q, cfg.n, cfg.r, cfg.d)
        else:
            cfg.require("m", "n", "r", "d")
            res = search.exact_A_R(cfg.q, cfg.m, cfg.n, cfg.d, cfg.r)
        out.write("metric={0} q={1} m={2} n={3} r={4} d={5} value={6} closed_by={7} witness={8}\n".format(
            res.metric, res.q, "-" if res.m is None else res.m, res.n, res.r, res.d, res.value, res.closed_by,
            res.witness_file or "-"))
        return cls.EXIT_OK

    # ====================================
    # ASYMPTOTIC
    # ====================================

    @classmethod
    def cmd_asympt(cls, cfg, out):
        if cfg.preset is not None:
            nu, rho = Asymptotic.PRESETS[cfg.preset]
        else:
            cfg.require("nu", "rho")
            try:
                nu, rho = Fraction(cfg.nu), Fraction(cfg.rho)
            except (ValueError, ZeroDivisionError):
                raise UsageException("Invalid rational, nu={0}, rho={1}".format(cfg.nu, cfg.rho))
        rows = Asymptotic.sweep(nu, rho, cfg.delta_steps)

        buf = io.StringIO()
        if cfg.csv:
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["nu", "rho", "delta", "lower", "upper", "exact_flag"])
            for point, lower, upper, exact in rows:
                w.writerow([point.nu, point.rho, point.delta, lower, upper, 1 if exact else 0])
        else:
            for point, lower, upper, exact in rows:
                buf.write("{0:<10} {1:<14} {2:<14} {3:<8} {4}\n".format(
                    str(point.delta), str(lower), str(upper), "exact" if exact else "", point.regime))
        cls._emit(cfg, out, buf.getvalue())
        return cls.EXIT_OK

    # ====================================
    # DISTRO
    # ====================================

    @classmethod
    def cmd_distro(cls, cfg, out):
        """
        Rank distribution of the (n, n-d+1, d) code, enumerated and from the closed form
        """

        cfg.require("m", "n", "d")
        fs = cls._field(cfg)
        code = RankCodes.build_gabidulin(GabidulinSpec.for_distance(fs, cfg.n, cfg.d))
        hist = RankCodes.rank_distribution(code, cfg.enum_cap)
        formula = Counting.mrd_distribution(cfg.q, cfg.m, cfg.n, cfg.d)

        buf = io.StringIO()
        buf.write("r enumerated formula\n")
        for r in range(cfg.n + 1):
            buf.write("{0} {1} {2}\n".format(r, hist[r], formula[r]))
        cls._emit(cfg, out, buf.getvalue())
        if hist != formula:
            raise VerificationException("Rank distribution mismatch, cur={0}, need={1}".format(hist, formula))
        return cls.EXIT_OK


def main(argv=None):
    """
    Console entry point
    :param argv: arguments (None : sys.argv[1:])
    :type argv: list,None
    :return: exit code
    :rtype: int
    """

    cfg = RankCodesCli.parse_args(sys.argv[1:] if argv is None else argv)
    SolBase.logging_init(log_level=cfg.log_level, force_reset=True)
    return RankCodesCli.run(cfg)


if __name__ == "__main__":
    sys.exit(main())
