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
import math

from pysolbase.FileUtility import FileUtility

from pysolrankcodes.Cdc.ConstantDimensionCode import ConstantDimensionCode
from pysolrankcodes.Errors.RankCodeErrors import UsageException, RankCodeException
from pysolrankcodes.Gf.FieldSpec import FieldSpec
from pysolrankcodes.LinAlg.MatrixGF import MatrixGF
from pysolrankcodes.LinAlg.Subspace import Subspace
from pysolrankcodes.RankCodes.RankCode import RankCode, ConstantRankCode

logger = logging.getLogger(__name__)


class VerifyReport(object):
    """
    Outcome of a code file verification
    """

    def __init__(self):
        """
        Const
        """

        # File
        self.path = None
        self.tag = None

        # Recomputed
        self.count = None
        self.min_distance = None

        # Violated claims, as "name: detail"
        self.violations = list()

    @property
    def ok(self):
        return len(self.violations) == 0

    def __str__(self):
        return "VerifyReport(path={0}, tag={1}, count={2}, min_dist={3}, ok={4}, violations={5})".format(
            self.path, self.tag, self.count, self.min_distance, self.ok, self.violations)


class CodeFile(object):
    """
    Text code files. First line is a header "<tag> key=value ...", then one matrix per line.
    Tags : crc (constant rank code), rank (any rank code), cdc (rref subspace bases).
    """

    TAG_CRC = "crc"
    TAG_RANK = "rank"
    TAG_CDC = "cdc"

    @classmethod
    def distance_to_text(cls, d):
        return "inf" if d == math.inf else str(int(d))

    @classmethod
    def distance_from_text(cls, buf):
        if buf == "inf":
            return math.inf
        try:
            return int(buf)
        except ValueError:
            raise UsageException("Invalid distance, got={0}".format(buf))

    # ====================================
    # RENDER / PARSE
    # ====================================

    @classmethod
    def render(cls, tag, header, matrices):
        """
        Render a code file
        :param tag: str
        :type tag: str
        :param header: list of (key, value)
        :type header: list
        :param matrices: list of MatrixGF
        :type matrices: list
        :return: str
        :rtype: str
        """

        head = " ".join([tag] + ["{0}={1}".format(k, v) for k, v in header])
        return "\n".join([head] + [mat.to_text() for mat in matrices]) + "\n"

    @classmethod
    def parse(cls, buf):
        """
        Parse a code file
        :param buf: str
        :type buf: str
        :return: tuple (tag, header dict, body lines)
        :rtype: tuple
        """

        lines = [line.strip() for line in buf.splitlines()]
        lines = [line for line in lines if line and not line.startswith("#")]
        if len(lines) == 0:
            raise UsageException("Empty code file")
        tokens = lines[0].split()
        tag = tokens[0]
        if tag not in (cls.TAG_CRC, cls.TAG_RANK, cls.TAG_CDC):
            raise UsageException("Unknown code file tag, tag={0}".format(tag))
        header = dict()
        for token in tokens[1:]:
            if "=" not in token:
                raise UsageException("Invalid header token, token={0}".format(token))
            k, v = token.split("=", 1)
            header[k] = v
        return tag, header, lines[1:]

    @classmethod
    def _int(cls, header, key):
        try:
            return int(header[key])
        except (KeyError, ValueError):
            raise UsageException("Missing or invalid header key, key={0}".format(key))

    @classmethod
    def _header_errors(cls, header):
        """
        Header keys whose value does not parse
        :rtype: list
        """

        out = []
        for key in ("q", "m", "n", "r", "count"):
            if key in header and not header[key].isdigit():
                out.append(key)
        for key in ("d", "min_dist"):
            if key in header and header[key] != "inf" and not header[key].isdigit():
                out.append(key)
        return out

    # ====================================
    # SAVE
    # ====================================

    @classmethod
    def rank_code_to_text(cls, code, d, field_spec=None):
        """
        Render a RankCode / ConstantRankCode with a recomputed stamp
        :param code: RankCode
        :type code: RankCode
        :param d: claimed minimum rank distance
        :type d: int
        :param field_spec: FieldSpec the code was built over, if any
        :type field_spec: FieldSpec,None
        :return: str
        :rtype: str
        """

        is_crc = isinstance(code, ConstantRankCode)
        header = [("q", code.p), ("m", code.rows), ("n", code.cols)]
        if is_crc:
            header.append(("r", code.r))
        header.extend([
            ("d", d),
            ("count", code.size),
            ("min_dist", cls.distance_to_text(code.min_rank_distance())),
        ])
        if field_spec is not None:
            header.append(("field", field_spec.to_text()))
        return cls.render(cls.TAG_CRC if is_crc else cls.TAG_RANK, header, code.matrices())

    @classmethod
    def cdc_to_text(cls, cdc, d):
        header = [
            ("q", cdc.p), ("n", cdc.n), ("r", cdc.r), ("d", d), ("count", cdc.size),
            ("min_dist", cls.distance_to_text(cdc.min_injection_distance())),
        ]
        return cls.render(cls.TAG_CDC, header, [s.basis for s in cdc.subspaces])

    @classmethod
    def save_rank_code(cls, path, code, d, field_spec=None):
        FileUtility.append_text_to_file(path, cls.rank_code_to_text(code, d, field_spec), "utf-8", overwrite=True)
        logger.info("Wrote code file, path=%s, count=%s", path, code.size)

    @classmethod
    def save_cdc(cls, path, cdc, d):
        FileUtility.append_text_to_file(path, cls.cdc_to_text(cdc, d), "utf-8", overwrite=True)
        logger.info("Wrote cdc file, path=%s, count=%s", path, cdc.size)

    # ====================================
    # LOAD
    # ====================================

    @classmethod
    def from_text(cls, buf):
        """
        Parse into (tag, header, code)
        :param buf: str
        :type buf: str
        :return: tuple
        :rtype: tuple
        """

        tag, header, body = cls.parse(buf)
        q = cls._int(header, "q")
        d = cls.distance_from_text(header["d"]) if "d" in header else None

        if tag == cls.TAG_CDC:
            n = cls._int(header, "n")
            r = cls._int(header, "r")
            subspaces = []
            for line in body:
                basis = MatrixGF.from_text(q, line, cols=n)
                sub = Subspace.from_generators(basis)
                if sub.basis != basis or sub.dim != r:
                    raise UsageException("Basis not in rref or wrong dimension, line={0}".format(line))
                subspaces.append(sub)
            return tag, header, ConstantDimensionCode(q, n, r, subspaces, claimed_distance=d)

        m = cls._int(header, "m")
        n = cls._int(header, "n")
        mats = [MatrixGF.from_text(q, line, cols=n) for line in body]
        for mat in mats:
            if mat.rows != m:
                raise UsageException("Row count mismatch, cur={0}, need={1}".format(mat.rows, m))
        if tag == cls.TAG_CRC:
            code = ConstantRankCode.from_matrices(mats, r=cls._int(header, "r"), rows=m, cols=n, p=q,
                                                  claimed_distance=d)
        else:
            code = RankCode.from_matrices(mats, rows=m, cols=n, p=q, claimed_distance=d)
        return tag, header, code

    @classmethod
    def load(cls, path):
        if not FileUtility.is_file_exist(path):
            raise UsageException("File not found, path={0}".format(path))
        return cls.from_text(FileUtility.file_to_textbuffer(path, "utf-8"))

    # ====================================
    # VERIFY
    # ====================================

    @classmethod
    def verify_text(cls, buf, path=None):
        """
        Recompute every stamped claim
        :param buf: file content
        :type buf: str
        :param path: for the report
        :type path: str,None
        :return: VerifyReport
        :rtype: VerifyReport
        """

        report = VerifyReport()
        report.path = path
        try:
            tag, header, body = cls.parse(buf)
        except RankCodeException as e:
            report.violations.append("format: {0}".format(e))
            return report
        report.tag = tag
        bad = cls._header_errors(header)
        if len(bad) > 0:
            report.violations.append("format: invalid header values, keys={0}".format(",".join(bad)))
            return report

        if "field" in header:
            try:
                fs = FieldSpec.from_text(header["field"])
                if fs.p != cls._int(header, "q") or fs.m != cls._int(header, "m"):
                    report.violations.append("field: header field does not match q, m")
            except RankCodeException as e:
                report.violations.append("field: {0}".format(e))

        try:
            _, _, code = cls.from_text(buf)
        except RankCodeException as e:
            report.violations.append("{0}: {1}".format("constant rank" if tag == cls.TAG_CRC else "members", e))
            return report

        report.count = code.size
        if tag == cls.TAG_CDC:
            report.min_distance = code.min_injection_distance()
        else:
            report.min_distance = code.min_rank_distance()

        if len(body) != code.size:
            report.violations.append("set: duplicate words, lines={0}, distinct={1}".format(len(body), code.size))
        if "count" in header and cls._int(header, "count") != code.size:
            report.violations.append("count: stamped={0}, recomputed={1}".format(header["count"], code.size))
        if "min_dist" in header and cls.distance_from_text(header["min_dist"]) != report.min_distance:
            report.violations.append("min_dist: stamped={0}, recomputed={1}".format(
                header["min_dist"], cls.distance_to_text(report.min_distance)))
        if code.claimed_distance is not None and report.min_distance < code.claimed_distance:
            report.violations.append("distance: claimed d={0}, recomputed={1}".format(
                code.claimed_distance, cls.distance_to_text(report.min_distance)))
        return report

    @classmethod
    def verify(cls, path):
        if not FileUtility.is_file_exist(path):
            raise UsageException("File not found, path={0}".format(path))
        return cls.verify_text(FileUtility.file_to_textbuffer(path, "utf-8"), path=path)
