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
from math import gcd

import galois
import numpy as np

from pysolrankcodes.Errors.RankCodeErrors import UsageException

logger = logging.getLogger(__name__)


class FieldSpec(object):
    """
    GF(p) and its extension GF(p^m), with the polynomial basis {1, x, ..., x^(m-1)} of the modulus.
    Elements of GF(p^m) are mapped to GF(p)^m column vectors, coordinate i being the coefficient of x^i.
    """

    # Above this order, galois computes products instead of using lookup tables
    MUL_TABLE_MAX = 4096

    def __init__(self, p, m=1, modulus_poly=None):
        """
        Constructor
        :param p: prime
        :type p: int
        :param m: extension degree
        :type m: int
        :param modulus_poly: None (lexicographically least irreducible) or coefficient list low-to-high
        :type modulus_poly: None,list,tuple,str
        """

        if not isinstance(p, int) or p < 2 or not galois.is_prime(p):
            raise UsageException("Need a prime p, got p={0}".format(p))
        if not isinstance(m, int) or m < 1:
            raise UsageException("Need m>=1, got m={0}".format(m))

        self.p = p
        self.m = m
        self.order = p ** m
        self.prime_field = galois.GF(p)

        if modulus_poly is None:
            poly = galois.irreducible_poly(p, m, method="min")
        else:
            poly = self._poly_from_coeffs(modulus_poly)

        self.poly = poly
        # Low-to-high coefficients
        self.modulus_poly = tuple(int(c) for c in reversed(poly.coeffs.tolist()))

        compile_mode = "jit-lookup" if self.order <= self.MUL_TABLE_MAX else "jit-calculate"
        if m == 1:
            self.gf = self.prime_field
        else:
            self.gf = galois.GF(self.order, irreducible_poly=poly, compile=compile_mode)

        # Powers of p used to pack coordinates into galois integers
        self._p_powers = np.array([p ** i for i in range(m)], dtype=np.int64)

    def _poly_from_coeffs(self, coeffs):
        """
        Build and check a user modulus
        :param coeffs: low-to-high coefficients (list or digit string)
        :type coeffs: list,tuple,str
        :return: galois.Poly
        :rtype: galois.Poly
        """

        if isinstance(coeffs, str):
            coeffs = self.parse_poly_digits(coeffs, self.p)
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) != self.m + 1:
            raise UsageException("Modulus degree mismatch, cur={0}, need={1}".format(len(coeffs) - 1, self.m))
        if any(c < 0 or c >= self.p for c in coeffs):
            raise UsageException("Modulus coefficient out of range, coeffs={0}, p={1}".format(coeffs, self.p))
        if coeffs[-1] != 1:
            raise UsageException("Modulus must be monic, coeffs={0}".format(coeffs))

        poly = galois.Poly(list(reversed(coeffs)), field=self.prime_field)
        if not poly.is_irreducible():
            raise UsageException("Modulus not irreducible, coeffs={0}, p={1}".format(coeffs, self.p))
        return poly

    # ====================================
    # SERIALIZATION
    # ====================================

    @classmethod
    def parse_poly_digits(cls, buf, p):
        """
        Parse "11001" (p<=10) or "1.0.0.1.1" coefficient strings, low-to-high
        :param buf: str
        :type buf: str
        :param p: prime
        :type p: int
        :return: list of int
        :rtype: list
        """

        buf = buf.strip()
        try:
            if "." in buf or p > 10:
                return [int(c) for c in buf.split(".")]
            return [int(c) for c in buf]
        except ValueError:
            raise UsageException("Invalid polynomial digits, buf={0}".format(buf))

    def poly_digits(self):
        """
        Modulus coefficients as a low-to-high digit string
        :return: str
        :rtype: str
        """

        if self.p > 10:
            return ".".join(str(c) for c in self.modulus_poly)
        return "".join(str(c) for c in self.modulus_poly)

    def to_text(self):
        """
        Serialize
        :return: str
        :rtype: str
        """

        return "gf:p={0},m={1},poly={2}".format(self.p, self.m, self.poly_digits())

    @classmethod
    def from_text(cls, buf):
        """
        Parse a "gf:p=2,m=4,poly=11001" string
        :param buf: str
        :type buf: str
        :return: FieldSpec
        :rtype: FieldSpec
        """

        if not buf.startswith("gf:"):
            raise UsageException("Invalid field spec, buf={0}".format(buf))
        d = dict()
        for item in buf[3:].split(","):
            if "=" not in item:
                raise UsageException("Invalid field spec item, item={0}".format(item))
            k, v = item.split("=", 1)
            d[k.strip()] = v.strip()
        try:
            p = int(d["p"])
            m = int(d["m"])
        except (KeyError, ValueError):
            raise UsageException("Invalid field spec, buf={0}".format(buf))
        poly = d.get("poly")
        return FieldSpec(p, m, poly if poly else None)

    # ====================================
    # ELEMENT / COLUMN VIEWS
    # ====================================

    def coeffs_to_int(self, coeffs):
        """
        Pack coordinates into the galois integer representation
        :param coeffs: low-to-high coordinates
        :type coeffs: list,tuple
        :return: int
        :rtype: int
        """

        return int(sum(int(c) * (self.p ** i) for i, c in enumerate(coeffs)))

    def int_to_coeffs(self, v):
        """
        Unpack an integer into low-to-high coordinates
        :param v: int
        :type v: int
        :return: tuple
        :rtype: tuple
        """

        out = []
        v = int(v)
        for _ in range(self.m):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def elements_to_columns(self, arr):
        """
        Map GF(p^m) arrays (..., n) to GF(p) arrays (..., m, n), column j being the coordinates of entry j.
        :param arr: galois FieldArray
        :type arr: galois.FieldArray
        :return: np.ndarray int64
        :rtype: np.ndarray
        """

        ints = np.asarray(arr.view(np.ndarray), dtype=np.int64)
        # (..., n, m) low-to-high
        digits = (ints[..., None] // self._p_powers) % self.p
        return np.swapaxes(digits, -1, -2).astype(np.int64)

    def columns_to_elements(self, mat):
        """
        Inverse of elements_to_columns
        :param mat: array (..., m, n)
        :type mat: np.ndarray
        :return: galois FieldArray (..., n)
        :rtype: galois.FieldArray
        """

        mat = np.asarray(mat, dtype=np.int64)
        if mat.shape[-2] != self.m:
            raise UsageException("Row count mismatch, cur={0}, need={1}".format(mat.shape[-2], self.m))
        ints = np.tensordot(self._p_powers, mat % self.p, axes=([0], [mat.ndim - 2]))
        return self.gf(ints)

    def frobenius(self, arr, i, a_param=1):
        """
        Raise entries to the p^(a_param*i)-th power
        :param arr: galois FieldArray
        :type arr: galois.FieldArray
        :param i: exponent index
        :type i: int
        :param a_param: automorphism step, coprime to m
        :type a_param: int
        :return: galois FieldArray
        :rtype: galois.FieldArray
        """

        self.check_automorphism(a_param)
        return arr ** (self.p ** ((a_param * i) % self.m))

    def check_automorphism(self, a_param):
        """
        Check a_param is coprime to m
        :param a_param: int
        :type a_param: int
        """

        if gcd(a_param, self.m) != 1:
            raise UsageException("Automorphism step not coprime to m, a={0}, m={1}".format(a_param, self.m))

    def vec_to_matrix(self, v):
        """
        Map a vector of ExtElement to an m x n MatrixGF
        :param v: list of ExtElement
        :type v: list
        :return: MatrixGF
        :rtype: pysolrankcodes.LinAlg.MatrixGF.MatrixGF
        """

        from pysolrankcodes.LinAlg.MatrixGF import MatrixGF

        for e in v:
            if e.field_spec != self:
                raise UsageException("Field mismatch, cur={0}, need={1}".format(e.field_spec, self))
        if len(v) == 0:
            return MatrixGF.zeros(self.p, self.m, 0)
        cols = np.array([e.coeffs for e in v], dtype=np.int64).T
        return MatrixGF(self.p, cols)

    def matrix_to_vec(self, mat):
        """
        Map an m x n MatrixGF back to a list of n ExtElement
        :param mat: MatrixGF
        :type mat: pysolrankcodes.LinAlg.MatrixGF.MatrixGF
        :return: list of ExtElement
        :rtype: list
        """

        from pysolrankcodes.Gf.ExtElement import ExtElement

        if mat.p != self.p or mat.rows != self.m:
            raise UsageException("Matrix shape mismatch, rows={0}, p={1}, field={2}".format(mat.rows, mat.p, self))
        return [ExtElement(self, mat.entries[:, j].tolist()) for j in range(mat.cols)]

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return False
        return self.p == other.p and self.m == other.m and self.modulus_poly == other.modulus_poly

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus_poly))

    def __str__(self):
        return self.to_text()
