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

from pysolrankcodes.Errors.RankCodeErrors import UsageException

logger = logging.getLogger(__name__)


class ExtElement(object):
    """
    Immutable element of GF(p^m), stored as low-to-high polynomial basis coordinates
    """

    def __init__(self, field_spec, coeffs):
        """
        Constructor
        :param field_spec: FieldSpec
        :type field_spec: pysolrankcodes.Gf.FieldSpec.FieldSpec
        :param coeffs: m residues mod p
        :type coeffs: list,tuple
        """

        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != field_spec.m:
            raise UsageException("Coordinate count mismatch, cur={0}, need={1}".format(len(coeffs), field_spec.m))
        for c in coeffs:
            if c < 0 or c >= field_spec.p:
                raise UsageException("Coordinate out of range, cur={0}, p={1}".format(c, field_spec.p))
        self.field_spec = field_spec
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, field_spec, v):
        """
        From galois integer representation
        :param field_spec: FieldSpec
        :type field_spec: pysolrankcodes.Gf.FieldSpec.FieldSpec
        :param v: int
        :type v: int
        :return: ExtElement
        :rtype: ExtElement
        """
        return ExtElement(field_spec, field_spec.int_to_coeffs(v))

    @classmethod
    def zero(cls, field_spec):
        return ExtElement(field_spec, [0] * field_spec.m)

    @classmethod
    def one(cls, field_spec):
        return cls.from_int(field_spec, 1)

    @classmethod
    def x_power(cls, field_spec, i):
        """
        x^i reduced by the modulus
        :param field_spec: FieldSpec
        :type field_spec: pysolrankcodes.Gf.FieldSpec.FieldSpec
        :param i: exponent
        :type i: int
        :return: ExtElement
        :rtype: ExtElement
        """

        if field_spec.m == 1:
            # Polynomial basis of GF(p) is {1}, x reduces to minus the constant term of the modulus
            root = (-field_spec.modulus_poly[0]) % field_spec.p
            return cls.from_int(field_spec, pow(root, i, field_spec.p))
        x = field_spec.gf(field_spec.p)
        return cls.from_int(field_spec, int(x ** i))

    def to_int(self):
        return self.field_spec.coeffs_to_int(self.coeffs)

    def to_galois(self):
        """
        As a galois scalar
        :return: galois FieldArray scalar
        :rtype: galois.FieldArray
        """
        return self.field_spec.gf(self.to_int())

    def _check(self, other):
        if not isinstance(other, ExtElement) or self.field_spec != other.field_spec:
            raise UsageException("Field mismatch, cur={0}, other={1}".format(
                self.field_spec, getattr(other, "field_spec", other)))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    # ====================================
    # ARITHMETIC
    # ====================================

    def add(self, other):
        """
        Coordinatewise sum mod p
        :param other: ExtElement
        :type other: ExtElement
        :return: ExtElement
        :rtype: ExtElement
        """

        self._check(other)
        p = self.field_spec.p
        return ExtElement(self.field_spec, [(a + b) % p for a, b in zip(self.coeffs, other.coeffs)])

    def sub(self, other):
        self._check(other)
        p = self.field_spec.p
        return ExtElement(self.field_spec, [(a - b) % p for a, b in zip(self.coeffs, other.coeffs)])

    def neg(self):
        p = self.field_spec.p
        return ExtElement(self.field_spec, [(-a) % p for a in self.coeffs])

    def mul(self, other):
        """
        Polynomial product reduced by the modulus
        :param other: ExtElement
        :type other: ExtElement
        :return: ExtElement
        :rtype: ExtElement
        """

        self._check(other)
        return ExtElement.from_int(self.field_spec, int(self.to_galois() * other.to_galois()))

    def inverse(self):
        """
        Multiplicative inverse
        :return: ExtElement
        :rtype: ExtElement
        """

        if self.is_zero():
            raise UsageException("Zero has no inverse, field={0}".format(self.field_spec))
        return ExtElement.from_int(self.field_spec, int(self.to_galois() ** -1))

    def pow(self, e):
        if e < 0:
            return self.inverse().pow(-e)
        return ExtElement.from_int(self.field_spec, int(self.to_galois() ** e))

    def frobenius_pow(self, i, a_param=1):
        """
        Raise to the p^(a_param*i)-th power
        :param i: exponent index
        :type i: int
        :param a_param: automorphism step, coprime to m
        :type a_param: int
        :return: ExtElement
        :rtype: ExtElement
        """

        self.field_spec.check_automorphism(a_param)
        e = self.field_spec.p ** ((a_param * i) % self.field_spec.m)
        return self.pow(e)

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other):
        return self.mul(other)

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return False
        return self.field_spec == other.field_spec and self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.field_spec, self.coeffs))

    def __str__(self):
        return "ExtElement(({0}) in {1})".format(",".join(str(c) for c in self.coeffs), self.field_spec)

    def __repr__(self):
        return self.__str__()
