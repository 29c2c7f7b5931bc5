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


class RankCodeException(Exception):
    """
    Base exception
    """
    pass


class UsageException(RankCodeException):
    """
    Raised on precondition / parameter violations
    """
    pass


class CapacityException(RankCodeException):
    """
    Raised when an enumeration or search budget is exceeded.
    The message always names the cap.
    """

    def __init__(self, what, cur, cap):
        """
        Constructor
        :param what: budget name
        :type what: str
        :param cur: requested amount
        :type cur: int
        :param cap: configured cap
        :type cap: int
        """

        super(CapacityException, self).__init__("{0} budget exceeded, cur={1}, max={2}".format(what, cur, cap))
        self.what = what
        self.cur = cur
        self.cap = cap


class VerificationException(RankCodeException):
    """
    Raised when a recomputed claim does not match
    """
    pass
