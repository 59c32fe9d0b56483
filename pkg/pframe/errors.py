# -*- coding: utf-8 -*-
r"""
Exceptions raised by pframe
===========================

All exceptions derive from ``PframeError``. Errors caused by bad input also
derive from ``ValueError``, so callers that only care about "bad input" can
catch that.

EXAMPLES::

    >>> from pframe.errors import BaseMismatch, PframeError
    >>> issubclass(BaseMismatch, PframeError) and issubclass(BaseMismatch, ValueError)
    True

"""

#*****************************************************************************
#       Copyright (C) 2026 The pframe developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#                  https://www.gnu.org/licenses/
#*****************************************************************************


class PframeError(Exception):
    r""" Base class of all errors raised by this package. """


class NotParsevalInput(PframeError, ValueError):
    r""" The rows of a matrix do not form a Parseval frame. """


class BaseMismatch(PframeError, ValueError):
    r""" Two grid functions (or a grid function and a matrix) have different bases. """


class LevelDecrease(PframeError, ValueError):
    r""" A grid function was asked to refine to a coarser level. """


class DigitOutOfRange(PframeError, ValueError):
    r""" A digit is not in the alphabet `\{0,\dots,M-1\}`. """


class IndexOutOfRange(PframeError, ValueError):
    r""" A pair `(b,b')` does not lie in `B\times B'`. """


class InvalidSource(PframeError, ValueError):
    r""" A dilation was requested for a matrix which does not pass validation. """


class NonCanonicalWord(PframeError, ValueError):
    r""" A word ending in `0` was used where a canonical word is required. """


class FormatError(PframeError, ValueError):
    r""" A file could not be parsed; the message names the offending field. """


class ConfigurationError(PframeError):
    r""" An option or environment variable has an unusable value. """


class CompletionFailure(PframeError, ArithmeticError):
    r""" Gram-Schmidt did not find enough independent completion vectors. """
