# -*- coding: utf-8 -*-
r"""
Numerical defaults
==================

The tolerances used by the validators and checks, and the level cap of the
command line tool. The default tolerance can be changed globally with the
environment variable ``PFRAME_TOLERANCE``.

EXAMPLES::

    >>> import os
    >>> from pframe.config import default_tolerance, resolve_tolerance
    >>> _ = os.environ.pop("PFRAME_TOLERANCE", None)
    >>> default_tolerance()
    1e-10
    >>> os.environ["PFRAME_TOLERANCE"] = "1e-6"
    >>> default_tolerance()
    1e-06
    >>> resolve_tolerance(0.5)
    0.5
    >>> os.environ["PFRAME_TOLERANCE"] = "tiny"
    >>> default_tolerance()
    Traceback (most recent call last):
    ...
    pframe.errors.ConfigurationError: PFRAME_TOLERANCE must be a nonnegative number, not 'tiny'
    >>> del os.environ["PFRAME_TOLERANCE"]

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

import os

from pframe.errors import ConfigurationError

# identities involving Gram-Schmidt output
DEFAULT_TOLERANCE = 1e-10
# identities on exactly entered matrices
EXACT_TOLERANCE = 1e-12
# residual norm below which a Gram-Schmidt candidate is skipped
SKIP_THRESHOLD = 1e-8
# N^6 complex values per function
DEFAULT_MAX_LEVEL = 6

TOLERANCE_VARIABLE = "PFRAME_TOLERANCE"


def default_tolerance():
    r"""
    Return the global default tolerance.

    OUTPUT: the value of ``PFRAME_TOLERANCE`` if it is set, and
    ``DEFAULT_TOLERANCE`` otherwise.

    """
    value = os.environ.get(TOLERANCE_VARIABLE)
    if value is None or value.strip() == "":
        return DEFAULT_TOLERANCE
    try:
        tolerance = float(value)
    except ValueError:
        tolerance = -1.0
    if not tolerance >= 0:
        raise ConfigurationError("%s must be a nonnegative number, not %r"
                                 % (TOLERANCE_VARIABLE, value))
    return tolerance


def resolve_tolerance(tolerance):
    r"""
    Return ``tolerance``, or the global default if it is ``None``.
    """
    if tolerance is None:
        return default_tolerance()
    tolerance = float(tolerance)
    if not tolerance >= 0:
        raise ConfigurationError("tolerance must be nonnegative, not %r" % (tolerance,))
    return tolerance
