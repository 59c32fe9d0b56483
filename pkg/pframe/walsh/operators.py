# -*- coding: utf-8 -*-
r"""
The operators `\tilde S_l` on piecewise constant functions
=========================================================

Let `\alpha` be a valid frame matrix with `M` rows and `N` columns (see
:mod:`pframe.frames.frame_matrices`). For `l=0,\dots,M-1` we define the
operator

.. MATH::

    (\tilde S_l f)(x) = m_l(x)\,f(Nx \mod 1)

on `L^2[0,1]`, where `m_l` is the filter with value `\alpha_{l,j}` on
`[j/N,(j+1)/N)`. Its adjoint is

.. MATH::

    (\tilde S_l^* g)(x) = \frac{1}{N}\sum_{b=0}^{N-1}\overline{\alpha_{l,b}}\,
    g\left(\frac{x+b}{N}\right).

On grid functions (see :mod:`pframe.frames.grid_functions`) these operators
are very simple. The operator `\tilde S_l` maps `\mathcal{F}_k` to
`\mathcal{F}_{k+1}`: the value of `\tilde S_l f` on the cell with digits
`(d_0,d_1,\dots,d_k)` is `\alpha_{l,d_0}` times the value of `f` on the cell
`(d_1,\dots,d_k)`. So the coefficient vector of `\tilde S_l f` is the
Kronecker product of the row `\alpha_{l,\cdot}` with the coefficient vector
of `f`. The adjoint maps `\mathcal{F}_k` to `\mathcal{F}_{k-1}` by
contracting the leading digit against `\overline{\alpha_{l,\cdot}}/N`.

The operators are not isometries in general, but they satisfy

.. MATH::

    \sum_{l=0}^{M-1}\tilde S_l\tilde S_l^* = I,

which is checked numerically by :func:`resolution_of_identity_check`.

The same two formulas, with `N` replaced by `Q` and `\alpha` by any `Q`
column array, also give the dilated operators of
:mod:`pframe.dilation.cuntz_operators`; they are implemented once here, in
:func:`shift_multiply` and :func:`shift_average`.

EXAMPLES::

    >>> from pframe.frames.frame_matrices import walsh_matrix
    >>> from pframe.frames.grid_functions import GridFunction1D
    >>> from pframe.walsh.operators import apply_S, apply_S_adjoint
    >>> W = walsh_matrix()
    >>> one = GridFunction1D.constant(2)
    >>> apply_S(W, 0, one).coefficients().real.tolist()
    [1.0, 1.0]
    >>> f = apply_S(W, 1, one)
    >>> f.coefficients().real.tolist()
    [1.0, -1.0]
    >>> apply_S(W, 1, f).coefficients().real.tolist()
    [1.0, -1.0, -1.0, 1.0]
    >>> apply_S_adjoint(W, 1, f).coefficients().real.tolist()
    [1.0]

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

import logging

import numpy as np

from pframe.errors import BaseMismatch, DigitOutOfRange
from pframe.frames.grid_functions import GridFunction1D

logger = logging.getLogger(__name__)


def shift_multiply(row, coeffs):
    r"""
    Return the coefficients of `x\mapsto m(x)f(\mathcal{R}x)`.

    INPUT:

    - ``row`` -- the `Q` values of the filter `m` on the cells of level `1`
    - ``coeffs`` -- the coefficients of `f` at some level `k`

    OUTPUT: the coefficients of the result at level `k+1`, i.e. the Kronecker
    product of ``row`` and ``coeffs``.

    """
    return np.kron(row, coeffs)


def shift_average(row, coeffs):
    r"""
    Return the coefficients of `x\mapsto\frac{1}{Q}\sum_b\overline{m_b}f((x+b)/Q)`.

    INPUT:

    - ``row`` -- the `Q` values of the filter `m`
    - ``coeffs`` -- the coefficients of `f` at some level `k\geq 1`

    OUTPUT: the coefficients of the result at level `k-1`.

    """
    Q = len(row)
    return np.conj(row) @ coeffs.reshape(Q, -1) / Q


def _check_digit(matrix, l):
    if not 0 <= l < matrix.M():
        raise DigitOutOfRange("digit %s is not in {0,...,%s}" % (l, matrix.M() - 1))


def _check_base(matrix, f):
    if not isinstance(f, GridFunction1D) or f.base() != matrix.N():
        raise BaseMismatch("%s does not have base N=%s" % (f, matrix.N()))


def apply_S(matrix, l, f):
    r"""
    Return `\tilde S_l f`.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix`` with `M` rows and `N` columns
    - ``l`` -- a digit in `\{0,\dots,M-1\}`
    - ``f`` -- a ``GridFunction1D`` of base `N`

    OUTPUT: the function `\tilde S_lf`, of level one more than ``f``.

    Raises ``DigitOutOfRange`` if `l` is not a valid row index.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.walsh.operators import apply_S
        >>> r = 1/np.sqrt(2)
        >>> A = FrameMatrix([[1, 1], [r, -r], [r, -r]])
        >>> one = GridFunction1D.constant(2)
        >>> apply_S(A, 0, one).is_close(one)
        True
        >>> apply_S(A, 3, one)
        Traceback (most recent call last):
        ...
        pframe.errors.DigitOutOfRange: digit 3 is not in {0,...,2}

    """
    _check_digit(matrix, l)
    _check_base(matrix, f)
    return GridFunction1D(matrix.N(), shift_multiply(matrix.row(l), f.coefficients()), f.level() + 1)


def apply_S_adjoint(matrix, l, g):
    r"""
    Return `\tilde S_l^* g`.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix`` with `M` rows and `N` columns
    - ``l`` -- a digit in `\{0,\dots,M-1\}`
    - ``g`` -- a ``GridFunction1D`` of base `N`

    OUTPUT: the function `\tilde S_l^*g`, of level `\max(k-1,0)` if `g` has
    level `k`. The value on the cell `(d_1,\dots,d_{k-1})` is
    `\frac{1}{N}\sum_b\overline{\alpha_{l,b}}` times the value of `g` on the
    cell `(b,d_1,\dots,d_{k-1})`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.walsh.operators import apply_S, apply_S_adjoint
        >>> rng = np.random.default_rng(7)
        >>> A = random_frame_matrix(3, 5, rng)
        >>> one = GridFunction1D.constant(3)
        >>> apply_S_adjoint(A, 0, one).is_close(one)
        True

    Adjointness with respect to the `L^2` inner product, for random
    functions of mixed levels::

        >>> ok = True
        >>> for _ in range(10):
        ...     f = GridFunction1D.random(3, int(rng.integers(0, 3)), rng)
        ...     g = GridFunction1D.random(3, int(rng.integers(0, 4)), rng)
        ...     for l in range(5):
        ...         lhs = apply_S(A, l, f).inner_product(g)
        ...         rhs = f.inner_product(apply_S_adjoint(A, l, g))
        ...         ok = ok and abs(lhs - rhs) < 1e-12
        >>> ok
        True

    """
    _check_digit(matrix, l)
    _check_base(matrix, g)
    if g.level() == 0:
        g = g.refine(1)
    return GridFunction1D(matrix.N(), shift_average(matrix.row(l), g.coefficients()), g.level() - 1)


def apply_word(matrix, word, f):
    r"""
    Return `\tilde S_{\omega_1}\cdots\tilde S_{\omega_n}f`.

    The operators are applied from right to left.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import walsh_matrix
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.walsh.operators import apply_word
        >>> apply_word(walsh_matrix(), (1, 1), GridFunction1D.constant(2)).coefficients().real.tolist()
        [1.0, -1.0, -1.0, 1.0]

    """
    for l in reversed(tuple(word)):
        f = apply_S(matrix, l, f)
    return f


def resolution_of_identity_check(matrix, k):
    r"""
    Return the deviation of `\sum_l\tilde S_l\tilde S_l^*` from the identity on `\mathcal{F}_k`.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix``
    - ``k`` -- a positive integer

    OUTPUT: the maximum, over the orthonormal basis `N^{k/2}\chi_b` of
    `\mathcal{F}_k`, of `\|\sum_l\tilde S_l\tilde S_l^*e - e\|`. This is
    tiny for valid matrices.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
        >>> from pframe.walsh.operators import resolution_of_identity_check
        >>> resolution_of_identity_check(walsh_matrix(), 3) < 1e-12
        True
        >>> r = 1/np.sqrt(2)
        >>> A = FrameMatrix([[1, 1], [r, -r], [r, -r]])
        >>> all(resolution_of_identity_check(A, k) < 1e-10 for k in (1, 2, 3))
        True
        >>> resolution_of_identity_check(FrameMatrix([[1, 1], [1, 1]]), 1) >= 0.5
        True

    TESTS::

        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> rng = np.random.default_rng(12)
        >>> all(resolution_of_identity_check(random_frame_matrix(int(rng.integers(2, 5)), 7, rng), k) < 1e-10
        ...     for _ in range(20) for k in (1, 2, 3))
        True

    """
    assert k >= 1, "the level must be positive"
    N = matrix.N()
    deviation = 0.0
    for e in GridFunction1D.basis(N, k):
        total = GridFunction1D.zero(N, k)
        for l in range(matrix.M()):
            total = total + apply_S(matrix, l, apply_S_adjoint(matrix, l, e))
        deviation = max(deviation, total.distance(e))
    logger.info("resolution of identity at level %s: deviation %.3e", k, deviation)
    return deviation
