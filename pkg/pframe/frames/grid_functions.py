# -*- coding: utf-8 -*-
r"""
Piecewise constant functions on a grid
======================================

Let `N\geq 2` be an integer. For `k\geq 0` we denote by `\mathcal{F}_k` the
`N^k`-dimensional subspace of `L^2[0,1]` consisting of functions which are
constant on every cell

.. MATH::

    [b/N^k, (b+1)/N^k), \quad b = 0,\dots,N^k-1.

An element of `\mathcal{F}_k` is stored as the vector of its `N^k` values.
If `b=b_{k-1}+Nb_{k-2}+\dots+N^{k-1}b_0` then the cell with index `b` is the
cell whose points `x` satisfy `b_j = b(\mathcal{R}^j x)`, where `b(x)` is the
first base-`N` digit of `x` and `\mathcal{R}x = Nx \mod 1`. In other words,
`b_0` is the most significant digit. With this convention the shift
`\mathcal{R}` simply drops the leading digit.

Since `\mathcal{F}_k\subset\mathcal{F}_{k'}` for `k\leq k'`, a function can
always be *refined* to a finer level; every value is then repeated
`N^{k'-k}` times. Inner products of functions of different levels are
computed at the common refinement.

The dilation lives on the unit square. Given `N` and `N'`, the square is cut
into the rectangles

.. MATH::

    \Upsilon_{(b_1,b_1')}\circ\dots\circ\Upsilon_{(b_k,b_k')}([0,1]^2),
    \quad \Upsilon_{(b,b')}(x,x') = ((x+b)/N, (x'+b')/N').

We number the digit pair `(b,b')` by `p = bN'+b'` and the rectangle by the
base-`NN'` number `p_1p_2\dots p_k` (leading pair most significant). So a
function on the square at level `k` is again a vector of length `(NN')^k`,
and all grid operations are the one dimensional ones with base `Q=NN'`.

AUTHORS:

- The pframe developers (2026): initial version


EXAMPLES::

    >>> from pframe.frames.grid_functions import GridFunction1D, inner_product, refine
    >>> one = GridFunction1D.constant(2)
    >>> one
    piecewise constant function on [0,1] of base 2 and level 0
    >>> f = GridFunction1D(2, [1, 0])
    >>> inner_product(one, one)
    (1+0j)
    >>> inner_product(f, f)
    (0.5+0j)
    >>> refine(f, 2).coefficients().real.tolist()
    [1.0, 1.0, 0.0, 0.0]

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

import numpy as np

from pframe.errors import BaseMismatch, LevelDecrease


def level_of_length(base, length):
    r"""
    Return `k` with `base^k = length`, or raise ``ValueError``.

    EXAMPLES::

        >>> from pframe.frames.grid_functions import level_of_length
        >>> level_of_length(3, 27)
        3
        >>> level_of_length(2, 6)
        Traceback (most recent call last):
        ...
        ValueError: 6 is not a power of 2

    """
    k = 0
    n = 1
    while n < length:
        n *= base
        k += 1
    if n != length:
        raise ValueError("%s is not a power of %s" % (length, base))
    return k


class GridFunction(object):
    r"""
    Base class of piecewise constant functions on a grid of branching `Q`.

    Subclasses fix the geometric meaning of the cells. Objects are immutable:
    the coefficient vector is copied and made read-only.

    INPUT:

    - ``branching`` -- the number `Q\geq 2` of subcells of a cell
    - ``coeffs`` -- a vector of complex numbers of length `Q^k`
    - ``level`` -- the level `k`, or ``None`` (default), in which case it is
      computed from the length of ``coeffs``

    """

    # numpy scalars defer to our reflected operators
    __array_ufunc__ = None

    def __init__(self, branching, coeffs, level=None):
        coeffs = np.array(coeffs, dtype=complex).reshape(-1)
        assert branching >= 2, "the branching must be at least 2"
        if level is None:
            level = level_of_length(branching, len(coeffs))
        assert level >= 0, "the level must be nonnegative"
        if len(coeffs) != branching**level:
            raise ValueError("a function of level %s needs %s coefficients, not %s"
                             % (level, branching**level, len(coeffs)))
        coeffs.flags.writeable = False
        self._branching = int(branching)
        self._level = int(level)
        self._coeffs = coeffs

    def branching(self):
        r""" Return the number of subcells of each cell. """
        return self._branching

    def level(self):
        return self._level

    def coefficients(self):
        r"""
        Return the (read-only) vector of values on the cells.
        """
        return self._coeffs

    def cell_measure(self):
        r""" Return the Lebesgue measure of one cell. """
        return float(self._branching)**(-self._level)

    def _same_kind(self, other):
        r"""
        Raise ``BaseMismatch`` unless ``other`` lives on the same grid.
        """
        if type(self) is not type(other) or self._grid_key() != other._grid_key():
            raise BaseMismatch("cannot combine %s with %s" % (self, other))

    def _grid_key(self):
        return self._branching

    def _new(self, coeffs, level):
        raise NotImplementedError

    def refine(self, level):
        r"""
        Return the same function, represented at the finer level ``level``.

        Each value is repeated `Q^{k'-k}` times in digit order. Raises
        ``LevelDecrease`` if ``level`` is smaller than the current level.

        """
        if level < self._level:
            raise LevelDecrease("cannot refine a function of level %s to level %s"
                                % (self._level, level))
        if level == self._level:
            return self
        repeats = self._branching**(level - self._level)
        return self._new(np.repeat(self._coeffs, repeats), level)

    def inner_product(self, other):
        r"""
        Return the `L^2` inner product `\langle f, g\rangle`.

        It is linear in the first and conjugate linear in the second argument.

        """
        self._same_kind(other)
        k = max(self._level, other._level)
        f = self.refine(k)._coeffs
        g = other.refine(k)._coeffs
        return complex(np.vdot(g, f)) * float(self._branching)**(-k)

    def norm(self):
        r""" Return the `L^2` norm. """
        return float(np.sqrt(np.sum(np.abs(self._coeffs)**2) * self.cell_measure()))

    def distance(self, other):
        r""" Return the `L^2` distance to ``other``. """
        return (self - other).norm()

    def is_close(self, other, tolerance=1e-14):
        r"""
        Return whether the coefficients agree up to ``tolerance`` at the
        common level.
        """
        self._same_kind(other)
        k = max(self._level, other._level)
        diff = self.refine(k)._coeffs - other.refine(k)._coeffs
        return bool(np.max(np.abs(diff)) <= tolerance)

    def _combine(self, other, op):
        self._same_kind(other)
        k = max(self._level, other._level)
        return self._new(op(self.refine(k)._coeffs, other.refine(k)._coeffs), k)

    def __add__(self, other):
        return self._combine(other, np.add)

    def __sub__(self, other):
        return self._combine(other, np.subtract)

    def __neg__(self):
        return self._new(-self._coeffs, self._level)

    def __mul__(self, c):
        if isinstance(c, GridFunction):
            return self._combine(c, np.multiply)
        return self._new(complex(c) * self._coeffs, self._level)

    __rmul__ = __mul__

    def conjugate(self):
        return self._new(np.conj(self._coeffs), self._level)


class GridFunction1D(GridFunction):
    r"""
    Return the piecewise constant function on `[0,1]` with the given values.

    INPUT:

    - ``base`` -- an integer `N\geq 2`
    - ``coeffs`` -- a vector of `N^k` complex numbers; entry `b` is the value
      on the cell `[b/N^k,(b+1)/N^k)`
    - ``level`` -- the level `k`, or ``None`` (default: ``None``)

    OUTPUT: the element of `\mathcal{F}_k` with the given values.

    EXAMPLES::

        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> f = GridFunction1D(3, [1, 2, 3, 4, 5, 6, 7, 8, 9])
        >>> f.base(), f.level()
        (3, 2)
        >>> GridFunction1D(3, [1, 2])
        Traceback (most recent call last):
        ...
        ValueError: 2 is not a power of 3
        >>> f.coefficients()[0] = 5
        Traceback (most recent call last):
        ...
        ValueError: assignment destination is read-only

    TESTS::

        >>> import numpy as np
        >>> rng = np.random.default_rng(3)
        >>> ok = True
        >>> for _ in range(20):
        ...     f = GridFunction1D.random(3, 2, rng)
        ...     g = GridFunction1D.random(3, 3, rng)
        ...     ok = ok and abs(f.inner_product(g) - g.inner_product(f).conjugate()) < 1e-12
        ...     ok = ok and f.inner_product(f).real > 0 and abs(f.inner_product(f).imag) < 1e-14
        ...     ok = ok and abs(f.refine(5).inner_product(g) - f.inner_product(g)) < 1e-12
        >>> ok
        True

    """

    def __init__(self, base, coeffs, level=None):
        GridFunction.__init__(self, base, coeffs, level)

    def __repr__(self):
        return "piecewise constant function on [0,1] of base %s and level %s" % (
            self._branching, self._level)

    def _new(self, coeffs, level):
        return GridFunction1D(self._branching, coeffs, level)

    def base(self):
        r""" Return the base `N`. """
        return self._branching

    @classmethod
    def constant(cls, base, value=1):
        r"""
        Return the constant function ``value`` at level `0`.
        """
        return cls(base, [value], 0)

    @classmethod
    def zero(cls, base, level=0):
        return cls(base, np.zeros(base**level), level)

    @classmethod
    def indicator(cls, base, level, b):
        r"""
        Return the characteristic function of the cell `[b/N^k,(b+1)/N^k)`.
        """
        coeffs = np.zeros(base**level, dtype=complex)
        coeffs[b] = 1
        return cls(base, coeffs, level)

    @classmethod
    def basis(cls, base, level):
        r"""
        Return the orthonormal basis `N^{k/2}\chi_b` of `\mathcal{F}_k`.

        EXAMPLES::

            >>> from pframe.frames.grid_functions import GridFunction1D
            >>> E = GridFunction1D.basis(2, 2)
            >>> len(E), [round(e.norm(), 12) for e in E]
            (4, [1.0, 1.0, 1.0, 1.0])

        """
        scale = np.sqrt(float(base)**level)
        return [scale * cls.indicator(base, level, b) for b in range(base**level)]

    @classmethod
    def random(cls, base, level, rng):
        r"""
        Return a function with standard complex Gaussian values.

        INPUT:

        - ``rng`` -- a ``numpy.random.Generator``

        """
        n = base**level
        return cls(base, rng.standard_normal(n) + 1j * rng.standard_normal(n), level)

    def __call__(self, x):
        r"""
        Return the value at the point `x\in[0,1]`.

        The point `x=1` belongs to the last cell.

        EXAMPLES::

            >>> from pframe.frames.grid_functions import GridFunction1D
            >>> f = GridFunction1D(2, [1, 2, 3, 4])
            >>> f(0.3), f(0.99), f(1)
            ((2+0j), (4+0j), (4+0j))

        TESTS::

            >>> f(-0.1)
            Traceback (most recent call last):
            ...
            AssertionError: x = -0.1 does not lie in [0,1]

        """
        assert 0 <= x <= 1, "x = %s does not lie in [0,1]" % x
        n = len(self._coeffs)
        b = min(int(np.floor(x * n)), n - 1)
        return complex(self._coeffs[b])


class GridFunction2D(GridFunction):
    r"""
    Return the piecewise constant function on `[0,1]^2` with the given values.

    INPUT:

    - ``bases`` -- a pair `(N,N')` of positive integers with `NN'\geq 2`
    - ``coeffs`` -- a vector of `(NN')^k` complex numbers
    - ``level`` -- the level `k`, or ``None`` (default: ``None``)

    The entry with index `p_1\cdots p_k` (in base `NN'`, `p_j=b_jN'+b_j'`) is the
    value on the rectangle
    `\Upsilon_{(b_1,b_1')}\circ\dots\circ\Upsilon_{(b_k,b_k')}([0,1]^2)`.

    EXAMPLES::

        >>> from pframe.frames.grid_functions import GridFunction2D
        >>> F = GridFunction2D((2, 2), range(16))
        >>> F
        piecewise constant function on [0,1]^2 of bases (2, 2) and level 2
        >>> F.value_at(0.6, 0.1), F.value_at(0.3, 0.9)
        ((8+0j), (7+0j))

    """

    def __init__(self, bases, coeffs, level=None):
        N, Nprime = (int(bases[0]), int(bases[1]))
        assert N >= 1 and Nprime >= 1, "the bases must be positive"
        GridFunction.__init__(self, N * Nprime, coeffs, level)
        self._bases = (N, Nprime)

    def __repr__(self):
        return "piecewise constant function on [0,1]^2 of bases %s and level %s" % (
            self._bases, self._level)

    def _grid_key(self):
        return self._bases

    def _new(self, coeffs, level):
        return GridFunction2D(self._bases, coeffs, level)

    def bases(self):
        r""" Return the pair `(N,N')`. """
        return self._bases

    @classmethod
    def constant(cls, bases, value=1):
        return cls(bases, [value], 0)

    @classmethod
    def basis(cls, bases, level):
        r"""
        Return the orthonormal basis of normalized rectangle indicators.
        """
        Q = bases[0] * bases[1]
        scale = np.sqrt(float(Q)**level)
        result = []
        for p in range(Q**level):
            coeffs = np.zeros(Q**level, dtype=complex)
            coeffs[p] = scale
            result.append(cls(bases, coeffs, level))
        return result

    @classmethod
    def random(cls, bases, level, rng):
        n = (bases[0] * bases[1])**level
        return cls(bases, rng.standard_normal(n) + 1j * rng.standard_normal(n), level)

    def as_digit_array(self):
        r"""
        Return the values as an array with axes `(b_1,b_1',\dots,b_k,b_k')`.
        """
        N, Nprime = self._bases
        return self._coeffs.reshape((N, Nprime) * self._level)

    def value_at(self, x, xprime):
        r"""
        Return the value at the point `(x,x')\in[0,1]^2`.

        EXAMPLES::

            >>> from pframe.frames.grid_functions import GridFunction2D
            >>> F = GridFunction2D((2, 2), range(1, 17), 2)
            >>> F.value_at(0.3, 0.1), F.value_at(1, 1)
            ((3+0j), (16+0j))

        TESTS::

            >>> F.value_at(-0.3, 0.1)
            Traceback (most recent call last):
            ...
            AssertionError: (x, x') = (-0.3, 0.1) does not lie in [0,1]^2

        """
        assert 0 <= x <= 1 and 0 <= xprime <= 1, "(x, x') = (%s, %s) does not lie in [0,1]^2" % (x, xprime)
        N, Nprime = self._bases
        index = 0
        for _ in range(self._level):
            b = min(int(np.floor(N * x)), N - 1)
            bprime = min(int(np.floor(Nprime * xprime)), Nprime - 1)
            index = index * N * Nprime + b * Nprime + bprime
            x = N * x - b
            xprime = Nprime * xprime - bprime
        return complex(self._coeffs[index])


def inner_product(f, g):
    r"""
    Return the `L^2` inner product `\langle f,g\rangle` of two grid functions.

    INPUT:

    - ``f``, ``g`` -- grid functions of the same kind and base; the levels
      may differ

    OUTPUT: `N^{-k}\sum_b f_b\overline{g_b}`, computed at the common level
    `k=\max(level(f),level(g))`. Raises ``BaseMismatch`` if the bases differ.

    EXAMPLES::

        >>> from pframe.frames.grid_functions import GridFunction1D, inner_product
        >>> inner_product(GridFunction1D(2, [1j, 0]), GridFunction1D.constant(2))
        0.5j
        >>> inner_product(GridFunction1D(2, [1, 0]), GridFunction1D(3, [1, 0, 0]))
        Traceback (most recent call last):
        ...
        pframe.errors.BaseMismatch: cannot combine piecewise constant function on [0,1] of base 2 and level 1 with piecewise constant function on [0,1] of base 3 and level 1

    """
    return f.inner_product(g)


def refine(f, level):
    r"""
    Return ``f`` represented at the finer level ``level``.

    EXAMPLES::

        >>> from pframe.frames.grid_functions import GridFunction1D, refine
        >>> refine(GridFunction1D.constant(2), 2).coefficients().real.tolist()
        [1.0, 1.0, 1.0, 1.0]
        >>> refine(GridFunction1D(2, [1, 0]), 0)
        Traceback (most recent call last):
        ...
        pframe.errors.LevelDecrease: cannot refine a function of level 1 to level 0

    """
    return f.refine(level)


def norm(f):
    r""" Return the `L^2` norm of a grid function. """
    return f.norm()


def embed_V(g, Nprime):
    r"""
    Return the function `(x,x')\mapsto g(x)` on the unit square.

    INPUT:

    - ``g`` -- a function in `\mathcal{F}_k` of base `N`
    - ``Nprime`` -- a positive integer `N'`

    OUTPUT: the level `k` function on `[0,1]^2` of bases `(N,N')` which does
    not depend on the second coordinate. This identifies `L^2[0,1]` with the
    subspace `V` of the dilation space.

    EXAMPLES::

        >>> from pframe.frames.grid_functions import GridFunction1D, embed_V
        >>> G = embed_V(GridFunction1D(2, [1, -1]), 2)
        >>> G.coefficients().real.tolist()
        [1.0, 1.0, -1.0, -1.0]
        >>> abs(G.norm() - 1.0) < 1e-15
        True

    """
    N = g.base()
    k = g.level()
    # an axis of length N' after every x-digit
    values = g.coefficients().reshape((N, 1) * k)
    values = np.broadcast_to(values, (N, Nprime) * k)
    return GridFunction2D((N, Nprime), values.reshape(-1), k)


def step_breakpoints(f):
    r"""
    Return plot-ready step data of a function on `[0,1]`.

    OUTPUT: a list of tuples `(x_0, x_1, re, im)`, one per maximal interval
    on which ``f`` is constant.

    EXAMPLES::

        >>> from pframe.frames.grid_functions import GridFunction1D, step_breakpoints
        >>> step_breakpoints(GridFunction1D(2, [1, 1, 0, 2]))
        [(0.0, 0.5, 1.0, 0.0), (0.5, 0.75, 0.0, 0.0), (0.75, 1.0, 2.0, 0.0)]

    """
    coeffs = f.coefficients()
    n = len(coeffs)
    steps = []
    start = 0
    for b in range(1, n + 1):
        if b == n or coeffs[b] != coeffs[start]:
            value = coeffs[start]
            steps.append((start / float(n), b / float(n), float(value.real), float(value.imag)))
            start = b
    return steps
