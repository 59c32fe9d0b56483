# -*- coding: utf-8 -*-
r"""
Dilation of a frame matrix to a unitary matrix
==============================================

Let `\alpha` be a valid frame matrix with `M` rows and `N` columns. In this
module we dilate the isometry `T=\alpha/\sqrt{N}` to a unitary matrix of a
special form. The result is used in :mod:`pframe.dilation.cuntz_operators`
to define Cuntz isometries on `L^2([0,1]\times[0,1])` which compress to the
operators `\tilde S_l` on `L^2[0,1]`.

Choose `N'` with `NN'\geq M` and put `B=\{0,\dots,N-1\}`,
`B'=\{0,\dots,N'-1\}`. We embed the row indices `L=\{0,\dots,M-1\}` into
`B\times B'` by an injective map `\iota` with `\iota(0)=(0,0)`, and put
`\alpha_{(b,b'),c}=\alpha_{l,c}` if `(b,b')=\iota(l)`, and `0` otherwise.
We are looking for numbers `a_{(b,b'),(c,c')}` such that

(i) the matrix `\frac{1}{\sqrt{NN'}}(a_{(b,b'),(c,c')})` is unitary and
    `a_{(0,0),(c,c')}=1` for all `(c,c')`, and

(ii) `\frac{1}{N'}\sum_{c'}a_{(b,b'),(c,c')}=\alpha_{(b,b'),c}` for all
     `(b,b')` and `c`.

They are constructed as follows:

1. The vectors `t_{\cdot,c}=(\alpha_{(b,b'),c}/\sqrt{N})_{(b,b')}`,
   `c\in B`, are orthonormal in `\mathbb{C}^{NN'}`. We complete them to an
   orthonormal basis by vectors `t_{\cdot,d}`. Since `t_{(0,0),\cdot}` is
   already a unit vector, `t_{(0,0),d}=0`.
2. The vectors `\tilde e_c(c_1,c_1')=\delta_{c,c_1}/\sqrt{N'}`, `c\in B`, are
   orthonormal in `\mathbb{C}^{B\times B'}`. We complete them to an
   orthonormal basis by vectors `\tilde e_d`.
3. We put `s_{(b,b')}=\sum_c t_{(b,b'),c}\tilde e_c+\sum_d t_{(b,b'),d}\tilde e_d`
   and `a_{(b,b'),(c,c')}=\sqrt{NN'}\,s_{(b,b')}(c,c')`.

The rows `s_{(b,b')}` are an orthonormal basis, and summing over `c'` kills
every `\tilde e_d`, which gives (i) and (ii).

We make the choices deterministic: `N'=\lceil M/N\rceil`,
`\iota(l)=(l\bmod N,\lfloor l/N\rfloor)`, and both completions are computed
by :func:`pframe.frames.frame_matrices.orthonormal_completion`. Different
completions give different, equally valid, matrices `a`.

A pair `(b,b')` is stored as the single index `bN'+b'`, so `(0,0)` is `0`.

AUTHORS:

- The pframe developers (2026): initial version


EXAMPLES::

    >>> import numpy as np
    >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
    >>> from pframe.dilation.dilation_systems import build_dilation
    >>> D = build_dilation(walsh_matrix())
    >>> D
    dilation with N'=1 of frame matrix with M=2 rows and N=2 columns
    >>> bool(np.allclose(D.a_matrix(), [[1, 1], [1, -1]], rtol=0, atol=1e-15))
    True

    >>> r = 1/np.sqrt(2)
    >>> D = build_dilation(FrameMatrix([[1, 1], [r, -r], [r, -r]]))
    >>> D.Nprime(), D.iota()
    (2, [(0, 0), (1, 0), (0, 1)])
    >>> D.a_matrix().shape
    (4, 4)
    >>> D.condition_i_defect() < 1e-12 and D.condition_ii_defect() < 1e-12
    True
    >>> bool(np.allclose(D.alpha_padded()[3], 0))
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

import logging

import numpy as np

from pframe.config import resolve_tolerance
from pframe.errors import ConfigurationError, IndexOutOfRange, InvalidSource
from pframe.frames.frame_matrices import orthonormal_completion, validate

logger = logging.getLogger(__name__)


def _readonly(array):
    array = np.array(array, dtype=complex)
    array.flags.writeable = False
    return array


class DilationSystem(object):
    r"""
    Return the dilation data of a frame matrix.

    Objects of this class are normally created by :func:`build_dilation`.

    INPUT:

    - ``source`` -- a valid ``FrameMatrix`` with `M` rows and `N` columns
    - ``Nprime`` -- a positive integer `N'` with `NN'\geq M`
    - ``t_vectors`` -- the `NN'\times N` array with columns `t_{\cdot,c}`
    - ``t_completion`` -- the `NN'\times(NN'-N)` array with columns `t_{\cdot,d}`
    - ``e_vectors`` -- the `NN'\times N` array with columns `\tilde e_c`
    - ``e_completion`` -- the `NN'\times(NN'-N)` array with columns `\tilde e_d`
    - ``a_matrix`` -- the `NN'\times NN'` array `a`
    - ``tolerance`` -- a nonnegative real number, or ``None``

    Rows of ``t_vectors`` and ``a_matrix``, and the entries of the vectors
    `\tilde e`, are indexed by `bN'+b'`.

    """

    def __init__(self, source, Nprime, t_vectors, t_completion, e_vectors, e_completion,
                 a_matrix, tolerance=None):
        N = source.N()
        Q = N * Nprime
        assert Q >= source.M(), "we need N*N' >= M"
        self._source = source
        self._Nprime = int(Nprime)
        self._t_vectors = _readonly(t_vectors)
        self._t_completion = _readonly(t_completion)
        self._e_vectors = _readonly(e_vectors)
        self._e_completion = _readonly(e_completion)
        self._a_matrix = _readonly(a_matrix)
        assert self._a_matrix.shape == (Q, Q), "a must be a square matrix of size N*N'"
        self._tolerance = resolve_tolerance(tolerance if tolerance is not None else source.tolerance())
        self._iota = [self.pair(self.embedding_index(l)) for l in range(source.M())]

    def __repr__(self):
        return "dilation with N'=%s of %s" % (self._Nprime, self._source)

    def source(self):
        r""" Return the frame matrix which is dilated. """
        return self._source

    def N(self):
        return self._source.N()

    def Nprime(self):
        return self._Nprime

    def M(self):
        return self._source.M()

    def size(self):
        r""" Return `NN'`, the number of letters of the dilated alphabet. """
        return self._source.N() * self._Nprime

    def bases(self):
        r""" Return the pair `(N,N')` of the dilation space. """
        return (self._source.N(), self._Nprime)

    def tolerance(self):
        return self._tolerance

    def t_vectors(self):
        return self._t_vectors

    def t_completion(self):
        return self._t_completion

    def e_vectors(self):
        return self._e_vectors

    def e_completion(self):
        return self._e_completion

    def a_matrix(self):
        r""" Return the (read-only) matrix `a`. """
        return self._a_matrix

    def pair_index(self, b, bprime):
        r"""
        Return the index `bN'+b'` of the pair `(b,b')`.

        Raises ``IndexOutOfRange`` unless `(b,b')\in B\times B'`.

        EXAMPLES::

            >>> from pframe.frames.frame_matrices import walsh_matrix
            >>> from pframe.dilation.dilation_systems import build_dilation
            >>> D = build_dilation(walsh_matrix(), 2)
            >>> D.pair_index(1, 1), D.pair(3)
            (3, (1, 1))
            >>> D.pair_index(2, 0)
            Traceback (most recent call last):
            ...
            pframe.errors.IndexOutOfRange: (2, 0) is not in {0,...,1} x {0,...,1}

        """
        N, Nprime = self.bases()
        if not (0 <= b < N and 0 <= bprime < Nprime):
            raise IndexOutOfRange("(%s, %s) is not in {0,...,%s} x {0,...,%s}"
                                  % (b, bprime, N - 1, Nprime - 1))
        return int(b) * Nprime + int(bprime)

    def pair(self, p):
        r""" Return the pair `(b,b')` with index `p`. """
        if not 0 <= p < self.size():
            raise IndexOutOfRange("%s is not the index of a pair in {0,...,%s}" % (p, self.size() - 1))
        return divmod(int(p), self._Nprime)

    def index(self, idx):
        r"""
        Return the index of ``idx``, which is a pair `(b,b')` or already an index.
        """
        if isinstance(idx, (tuple, list)):
            assert len(idx) == 2, "a pair must have two entries"
            return self.pair_index(idx[0], idx[1])
        idx = int(idx)
        self.pair(idx)
        return idx

    def embedding_index(self, l):
        r"""
        Return the index of `\iota(l)=(l\bmod N,\lfloor l/N\rfloor)`.
        """
        N = self._source.N()
        return (l % N) * self._Nprime + l // N

    def iota(self):
        r""" Return the list of pairs `\iota(0),\dots,\iota(M-1)`. """
        return list(self._iota)

    def preimage(self, p):
        r"""
        Return `l` with `\iota(l)` of index `p`, or ``None`` if there is none.
        """
        N = self._source.N()
        b, bprime = self.pair(p)
        l = bprime * N + b
        return l if l < self._source.M() else None

    def alpha_padded(self):
        r"""
        Return the `NN'\times N` array `\alpha_{(b,b'),c}`.

        Row `\iota(l)` is `\alpha_{l,\cdot}`; the rows of pairs outside
        `\iota(L)` are zero.
        """
        alpha = self._source.alpha()
        padded = np.zeros((self.size(), self.N()), dtype=complex)
        for l in range(self.M()):
            padded[self.embedding_index(l)] = alpha[l]
        return padded

    def with_a_matrix(self, a_matrix):
        r"""
        Return a copy of this system with the matrix `a` replaced.

        This is used to measure how the checks react to a wrong matrix `a`.
        """
        return DilationSystem(self._source, self._Nprime, self._t_vectors, self._t_completion,
                              self._e_vectors, self._e_completion, a_matrix, self._tolerance)

    def condition_i_defect(self):
        r"""
        Return the deviation from condition (i).

        OUTPUT: the maximum of the entries of `|\frac{1}{NN'}aa^*-I|` and of
        `|a_{(0,0),(c,c')}-1|`.
        """
        a = self._a_matrix
        Q = self.size()
        unitarity = np.max(np.abs(a @ a.conj().T / Q - np.eye(Q)))
        first_row = np.max(np.abs(a[0] - 1))
        return float(max(unitarity, first_row))

    def condition_ii_defect(self):
        r"""
        Return `\max|\frac{1}{N'}\sum_{c'}a_{(b,b'),(c,c')}-\alpha_{(b,b'),c}|`.
        """
        N, Nprime = self.bases()
        averages = self._a_matrix.reshape(self.size(), N, Nprime).mean(axis=2)
        return float(np.max(np.abs(averages - self.alpha_padded())))

    def completion_defect(self):
        r"""
        Return how far the `t`-columns and the `\tilde e`-vectors are from
        orthonormal bases, together with `\max_d|t_{(0,0),d}|`.
        """
        Q = self.size()
        deviation = 0.0
        for U in (np.hstack([self._t_vectors, self._t_completion]),
                  np.hstack([self._e_vectors, self._e_completion])):
            deviation = max(deviation, float(np.max(np.abs(U.conj().T @ U - np.eye(Q)))))
        if self._t_completion.shape[1]:
            deviation = max(deviation, float(np.max(np.abs(self._t_completion[0]))))
        return deviation

    def defects(self):
        r"""
        Return a dictionary of the deviations of all invariants of the system.
        """
        return {"condition_i": self.condition_i_defect(),
                "condition_ii": self.condition_ii_defect(),
                "completion": self.completion_defect()}

    def is_valid(self, tolerance=None):
        r"""
        Return whether all invariants hold within the tolerance.
        """
        if tolerance is None:
            tolerance = self._tolerance
        return all(d <= tolerance for d in self.defects().values())


def minimal_nprime(M, N):
    r"""
    Return `\lceil M/N\rceil`, the smallest `N'\geq 1` with `NN'\geq M`.

    EXAMPLES::

        >>> from pframe.dilation.dilation_systems import minimal_nprime
        >>> minimal_nprime(3, 2), minimal_nprime(2, 2), minimal_nprime(8, 3)
        (2, 1, 3)

    """
    return max(1, -(-M // N))


def build_dilation(matrix, nprime=None, tolerance=None):
    r"""
    Return the dilation of a valid frame matrix.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix`` with `M` rows and `N` columns
    - ``nprime`` -- a positive integer `N'` with `NN'\geq M`, or ``None``
      (default), in which case `N'=\lceil M/N\rceil`
    - ``tolerance`` -- a nonnegative real number, or ``None`` (default), in
      which case the tolerance of ``matrix`` is used

    OUTPUT: the ``DilationSystem`` described in the module documentation.

    Raises ``InvalidSource`` if ``matrix`` does not pass validation, and
    ``ConfigurationError`` if `NN'<M`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> D = build_dilation(walsh_matrix(), nprime=3)
        >>> D.size(), D.is_valid()
        (6, True)
        >>> bool(np.allclose(D.a_matrix()[0], 1, rtol=0, atol=1e-14))
        True
        >>> r = 1/np.sqrt(2)
        >>> build_dilation(FrameMatrix([[1, 1], [r, -r], [r, -r]]), nprime=1)
        Traceback (most recent call last):
        ...
        pframe.errors.ConfigurationError: N*N' = 2 is smaller than M = 3
        >>> build_dilation(FrameMatrix([[1, 1], [1, 1]]))
        Traceback (most recent call last):
        ...
        pframe.errors.InvalidSource: cannot dilate an invalid matrix: isometry violated by 1.000e+00

    The construction is deterministic::

        >>> A = FrameMatrix([[1, 1], [r, -r], [r, -r]])
        >>> np.array_equal(build_dilation(A).a_matrix(), build_dilation(A).a_matrix())
        True

    TESTS:

    Conditions (i) and (ii), the completion and `t_{(0,0),d}=0`, for both
    seeds and for random matrices with `N\leq 4` and `M\leq 8`::

        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> rng = np.random.default_rng(77)
        >>> systems = [build_dilation(walsh_matrix()), build_dilation(A)]
        >>> for _ in range(20):
        ...     N = int(rng.integers(2, 5))
        ...     systems.append(build_dilation(random_frame_matrix(N, int(rng.integers(N, 9)), rng)))
        >>> max(max(D.defects().values()) for D in systems) < 1e-10
        True
        >>> all(D.a_matrix().shape == (D.size(), D.size()) and D.size() >= D.M() for D in systems)
        True

    """
    if tolerance is None:
        tolerance = matrix.tolerance()
    tolerance = resolve_tolerance(tolerance)
    report = validate(matrix, tolerance)
    if not report.is_valid():
        raise InvalidSource("cannot dilate an invalid matrix: %s"
                            % "; ".join(repr(v) for v in report))
    M, N = matrix.M(), matrix.N()
    if nprime is None:
        nprime = minimal_nprime(M, N)
    nprime = int(nprime)
    if nprime < 1 or N * nprime < M:
        raise ConfigurationError("N*N' = %s is smaller than M = %s" % (N * nprime, M))
    Q = N * nprime
    logger.debug("dilating a %sx%s frame matrix with N'=%s", M, N, nprime)

    # the isometry T, embedded into C^(B x B') by iota
    t_vectors = np.zeros((Q, N), dtype=complex)
    for l in range(M):
        t_vectors[(l % N) * nprime + l // N] = matrix.row(l) / np.sqrt(N)
    t_completion = orthonormal_completion(t_vectors)

    # e_c(c1, c1') = delta(c, c1)/sqrt(N')
    e_vectors = np.zeros((Q, N), dtype=complex)
    for c in range(N):
        e_vectors[c * nprime:(c + 1) * nprime, c] = 1 / np.sqrt(nprime)
    e_completion = orthonormal_completion(e_vectors)

    U_t = np.hstack([t_vectors, t_completion])
    U_e = np.hstack([e_vectors, e_completion])
    a_matrix = np.sqrt(Q) * (U_t @ U_e.T)
    system = DilationSystem(matrix, nprime, t_vectors, t_completion, e_vectors, e_completion,
                            a_matrix, tolerance)
    logger.debug("iota = %s", system.iota())
    return system
