# -*- coding: utf-8 -*-
r"""
Isometry matrices with constant first row
=========================================

Let `M\geq N\geq 2`. We consider matrices

.. MATH::

    T = \frac{1}{\sqrt{N}}(\alpha_{i,j})_{i=0,\dots,M-1,\ j=0,\dots,N-1}

such that

1. `T^*T = I_N`, i.e. `T` is an isometry, and
2. `\alpha_{0,j} = 1` for all `j`, i.e. the first row of `T` is constant
   `1/\sqrt{N}`.

The first condition says that the columns of `T` are orthonormal in
`\mathbb{C}^M`, or equivalently that the rows of `T` form a Parseval frame
for `\mathbb{C}^N`. Such a matrix defines the filters

.. MATH::

    m_i(x) = \sum_{j=0}^{N-1}\alpha_{i,j}\chi_{[j/N,(j+1)/N)}(x)

and thereby the operators `\tilde S_i` of :mod:`pframe.walsh.operators`.

In this module we realize a class ``FrameMatrix`` for the array `\alpha`,
a validator which measures how far the two conditions are violated, and a
constructor of such matrices from Parseval frames of `\mathbb{C}^{N-1}`.

The construction rests on the following observation. Let `T_l` be the rows
of `T`, and assume that `T_0` is the constant vector `1/\sqrt{N}`. Then the
`T_l` form a Parseval frame for `\mathbb{C}^N` if and only if `T_l\perp T_0`
for `l\geq 1` and `T_1,\dots,T_{M-1}` form a Parseval frame of the orthogonal
complement `\langle T_0\rangle^\perp`. So we only have to choose an isometry
`\Psi:\mathbb{C}^{N-1}\to\langle T_0\rangle^\perp` and a Parseval frame
`e_1,\dots,e_{M-1}` of `\mathbb{C}^{N-1}`, and put `T_l=\Psi(e_l)`.

We fix `\Psi` once and for all: its columns are the vectors obtained by
completing `T_0` to an orthonormal basis of `\mathbb{C}^N` with modified
Gram-Schmidt, applied to the standard basis vectors in index order.

AUTHORS:

- The pframe developers (2026): initial version


EXAMPLES:

The classical Walsh seed is the `2\times 2` Hadamard matrix::

    >>> from pframe.frames.frame_matrices import FrameMatrix, validate
    >>> W = FrameMatrix([[1, 1], [1, -1]])
    >>> W
    frame matrix with M=2 rows and N=2 columns
    >>> validate(W)
    validation report: no violations

A redundant example with `N=2` and `M=3`::

    >>> import numpy as np
    >>> r = 1/np.sqrt(2)
    >>> A = FrameMatrix([[1, 1], [r, -r], [r, -r]])
    >>> A.is_valid()
    True

A rank one matrix is not an isometry::

    >>> report = validate(FrameMatrix([[1, 1], [1, 1]]))
    >>> report.conditions()
    ['isometry']
    >>> report.max_deviation()
    1.0

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

from pframe.config import EXACT_TOLERANCE, SKIP_THRESHOLD, resolve_tolerance
from pframe.errors import CompletionFailure, NotParsevalInput

logger = logging.getLogger(__name__)


class FrameMatrix(object):
    r"""
    Return the frame matrix with coefficients ``alpha``.

    INPUT:

    - ``alpha`` -- an `M\times N` array of complex numbers (nested lists are
      fine)
    - ``tolerance`` -- a nonnegative real number, or ``None`` (default), in
      which case the global default tolerance is used

    OUTPUT: the object representing `\alpha` and `T=\alpha/\sqrt{N}`.

    The matrix is *not* validated on creation; use :meth:`validate` for that.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import FrameMatrix
        >>> A = FrameMatrix([[1, 1, 1], [1, -1, 0]], tolerance=1e-8)
        >>> A.M(), A.N(), A.tolerance()
        (2, 3, 1e-08)
        >>> A.is_valid()
        False

    """

    def __init__(self, alpha, tolerance=None):
        alpha = np.array(alpha, dtype=complex)
        assert alpha.ndim == 2 and alpha.size > 0, "alpha must be a nonempty two dimensional array"
        alpha.flags.writeable = False
        self._alpha = alpha
        self._tolerance = resolve_tolerance(tolerance)

    def __repr__(self):
        return "frame matrix with M=%s rows and N=%s columns" % (self.M(), self.N())

    def M(self):
        r""" Return the number of rows. """
        return self._alpha.shape[0]

    def N(self):
        r""" Return the number of columns. """
        return self._alpha.shape[1]

    def alpha(self):
        r""" Return the (read-only) array `\alpha`. """
        return self._alpha

    def T(self):
        r""" Return the matrix `T=\alpha/\sqrt{N}`. """
        return self._alpha / np.sqrt(self.N())

    def row(self, l):
        r""" Return the row `\alpha_{l,\cdot}`, i.e. the values of the filter `m_l`. """
        return self._alpha[l]

    def tolerance(self):
        return self._tolerance

    def validate(self, tolerance=None):
        r"""
        Return the validation report of this matrix.

        See :func:`validate`.
        """
        return validate(self, tolerance)

    def is_valid(self, tolerance=None):
        r"""
        Return whether this matrix passes validation.
        """
        return validate(self, tolerance).is_valid()

    def isometry_defect(self):
        r"""
        Return `\max|(\frac{1}{N}\alpha^*\alpha - I_N)_{i,j}|`.
        """
        N = self.N()
        gram = self._alpha.conj().T @ self._alpha / N
        return float(np.max(np.abs(gram - np.eye(N))))

    def first_row_defect(self):
        r"""
        Return `\max_j|\alpha_{0,j}-1|`.
        """
        return float(np.max(np.abs(self._alpha[0] - 1)))

    def complement_projector_defect(self):
        r"""
        Return how far the rows `T_1,\dots,T_{M-1}` are from a Parseval frame
        of `\langle T_0\rangle^\perp`.

        OUTPUT: the maximum of `|\langle T_l, T_0\rangle|` for `l\geq 1` and
        of the entries of `\sum_{l\geq 1}T_l^*T_l - (I-T_0^*T_0)`. For a valid
        matrix this is zero up to rounding errors.

        EXAMPLES::

            >>> from pframe.frames.frame_matrices import random_frame_matrix
            >>> import numpy as np
            >>> rng = np.random.default_rng(11)
            >>> all(random_frame_matrix(N, M, rng).complement_projector_defect() < 1e-10
            ...     for N in range(2, 5) for M in range(N, 8))
            True

        """
        T = self.T()
        t0 = T[0]
        rest = T[1:]
        N = self.N()
        orthogonality = np.abs(rest @ t0.conj()) if len(rest) else np.zeros(1)
        projector = rest.conj().T @ rest if len(rest) else np.zeros((N, N))
        complement = np.eye(N) - np.outer(t0.conj(), t0)
        return float(max(np.max(orthogonality), np.max(np.abs(projector - complement))))


class Violation(object):
    r"""
    A violated condition and the measured deviation.
    """

    def __init__(self, condition, deviation, message=""):
        self._condition = condition
        self._deviation = float(deviation)
        self._message = message

    def __repr__(self):
        text = "%s violated by %.3e" % (self._condition, self._deviation)
        if self._message:
            text += " (%s)" % self._message
        return text

    def condition(self):
        return self._condition

    def deviation(self):
        return self._deviation

    def message(self):
        return self._message


class ValidationReport(object):
    r"""
    Return the report on a validation run.

    INPUT:

    - ``violations`` -- a list of ``Violation`` objects
    - ``deviations`` -- a dictionary mapping every checked condition to its
      measured deviation

    The report is empty if and only if the matrix is valid.

    """

    def __init__(self, violations, deviations):
        self._violations = list(violations)
        self._deviations = dict(deviations)

    def __repr__(self):
        if not self._violations:
            return "validation report: no violations"
        return "validation report: " + "; ".join(repr(v) for v in self._violations)

    def __iter__(self):
        return iter(self._violations)

    def __len__(self):
        return len(self._violations)

    def __bool__(self):
        return len(self._violations) > 0

    def is_valid(self):
        return len(self._violations) == 0

    def violations(self):
        return list(self._violations)

    def conditions(self):
        r""" Return the names of the violated conditions. """
        return [v.condition() for v in self._violations]

    def deviations(self):
        r""" Return the measured deviations of all checked conditions. """
        return dict(self._deviations)

    def max_deviation(self):
        r""" Return the largest measured deviation (zero if nothing was measured). """
        return max(self._deviations.values()) if self._deviations else 0.0


def validate(matrix, tolerance=None):
    r"""
    Return the validation report of a frame matrix.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix``
    - ``tolerance`` -- a nonnegative real number, or ``None`` (default), in
      which case the tolerance of ``matrix`` is used

    OUTPUT: a ``ValidationReport`` listing the conditions which are violated
    by more than ``tolerance``, with the measured deviation. The checked
    conditions are

    - ``dimensions`` -- `M\geq 2` and `N\geq 2`, with deviation `2-\min(M,N)`,
    - ``isometry`` -- `\frac{1}{N}\alpha^*\alpha = I_N`, entrywise,
    - ``first_row`` -- `\alpha_{0,j}=1` for all `j`.

    This function never raises. A matrix with `M<N` cannot be an isometry and
    is reported as such.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import FrameMatrix, validate
        >>> validate(FrameMatrix([[1, 1], [1, -1]])).max_deviation() < 1e-12
        True
        >>> validate(FrameMatrix([[2, 1], [1, -1]]))
        validation report: isometry violated by 1.500e+00; first_row violated by 1.000e+00
        >>> validate(FrameMatrix([[1, 1, 1]])).conditions()
        ['dimensions', 'isometry']

    """
    if tolerance is None:
        tolerance = matrix.tolerance()
    tolerance = resolve_tolerance(tolerance)
    violations = []
    deviations = {}
    M, N = matrix.M(), matrix.N()
    if M < 2 or N < 2:
        violations.append(Violation("dimensions", 2 - min(M, N), "M=%s and N=%s must be at least 2" % (M, N)))
    deviations["isometry"] = matrix.isometry_defect()
    if not deviations["isometry"] <= tolerance:
        violations.append(Violation("isometry", deviations["isometry"]))
    deviations["first_row"] = matrix.first_row_defect()
    if not deviations["first_row"] <= tolerance:
        violations.append(Violation("first_row", deviations["first_row"]))
    return ValidationReport(violations, deviations)


def orthonormal_completion(vectors, skip_threshold=SKIP_THRESHOLD):
    r"""
    Return vectors completing an orthonormal system to a basis.

    INPUT:

    - ``vectors`` -- a `Q\times n` array with orthonormal columns
    - ``skip_threshold`` -- a positive real number (default: ``1e-8``)

    OUTPUT: a `Q\times(Q-n)` array `C` such that the columns of ``vectors``
    and of `C` form an orthonormal basis of `\mathbb{C}^Q`.

    The completion is deterministic: the standard basis vectors
    `e_0,\dots,e_{Q-1}` are orthogonalized in index order against all vectors
    found so far by modified Gram-Schmidt (with one reorthogonalization
    pass). A candidate whose residual has norm `<` ``skip_threshold`` is
    skipped. ``CompletionFailure`` is raised if fewer than `Q-n` vectors are
    found, which cannot happen for orthonormal input.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import orthonormal_completion
        >>> u = np.ones((2, 1)) / np.sqrt(2)
        >>> C = orthonormal_completion(u)
        >>> bool(np.allclose(C[:, 0], [1/np.sqrt(2), -1/np.sqrt(2)]))
        True

    TESTS::

        >>> rng = np.random.default_rng(5)
        >>> ok = True
        >>> for Q in range(1, 9):
        ...     for n in range(0, Q + 1):
        ...         X = rng.standard_normal((Q, n)) + 1j*rng.standard_normal((Q, n))
        ...         V = np.linalg.qr(X)[0] if n > 0 else np.zeros((Q, 0))
        ...         U = np.hstack([V, orthonormal_completion(V)])
        ...         ok = ok and U.shape == (Q, Q) and np.allclose(U.conj().T @ U, np.eye(Q), atol=1e-12)
        >>> bool(ok)
        True
        >>> np.array_equal(orthonormal_completion(V), orthonormal_completion(V))
        True

    """
    vectors = np.array(vectors, dtype=complex)
    Q, n = vectors.shape
    basis = [vectors[:, j] for j in range(n)]
    completion = []
    for i in range(Q):
        if len(basis) == Q:
            break
        v = np.zeros(Q, dtype=complex)
        v[i] = 1
        for _ in range(2):
            for u in basis:
                v = v - np.vdot(u, v) * u
        r = np.linalg.norm(v)
        if r < skip_threshold:
            continue
        v = v / r
        basis.append(v)
        completion.append(v)
    if len(completion) != Q - n:
        raise CompletionFailure("found %s completion vectors, expected %s" % (len(completion), Q - n))
    logger.debug("completed %s orthonormal vectors in C^%s by %s vectors", n, Q, Q - n)
    if not completion:
        return np.zeros((Q, 0), dtype=complex)
    return np.column_stack(completion)


def complement_isometry(N):
    r"""
    Return the isometry `\Psi:\mathbb{C}^{N-1}\to\langle T_0\rangle^\perp` as
    an `N\times(N-1)` matrix.

    Its columns complete the constant unit vector `T_0` to an orthonormal
    basis of `\mathbb{C}^N`, see :func:`orthonormal_completion`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import complement_isometry
        >>> Psi = complement_isometry(4)
        >>> Psi.shape
        (4, 3)
        >>> bool(np.allclose(Psi.conj().T @ Psi, np.eye(3))) and bool(np.allclose(Psi.sum(axis=0), 0))
        True

    """
    assert N >= 2, "N must be at least 2"
    t0 = np.ones((N, 1), dtype=complex) / np.sqrt(N)
    return orthonormal_completion(t0)


def build_from_complement(psi_frame, N, tolerance=None):
    r"""
    Return the frame matrix obtained from a Parseval frame of `\mathbb{C}^{N-1}`.

    INPUT:

    - ``psi_frame`` -- an `(M-1)\times(N-1)` array whose rows `e_1,\dots,e_{M-1}`
      form a Parseval frame for `\mathbb{C}^{N-1}`
    - ``N`` -- an integer `\geq 2`
    - ``tolerance`` -- a nonnegative real number, or ``None`` (default)

    OUTPUT: the ``FrameMatrix`` with `M` rows whose row `0` consists of ones
    and whose row `l\geq 1` is `\sqrt{N}\,\Psi(e_l)`, where `\Psi` is
    :func:`complement_isometry`. The result passes :func:`validate`.

    Raises ``NotParsevalInput`` if `\sum_l e_le_l^*` deviates from the identity
    by more than ``tolerance``.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import build_from_complement
        >>> r = 1/np.sqrt(2)
        >>> A = build_from_complement([[r], [r]], 2)
        >>> A
        frame matrix with M=3 rows and N=2 columns
        >>> bool(np.allclose(A.alpha(), [[1, 1], [r, -r], [r, -r]]))
        True
        >>> W = build_from_complement([[1]], 2)
        >>> bool(np.allclose(W.alpha(), [[1, 1], [1, -1]]))
        True
        >>> build_from_complement(np.eye(2), 3).validate().is_valid()
        True
        >>> build_from_complement([[1], [1]], 2)
        Traceback (most recent call last):
        ...
        pframe.errors.NotParsevalInput: the rows of psi_frame are not a Parseval frame for C^1 (deviation 1.000e+00)

    TESTS::

        >>> from pframe.frames.frame_matrices import random_parseval_frame
        >>> rng = np.random.default_rng(2024)
        >>> ok = True
        >>> for _ in range(50):
        ...     N = int(rng.integers(2, 6))
        ...     M = int(rng.integers(N, 9))
        ...     A = build_from_complement(random_parseval_frame(N - 1, M - 1, rng), N)
        ...     ok = ok and A.M() == M and A.validate().is_valid()
        >>> ok
        True

    """
    tolerance = resolve_tolerance(tolerance)
    psi = np.array(psi_frame, dtype=complex)
    if psi.ndim == 1:
        psi = psi.reshape(-1, 1)
    assert N >= 2, "N must be at least 2"
    if psi.ndim != 2 or psi.shape[1] != N - 1:
        raise NotParsevalInput("psi_frame must have N-1=%s columns, not shape %s" % (N - 1, psi.shape))
    deviation = float(np.max(np.abs(psi.conj().T @ psi - np.eye(N - 1))))
    if not deviation <= tolerance:
        raise NotParsevalInput("the rows of psi_frame are not a Parseval frame for C^%s (deviation %.3e)"
                               % (N - 1, deviation))
    Psi = complement_isometry(N)
    rows = np.sqrt(N) * (psi @ Psi.T)
    alpha = np.vstack([np.ones((1, N), dtype=complex), rows])
    logger.debug("built a %sx%s frame matrix from a Parseval frame of C^%s", alpha.shape[0], N, N - 1)
    return FrameMatrix(alpha, tolerance)


def extract_complement(matrix):
    r"""
    Return the Parseval frame of `\mathbb{C}^{N-1}` underlying a frame matrix.

    This is the inverse of :func:`build_from_complement`: the rows of the
    result are `\Psi^*(T_l)`, `l=1,\dots,M-1`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import extract_complement, build_from_complement, random_frame_matrix
        >>> rng = np.random.default_rng(8)
        >>> A = random_frame_matrix(3, 5, rng)
        >>> psi = extract_complement(A)
        >>> psi.shape
        (4, 2)
        >>> bool(np.allclose(build_from_complement(psi, 3).alpha(), A.alpha(), atol=1e-12))
        True

    """
    Psi = complement_isometry(matrix.N())
    return matrix.T()[1:] @ Psi.conj()


def walsh_matrix():
    r"""
    Return the classical Walsh seed `\begin{pmatrix}1&1\\1&-1\end{pmatrix}`.

    It is validated with ``EXACT_TOLERANCE``.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import walsh_matrix
        >>> A = walsh_matrix()
        >>> A.tolerance(), A.is_valid()
        (1e-12, True)

    """
    return FrameMatrix([[1, 1], [1, -1]], EXACT_TOLERANCE)


def fourier_matrix(N):
    r"""
    Return the square seed `\alpha_{i,j}=e^{2\pi i\,ij/N}`.

    It is unitary after scaling, so it yields a generalized Walsh basis. Like
    the Walsh seed it is validated with ``EXACT_TOLERANCE``.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import fourier_matrix
        >>> F = fourier_matrix(3)
        >>> F.is_valid(), F.M(), F.N()
        (True, 3, 3)
        >>> F.tolerance(), F.validate().max_deviation() < F.tolerance()
        (1e-12, True)
        >>> fourier_matrix(2).alpha().real.tolist()
        [[1.0, 1.0], [1.0, -1.0]]

    """
    assert N >= 2, "N must be at least 2"
    exponents = np.outer(np.arange(N), np.arange(N)) % N
    alpha = np.exp(2j * np.pi * exponents / N)
    # exact values on the real axis
    alpha[exponents == 0] = 1
    if N % 2 == 0:
        alpha[2 * exponents == N] = -1
    return FrameMatrix(alpha, EXACT_TOLERANCE)


def random_parseval_frame(n, m, rng):
    r"""
    Return `m` vectors (as rows) forming a Parseval frame for `\mathbb{C}^n`.

    INPUT:

    - ``n``, ``m`` -- integers with `1\leq n\leq m`
    - ``rng`` -- a ``numpy.random.Generator``

    OUTPUT: an `m\times n` matrix with orthonormal columns, computed from the
    QR decomposition of a complex Gaussian matrix.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import random_parseval_frame
        >>> E = random_parseval_frame(2, 5, np.random.default_rng(0))
        >>> E.shape, bool(np.allclose(E.conj().T @ E, np.eye(2)))
        ((5, 2), True)

    """
    assert 1 <= n <= m, "a Parseval frame for C^n needs at least n vectors"
    X = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    Q, _ = np.linalg.qr(X)
    return Q


def random_frame_matrix(N, M, rng, tolerance=None):
    r"""
    Return a random valid ``FrameMatrix`` with `M` rows and `N` columns.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> A = random_frame_matrix(3, 7, np.random.default_rng(1))
        >>> A, A.is_valid()
        (frame matrix with M=7 rows and N=3 columns, True)

    """
    assert M >= N >= 2, "we need M >= N >= 2"
    return build_from_complement(random_parseval_frame(N - 1, M - 1, rng), N, tolerance)
