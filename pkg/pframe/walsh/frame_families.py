# -*- coding: utf-8 -*-
r"""
Parseval frames of piecewise constant functions
===============================================

Let `\alpha` be a valid frame matrix with `M` rows and `N` columns, and let
`\tilde S_0,\dots,\tilde S_{M-1}` be the associated operators on `L^2[0,1]`
(see :mod:`pframe.walsh.operators`). Since `\tilde S_0\mathbf{1}=\mathbf{1}`,
the family

.. MATH::

    \{\tilde S_{\omega_1}\cdots\tilde S_{\omega_n}\mathbf{1} :
    \omega_1\dots\omega_n\in\Omega_M\}

indexed by the canonical words (see :mod:`pframe.frames.words`) has no
repetitions. It is a Parseval frame for `L^2[0,1]`: for every `f`,

.. MATH::

    \|f\|^2 = \sum_{\omega\in\Omega_M}|\langle f,\tilde S_\omega\mathbf{1}\rangle|^2,
    \qquad f = \sum_{\omega\in\Omega_M}\langle f,\tilde S_\omega\mathbf{1}\rangle\,
    \tilde S_\omega\mathbf{1}.

If `\alpha` is square the family is an orthonormal basis, a *generalized
Walsh basis*; for the `2\times 2` Hadamard matrix it is the classical Walsh
basis.

Everything can be computed exactly at finite resolution:

- The function `\tilde S_{l_0}\cdots\tilde S_{l_{k-1}}\mathbf{1}` takes the
  value `\alpha_{l_0,b_0}\alpha_{l_1,b_1}\cdots\alpha_{l_{k-1},b_{k-1}}` on the
  cell with digits `(b_0,\dots,b_{k-1})`. So the functions for all words of
  length `k` are the rows of the tensor power `A^{\otimes k}`, and
  `\frac{1}{N^k}(A^{\otimes k})^*A^{\otimes k}=I`. Hence the elements for the
  canonical words of length `\leq k` form a Parseval frame of
  `\mathcal{F}_k`.
- If `f\in\mathcal{F}_k` and `\omega` is canonical of length `>k`, then
  `\langle f,\tilde S_\omega\mathbf{1}\rangle=0`.

Therefore analysis of a function of level `k` only needs the words of length
`\leq k`, and the Parseval identity and the reconstruction formula hold
exactly (up to rounding) at every level. Since the union of the
`\mathcal{F}_k` is dense in `L^2[0,1]`, this also proves the Parseval
property in `L^2[0,1]`.

AUTHORS:

- The pframe developers (2026): initial version


EXAMPLES::

    >>> import numpy as np
    >>> from pframe.frames.frame_matrices import FrameMatrix
    >>> from pframe.frames.grid_functions import GridFunction1D
    >>> from pframe.walsh.frame_families import analyze, synthesize
    >>> r = 1/np.sqrt(2)
    >>> A = FrameMatrix([[1, 1], [r, -r], [r, -r]])
    >>> c = analyze(A, GridFunction1D(2, [1, -1]))
    >>> c
    coefficient set of 3 words from a function of level 1
    >>> [(w.digits(), round(abs(c[w]), 12)) for w in c.words()]
    [((), 0.0), ((1,), 0.707106781187), ((2,), 0.707106781187)]
    >>> synthesize(A, c).is_close(GridFunction1D(2, [1, -1]), 1e-12)
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
import warnings
from functools import reduce

import numpy as np

from pframe.config import DEFAULT_MAX_LEVEL, resolve_tolerance
from pframe.errors import BaseMismatch, NonCanonicalWord
from pframe.frames.grid_functions import GridFunction1D
from pframe.frames.words import Word, all_words, enumerate_words

logger = logging.getLogger(__name__)


def _as_word(word, alphabet_size=None):
    if isinstance(word, Word):
        return word.check_alphabet(alphabet_size) if alphabet_size else word
    return Word(word, alphabet_size)


def frame_element(matrix, word):
    r"""
    Return the function `\tilde S_{\omega_1}\cdots\tilde S_{\omega_n}\mathbf{1}`.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix`` with `M` rows and `N` columns
    - ``word`` -- a ``Word`` (or a sequence of digits) over `\{0,\dots,M-1\}`

    OUTPUT: the function of level `n=|\omega|` whose value on the cell with
    digits `(b_0,\dots,b_{n-1})` is `\prod_j\alpha_{\omega_{j+1},b_j}`. The word
    need not be canonical.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
        >>> from pframe.walsh.frame_families import frame_element
        >>> frame_element(walsh_matrix(), ()).coefficients().real.tolist()
        [1.0]
        >>> frame_element(walsh_matrix(), (1, 1)).coefficients().real.tolist()
        [1.0, -1.0, -1.0, 1.0]
        >>> r = 1/np.sqrt(2)
        >>> A = FrameMatrix([[1, 1], [r, -r], [r, -r]])
        >>> bool(np.allclose(frame_element(A, (2, 1)).coefficients(), [0.5, -0.5, -0.5, 0.5]))
        True
        >>> frame_element(A, (3,))
        Traceback (most recent call last):
        ...
        pframe.errors.DigitOutOfRange: digit 3 is not in {0,...,2}

    The product formula agrees with the iterated operators, for all
    canonical words of length `\leq 4` and random matrices with
    `N\leq M\leq 4`::

        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.frames.words import enumerate_words
        >>> from pframe.walsh.operators import apply_word
        >>> rng = np.random.default_rng(4)
        >>> worst = 0.0
        >>> for N in range(2, 5):
        ...     for M in range(N, 5):
        ...         B = random_frame_matrix(N, M, rng)
        ...         one = GridFunction1D.constant(N)
        ...         for w in enumerate_words(M, 4):
        ...             diff = frame_element(B, w) - apply_word(B, w, one)
        ...             worst = max(worst, float(np.max(np.abs(diff.coefficients()))))
        >>> worst < 1e-13
        True

    Trailing zeros only refine the element::

        >>> w = (2, 1)
        >>> frame_element(A, w + (0, 0)).is_close(frame_element(A, w), 1e-15)
        True

    """
    word = _as_word(word, matrix.M())
    N = matrix.N()
    n = len(word)
    if n == 0:
        return GridFunction1D.constant(N)
    alpha = matrix.alpha()
    digits = np.indices((N,) * n).reshape(n, -1)
    values = np.ones(N**n, dtype=complex)
    for j, l in enumerate(word):
        values = values * alpha[l][digits[j]]
    return GridFunction1D(N, values, n)


def tensor_power(matrix, k):
    r"""
    Return the Kronecker power `A^{\otimes k}` of `A=\alpha`.

    Row `l_0M^{k-1}+\dots+l_{k-1}` is the coefficient vector of
    `\tilde S_{l_0}\cdots\tilde S_{l_{k-1}}\mathbf{1}`.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import walsh_matrix
        >>> from pframe.walsh.frame_families import tensor_power
        >>> tensor_power(walsh_matrix(), 2).real.astype(int).tolist()
        [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]

    """
    return reduce(np.kron, [matrix.alpha()] * k, np.ones((1, 1), dtype=complex))


def level_parseval_check(matrix, k):
    r"""
    Return `\max|\frac{1}{N^k}(A^{\otimes k})^*A^{\otimes k} - I|`.

    The matrix `A^{\otimes k}` is assembled from the frame elements of all
    `M^k` words of length `k`, so the rows of
    `N^{-k/2}A^{\otimes k}` are checked to form a Parseval frame of
    `\mathbb{C}^{N^k}`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import random_frame_matrix, walsh_matrix
        >>> from pframe.walsh.frame_families import level_parseval_check
        >>> level_parseval_check(walsh_matrix(), 3) < 1e-12
        True
        >>> rng = np.random.default_rng(21)
        >>> all(level_parseval_check(random_frame_matrix(3, 5, rng), k) < 1e-10 for k in (1, 2, 3))
        True

    TESTS::

        >>> from pframe.walsh.frame_families import tensor_power, frame_element
        >>> from pframe.frames.words import all_words
        >>> B = random_frame_matrix(2, 3, rng)
        >>> A3 = np.array([frame_element(B, w).coefficients() for w in all_words(3, 3)])
        >>> bool(np.allclose(A3, tensor_power(B, 3), atol=1e-14))
        True

    """
    N = matrix.N()
    A = np.array([frame_element(matrix, w).coefficients() for w in all_words(matrix.M(), k)])
    gram = A.conj().T @ A / float(N)**k
    return float(np.max(np.abs(gram - np.eye(N**k))))


class FrameFamily(object):
    r"""
    Return the frame elements for the canonical words of length `\leq k`.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix`` with `M` rows and `N` columns
    - ``max_level`` -- a nonnegative integer `k`

    OUTPUT: the family `\{\tilde S_\omega\mathbf{1} : \omega\in\Omega_M,\
    |\omega|\leq k\}`, which is a Parseval frame of `\mathcal{F}_k`. It has
    exactly `M^k` elements; the element of `\omega` has level `|\omega|`.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import walsh_matrix
        >>> from pframe.walsh.frame_families import FrameFamily
        >>> F = FrameFamily(walsh_matrix(), 2)
        >>> F
        Parseval frame of 4 functions of level at most 2
        >>> F.words()
        [word (), word (1,), word (0, 1), word (1, 1)]
        >>> F[()].coefficients().real.tolist()
        [1.0]
        >>> F.synthesis_matrix().real.astype(int).tolist()
        [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]

    """

    def __init__(self, matrix, max_level):
        assert max_level >= 0, "the level must be nonnegative"
        if max_level > DEFAULT_MAX_LEVEL:
            warnings.warn("a frame family of level %s has %s elements of %s values each"
                          % (max_level, matrix.M()**max_level, matrix.N()**max_level))
        self._matrix = matrix
        self._max_level = max_level
        self._words = enumerate_words(matrix.M(), max_level)
        self._index = dict((w, i) for i, w in enumerate(self._words))
        self._elements = dict((w, frame_element(matrix, w)) for w in self._words)
        self._synthesis_matrix = None

    def __repr__(self):
        return "Parseval frame of %s functions of level at most %s" % (len(self._words), self._max_level)

    def __len__(self):
        return len(self._words)

    def __getitem__(self, word):
        return self._elements[_as_word(word)]

    def __contains__(self, word):
        return _as_word(word) in self._elements

    def matrix(self):
        return self._matrix

    def max_level(self):
        return self._max_level

    def words(self):
        r""" Return the words, in the order of :func:`enumerate_words`. """
        return list(self._words)

    def elements(self):
        r""" Return the dictionary from words to frame elements. """
        return dict(self._elements)

    def index(self, word):
        r""" Return the position of ``word`` in :meth:`words`. """
        return self._index[_as_word(word)]

    def synthesis_matrix(self):
        r"""
        Return the `M^k\times N^k` matrix whose rows are the frame elements
        at level `k`.
        """
        if self._synthesis_matrix is None:
            k = self._max_level
            E = np.array([self._elements[w].refine(k).coefficients() for w in self._words])
            E.flags.writeable = False
            self._synthesis_matrix = E
        return self._synthesis_matrix


class CoefficientSet(object):
    r"""
    Return a set of frame coefficients.

    INPUT:

    - ``coeffs`` -- a dictionary from canonical words (``Word`` objects or
      digit tuples) to complex numbers
    - ``source_level`` -- the level `k` of the analyzed function

    Words ending in `0` are rejected with ``NonCanonicalWord``; missing words
    have coefficient `0`.

    EXAMPLES::

        >>> from pframe.walsh.frame_families import CoefficientSet
        >>> c = CoefficientSet({(): 1, (0, 1): 2j}, 2)
        >>> c[(0, 1)], c[(1,)]
        (2j, 0j)
        >>> c.norm_squared()
        5.0
        >>> CoefficientSet({(1, 0): 1}, 2)
        Traceback (most recent call last):
        ...
        pframe.errors.NonCanonicalWord: word (1, 0) ends in 0

    """

    def __init__(self, coeffs, source_level):
        self._coeffs = {}
        for word, value in dict(coeffs).items():
            word = _as_word(word)
            if not word.is_canonical():
                raise NonCanonicalWord("%s ends in 0" % (word,))
            self._coeffs[word] = complex(value)
        self._source_level = int(source_level)

    def __repr__(self):
        return "coefficient set of %s words from a function of level %s" % (
            len(self._coeffs), self._source_level)

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, word):
        return self._coeffs.get(_as_word(word), 0j)

    def __iter__(self):
        return iter(self.words())

    def source_level(self):
        return self._source_level

    def words(self):
        r""" Return the words in length-then-lexicographic order. """
        return sorted(self._coeffs)

    def items(self):
        return [(w, self._coeffs[w]) for w in self.words()]

    def max_length(self):
        r""" Return the length of the longest word (`0` if there are none). """
        return max([len(w) for w in self._coeffs] + [0])

    def norm_squared(self):
        r""" Return `\sum_\omega|c_\omega|^2`. """
        return float(sum(abs(c)**2 for c in self._coeffs.values()))

    def is_close(self, other, tolerance=1e-14):
        r"""
        Return whether both sets have coefficients differing by at most
        ``tolerance`` on every word.
        """
        words = set(self._coeffs) | set(other._coeffs)
        return all(abs(self[w] - other[w]) <= tolerance for w in words)


def analyze(matrix, f, family=None, tolerance=None):
    r"""
    Return the frame coefficients `c_\omega=\langle f,\tilde S_\omega\mathbf{1}\rangle`.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix`` with `N` columns
    - ``f`` -- a ``GridFunction1D`` of base `N` and some level `k`
    - ``family`` -- a ``FrameFamily`` of level at least `k` to reuse, or
      ``None`` (default)
    - ``tolerance`` -- the tolerance for the Parseval identity, or ``None``

    OUTPUT: the ``CoefficientSet`` of all canonical words of length `\leq k`.
    The coefficients of longer canonical words vanish and are not stored.

    A warning is issued if `|\sum|c_\omega|^2-\|f\|^2|` exceeds the tolerance
    times `\max(1,\|f\|^2)`, which can only happen for an invalid matrix.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import walsh_matrix
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.walsh.frame_families import analyze, parseval_residual
        >>> W = walsh_matrix()
        >>> c = analyze(W, GridFunction1D.constant(2))
        >>> [(w.digits(), v.real) for w, v in c.items()]
        [((), 1.0)]
        >>> c = analyze(W, GridFunction1D(2, [1, -1]))
        >>> [(w.digits(), c[w].real) for w in c]
        [((), 0.0), ((1,), 1.0)]

    The Parseval identity, for 100 random signals per seed at each level
    `k\leq 4`::

        >>> from pframe.frames.frame_matrices import FrameMatrix
        >>> from pframe.walsh.frame_families import FrameFamily
        >>> r = 1/np.sqrt(2)
        >>> seeds = [W, FrameMatrix([[1, 1], [r, -r], [r, -r]])]
        >>> rng = np.random.default_rng(100)
        >>> ok = True
        >>> for A in seeds:
        ...     for k in range(5):
        ...         F = FrameFamily(A, k)
        ...         for _ in range(100):
        ...             f = GridFunction1D.random(2, k, rng)
        ...             c = analyze(A, f, F)
        ...             ok = ok and len(c) == A.M()**k
        ...             ok = ok and parseval_residual(c, f) < 1e-10 * f.norm()**2
        >>> ok
        True

    TESTS::

        >>> analyze(W, GridFunction1D(3, [1, 2, 3]))
        Traceback (most recent call last):
        ...
        pframe.errors.BaseMismatch: piecewise constant function on [0,1] of base 3 and level 1 does not have base N=2

    """
    if not isinstance(f, GridFunction1D) or f.base() != matrix.N():
        raise BaseMismatch("%s does not have base N=%s" % (f, matrix.N()))
    k = f.level()
    if family is None or family.max_level() < k or family.matrix() is not matrix:
        family = FrameFamily(matrix, k)
    words = [w for w in family.words() if len(w) <= k]
    E = np.array([family[w].refine(k).coefficients() for w in words]) \
        if family.max_level() != k else family.synthesis_matrix()
    values = E.conj() @ f.coefficients() / float(matrix.N())**k
    coeffs = CoefficientSet(dict(zip(words, values)), k)
    tolerance = resolve_tolerance(tolerance)
    residual = parseval_residual(coeffs, f)
    logger.info("analyzed a function of level %s: %s coefficients, Parseval residual %.3e",
                k, len(coeffs), residual)
    if residual > tolerance * max(1.0, f.norm()**2):
        warnings.warn("Parseval residual %.3e exceeds the tolerance; is the matrix valid?" % residual)
    return coeffs


def synthesize(matrix, coeffs, family=None):
    r"""
    Return `\sum_\omega c_\omega\tilde S_\omega\mathbf{1}`.

    INPUT:

    - ``matrix`` -- a ``FrameMatrix``
    - ``coeffs`` -- a ``CoefficientSet``
    - ``family`` -- a ``FrameFamily`` of the output level to reuse, or ``None``

    OUTPUT: the sum as a function of level `k`, the maximum of the source
    level and of the lengths of the words. For coefficients computed by
    :func:`analyze` this reconstructs the analyzed function.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.walsh.frame_families import CoefficientSet, FrameFamily, analyze, synthesize
        >>> synthesize(walsh_matrix(), CoefficientSet({(): 1}, 0)).coefficients().tolist()
        [(1+0j)]

    Reconstruction of 100 random signals per seed at each level `k\leq 4`::

        >>> r = 1/np.sqrt(2)
        >>> rng = np.random.default_rng(6)
        >>> worst = 0.0
        >>> for A in [walsh_matrix(), FrameMatrix([[1, 1], [r, -r], [r, -r]])]:
        ...     for k in range(5):
        ...         F = FrameFamily(A, k)
        ...         for _ in range(100):
        ...             f = GridFunction1D.random(2, k, rng)
        ...             worst = max(worst, synthesize(A, analyze(A, f, F), F).distance(f))
        >>> worst < 1e-10
        True

    """
    k = max(coeffs.source_level(), coeffs.max_length())
    N = matrix.N()
    if family is None or family.max_level() != k or family.matrix() is not matrix:
        family = FrameFamily(matrix, k)
    c = np.zeros(len(family), dtype=complex)
    for word, value in coeffs.items():
        c[family.index(word.check_alphabet(matrix.M()))] = value
    logger.debug("synthesizing %s coefficients at level %s", len(coeffs), k)
    return GridFunction1D(N, c @ family.synthesis_matrix(), k)


def parseval_residual(coeffs, f):
    r"""
    Return `|\sum_\omega|c_\omega|^2-\|f\|^2|`.
    """
    return abs(coeffs.norm_squared() - f.norm()**2)


def long_word_check(matrix, f, extra=2):
    r"""
    Return `\max|\langle f,\tilde S_\omega\mathbf{1}\rangle|` over the
    canonical words `\omega` with `k<|\omega|\leq k+` ``extra``, where `k` is the
    level of ``f``.

    This vanishes (up to rounding) for valid matrices.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.walsh.frame_families import long_word_check
        >>> r = 1/np.sqrt(2)
        >>> rng = np.random.default_rng(9)
        >>> ok = True
        >>> for A in [walsh_matrix(), FrameMatrix([[1, 1], [r, -r], [r, -r]])]:
        ...     for k in range(4):
        ...         f = GridFunction1D.random(2, k, rng)
        ...         ok = ok and long_word_check(A, f) < 1e-12 * f.norm()
        >>> ok
        True

    """
    k = f.level()
    worst = 0.0
    for w in enumerate_words(matrix.M(), k + extra):
        if len(w) > k:
            worst = max(worst, abs(f.inner_product(frame_element(matrix, w))))
    return worst
