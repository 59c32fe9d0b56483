# -*- coding: utf-8 -*-
r"""
Cuntz isometries on the unit square
===================================

Let `a` be the matrix of a ``DilationSystem`` (see
:mod:`pframe.dilation.dilation_systems`) with bases `(N,N')`. For
`(b,b')\in B\times B'` we define the filter `m_{(b,b')}` on `[0,1]^2` with
value `a_{(b,b'),(c,c')}` on the rectangle
`[c/N,(c+1)/N)\times[c'/N',(c'+1)/N')`, and the operators

.. MATH::

    (S_{(b,b')}F)(x,x') = m_{(b,b')}(x,x')\,F(\mathcal{R}x,\mathcal{R}'x'),

where `\mathcal{R}x=Nx\bmod 1` and `\mathcal{R}'x'=N'x'\bmod 1`. The inverse
branches of `(\mathcal{R},\mathcal{R}')` are the maps
`\Upsilon_{(c,c')}(x,x')=((x+c)/N,(x'+c')/N')`, and the adjoint is

.. MATH::

    (S_{(b,b')}^*F)(x,x') = \frac{1}{NN'}\sum_{(c,c')}
    \overline{m_{(b,b')}}(\Upsilon_{(c,c')}(x,x'))\,F(\Upsilon_{(c,c')}(x,x')).

Since `a/\sqrt{NN'}` is unitary, these operators satisfy the Cuntz relations

.. MATH::

    S_i^*S_j=\delta_{i,j}I,\qquad \sum_i S_iS_i^*=I,

and since the first row of `a` consists of ones, `S_{(0,0)}\mathbf{1}=\mathbf{1}`.
It follows that the functions `S_\omega\mathbf{1}`, for the canonical words
`\omega` over `B\times B'`, form an orthonormal basis of
`L^2([0,1]\times[0,1])`. At level `k` there are exactly `(NN')^k` such
words, the dimension of the space of functions constant on the rectangles
of level `k`, so :func:`orthonormal_basis_check` verifies completeness at
each finite resolution.

Let `V` be the subspace of functions which depend only on `x`, identified
with `L^2[0,1]` by :func:`pframe.frames.grid_functions.embed_V`, and let
`P_V` be the orthogonal projection onto it,
`(P_VF)(x)=\int_0^1F(x,x')\,dx'`. Condition (ii) on `a` gives

.. MATH::

    S_{(b,b')}^*P_V = \tilde S_{(b,b')}^*,

where `\tilde S_{(b,b')}=\tilde S_l` if `(b,b')=\iota(l)` and `0` otherwise.
Consequently `P_VS_\omega\mathbf{1}=\tilde S_{\tilde\omega}\mathbf{1}` if all
digits of `\omega=\iota(\tilde\omega)` lie in `\iota(L)`, and
`P_VS_\omega\mathbf{1}=0` otherwise. So the Parseval frame of
:mod:`pframe.walsh.frame_families` is the compression of an orthonormal basis.

Finally, with

.. MATH::

    \nu_{(b,b')}(t,t') = \frac{1}{NN'}\sum_{(c,c')}\overline{a}_{(b,b'),(c,c')}
    e^{2\pi i(tc/N+t'c'/N')}

unitarity of `a/\sqrt{NN'}` means `\sum_{(b,b')}|\nu_{(b,b')}(t,t')|^2=1`.

Functions on the square are ``GridFunction2D`` objects with bases `(N,N')`.
Pairs `(b,b')` may be given as tuples or as their index `bN'+b'`.

AUTHORS:

- The pframe developers (2026): initial version


EXAMPLES::

    >>> import numpy as np
    >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
    >>> from pframe.frames.grid_functions import GridFunction2D
    >>> from pframe.dilation.dilation_systems import build_dilation
    >>> from pframe.dilation.cuntz_operators import apply_dilated_S, cuntz_check
    >>> D = build_dilation(walsh_matrix())
    >>> one = GridFunction2D.constant(D.bases())
    >>> bool(np.allclose(apply_dilated_S(D, (1, 0), one).coefficients(), [1, -1]))
    True
    >>> cuntz_check(D, 2) < 1e-12
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

import itertools
import logging

import numpy as np

from pframe.errors import BaseMismatch
from pframe.frames.grid_functions import GridFunction1D, GridFunction2D, embed_V
from pframe.frames.words import enumerate_words
from pframe.walsh.frame_families import frame_element
from pframe.walsh.operators import apply_S_adjoint, shift_average, shift_multiply

logger = logging.getLogger(__name__)


def _check_bases(system, F):
    if not isinstance(F, GridFunction2D) or F.bases() != system.bases():
        raise BaseMismatch("%s does not have bases %s" % (F, system.bases()))


def apply_dilated_S(system, idx, F):
    r"""
    Return `S_{(b,b')}F`.

    INPUT:

    - ``system`` -- a ``DilationSystem`` with bases `(N,N')`
    - ``idx`` -- a pair `(b,b')\in B\times B'` (or its index)
    - ``F`` -- a ``GridFunction2D`` of bases `(N,N')`

    OUTPUT: the function `S_{(b,b')}F`, of level one more than ``F``. Its
    value on the rectangle with leading digit pair `(c,c')` and tail `t` is
    `a_{(b,b'),(c,c')}` times the value of `F` on `t`.

    Raises ``IndexOutOfRange`` if `(b,b')\notin B\times B'`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix
        >>> from pframe.frames.grid_functions import GridFunction2D
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import apply_dilated_S
        >>> r = 1/np.sqrt(2)
        >>> D = build_dilation(FrameMatrix([[1, 1], [r, -r], [r, -r]]))
        >>> one = GridFunction2D.constant((2, 2))
        >>> apply_dilated_S(D, (0, 0), one).is_close(one, 1e-14)
        True
        >>> apply_dilated_S(D, (0, 2), one)
        Traceback (most recent call last):
        ...
        pframe.errors.IndexOutOfRange: (0, 2) is not in {0,...,1} x {0,...,1}

    The operators are isometries::

        >>> rng = np.random.default_rng(3)
        >>> F = GridFunction2D.random((2, 2), 2, rng)
        >>> all(abs(apply_dilated_S(D, p, F).norm() - F.norm()) < 1e-12 for p in range(4))
        True

    """
    p = system.index(idx)
    _check_bases(system, F)
    coeffs = shift_multiply(system.a_matrix()[p], F.coefficients())
    return GridFunction2D(system.bases(), coeffs, F.level() + 1)


def apply_dilated_S_adjoint(system, idx, F):
    r"""
    Return `S_{(b,b')}^*F`.

    INPUT:

    - ``system`` -- a ``DilationSystem`` with bases `(N,N')`
    - ``idx`` -- a pair `(b,b')\in B\times B'` (or its index)
    - ``F`` -- a ``GridFunction2D`` of bases `(N,N')`

    OUTPUT: the function `S_{(b,b')}^*F`, of level `\max(k-1,0)` if ``F`` has
    level `k`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> from pframe.frames.grid_functions import GridFunction2D
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import apply_dilated_S, apply_dilated_S_adjoint
        >>> rng = np.random.default_rng(10)
        >>> D = build_dilation(random_frame_matrix(2, 3, rng))
        >>> one = GridFunction2D.constant(D.bases())
        >>> apply_dilated_S_adjoint(D, (0, 0), one).is_close(one, 1e-14)
        True

    Adjointness with respect to the `L^2` inner product::

        >>> F = GridFunction2D.random(D.bases(), 1, rng)
        >>> G = GridFunction2D.random(D.bases(), 2, rng)
        >>> all(abs(apply_dilated_S(D, p, F).inner_product(G)
        ...         - F.inner_product(apply_dilated_S_adjoint(D, p, G))) < 1e-12 for p in range(4))
        True

    """
    p = system.index(idx)
    _check_bases(system, F)
    if F.level() == 0:
        F = F.refine(1)
    coeffs = shift_average(system.a_matrix()[p], F.coefficients())
    return GridFunction2D(system.bases(), coeffs, F.level() - 1)


def dilated_frame_element(system, word):
    r"""
    Return `S_{\omega_1}\cdots S_{\omega_n}\mathbf{1}`.

    INPUT:

    - ``system`` -- a ``DilationSystem``
    - ``word`` -- a sequence of pairs `(b,b')` or of their indices

    OUTPUT: a function on the unit square of level `n`.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import walsh_matrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import dilated_frame_element
        >>> D = build_dilation(walsh_matrix())
        >>> dilated_frame_element(D, [(1, 0), (1, 0)]).coefficients().real.round(12).tolist()
        [1.0, -1.0, -1.0, 1.0]

    """
    coeffs = np.ones(1, dtype=complex)
    a = system.a_matrix()
    indices = [system.index(d) for d in word]
    for p in reversed(indices):
        coeffs = shift_multiply(a[p], coeffs)
    return GridFunction2D(system.bases(), coeffs, len(indices))


def cuntz_check(system, k):
    r"""
    Return the deviation from the Cuntz relations on the functions of level `k`.

    INPUT:

    - ``system`` -- a ``DilationSystem``
    - ``k`` -- a positive integer

    OUTPUT: the maximum, over the orthonormal basis `F` of the functions of
    level `k` on the square, of `\|S_i^*S_jF-\delta_{i,j}F\|` for all `i,j`
    and of `\|\sum_iS_iS_i^*F-F\|`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import cuntz_check
        >>> r = 1/np.sqrt(2)
        >>> D = build_dilation(FrameMatrix([[1, 1], [r, -r], [r, -r]]))
        >>> cuntz_check(D, 2) < 1e-10
        True

    A wrong entry of `a` is detected::

        >>> W = build_dilation(walsh_matrix())
        >>> a = W.a_matrix().copy()
        >>> a[1, 0] += 0.1
        >>> cuntz_check(W.with_a_matrix(a), 1) > 1e-3
        True

    TESTS::

        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> rng = np.random.default_rng(31)
        >>> systems = [W, D] + [build_dilation(random_frame_matrix(N, M, rng))
        ...                     for N, M in [(2, 5), (3, 4), (2, 2), (3, 3)]]
        >>> all(cuntz_check(S, k) < 1e-10 for S in systems for k in (1, 2))
        True
        >>> cuntz_check(W, 3) < 1e-12 and cuntz_check(D, 3) < 1e-10
        True

    """
    assert k >= 1, "the level must be positive"
    Q = system.size()
    deviation = 0.0
    for F in GridFunction2D.basis(system.bases(), k):
        images = [apply_dilated_S(system, j, F) for j in range(Q)]
        total = None
        for i in range(Q):
            for j in range(Q):
                G = apply_dilated_S_adjoint(system, i, images[j])
                deviation = max(deviation, (G - F).norm() if i == j else G.norm())
            term = apply_dilated_S(system, i, apply_dilated_S_adjoint(system, i, F))
            total = term if total is None else total + term
        deviation = max(deviation, total.distance(F))
    logger.info("Cuntz relations at level %s: deviation %.3e", k, deviation)
    return deviation


def project_V(F):
    r"""
    Return `P_VF`, the average of `F` over the second coordinate.

    INPUT:

    - ``F`` -- a ``GridFunction2D`` of bases `(N,N')` and level `k`

    OUTPUT: the ``GridFunction1D`` of base `N` and level `k` whose value on
    the cell with digits `(b_1,\dots,b_k)` is the mean of the values of `F`
    on the rectangles with digit pairs `(b_1,b_1'),\dots,(b_k,b_k')`.

    EXAMPLES::

        >>> from pframe.frames.grid_functions import GridFunction1D, GridFunction2D, embed_V
        >>> from pframe.dilation.cuntz_operators import project_V
        >>> project_V(GridFunction2D.constant((2, 3))).coefficients().tolist()
        [(1+0j)]
        >>> project_V(GridFunction2D((2, 2), [1, 3, 0, 2])).coefficients().real.tolist()
        [2.0, 1.0]
        >>> g = GridFunction1D(3, range(9))
        >>> project_V(embed_V(g, 2)).is_close(g)
        True

    """
    if not isinstance(F, GridFunction2D):
        raise BaseMismatch("%s is not a function on the unit square" % (F,))
    N, Nprime = F.bases()
    k = F.level()
    values = F.as_digit_array().mean(axis=tuple(range(1, 2 * k, 2)))
    return GridFunction1D(N, np.reshape(values, -1), k)


def _compressed_adjoint(system, p, g):
    # S~*_p on L^2[0,1]; zero for pairs outside iota(L)
    l = system.preimage(p)
    if l is None:
        return GridFunction1D.zero(system.N(), max(g.level() - 1, 0))
    return apply_S_adjoint(system.source(), l, g)


def compatibility_check(system, k):
    r"""
    Return the deviation of `S_{(b,b')}^*P_V` from `\tilde S_{(b,b')}^*P_V`.

    INPUT:

    - ``system`` -- a ``DilationSystem``
    - ``k`` -- a positive integer

    OUTPUT: the maximum, over all pairs `(b,b')` and the orthonormal basis
    `F` of the functions of level `k` on the square, of the distance between
    `S_{(b,b')}^*P_VF` and `\tilde S_{(b,b')}^*P_VF`, where `P_VF` is viewed
    both as a function on `[0,1]` and, via :func:`embed_V`, on the square.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import compatibility_check
        >>> compatibility_check(build_dilation(walsh_matrix()), 2) < 1e-12
        True
        >>> r = 1/np.sqrt(2)
        >>> D = build_dilation(FrameMatrix([[1, 1], [r, -r], [r, -r]]))
        >>> compatibility_check(D, 2) < 1e-10
        True

    For the pair `(1,1)\notin\iota(L)` the compressed adjoint vanishes::

        >>> from pframe.frames.grid_functions import GridFunction2D, embed_V
        >>> from pframe.dilation.cuntz_operators import apply_dilated_S_adjoint, project_V
        >>> F = GridFunction2D.random((2, 2), 2, np.random.default_rng(1))
        >>> apply_dilated_S_adjoint(D, (1, 1), embed_V(project_V(F), 2)).norm() < 1e-12
        True

    TESTS::

        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> rng = np.random.default_rng(31)
        >>> systems = [build_dilation(walsh_matrix()), D]
        >>> for N, M in [(2, 5), (3, 4), (3, 8), (4, 6)]:
        ...     systems.append(build_dilation(random_frame_matrix(N, M, rng)))
        >>> all(compatibility_check(S, k) < 1e-10 for S in systems for k in (1, 2))
        True

    """
    assert k >= 1, "the level must be positive"
    Nprime = system.Nprime()
    deviation = 0.0
    for F in GridFunction2D.basis(system.bases(), k):
        g = project_V(F)
        G = embed_V(g, Nprime)
        for p in range(system.size()):
            lhs = apply_dilated_S_adjoint(system, p, G)
            rhs = embed_V(_compressed_adjoint(system, p, g), Nprime)
            deviation = max(deviation, lhs.distance(rhs))
    logger.info("compatibility with the compression at level %s: deviation %.3e", k, deviation)
    return deviation


def compression_check(system, k):
    r"""
    Return the deviation of `P_VS_\omega\mathbf{1}` from the frame elements.

    OUTPUT: the maximum over all words `\omega` over `B\times B'` of length
    `\leq k` of the `L^2` distance between `P_VS_\omega\mathbf{1}` and
    `\tilde S_{\tilde\omega}\mathbf{1}` if `\omega=\iota(\tilde\omega)`, or
    `0` if some digit of `\omega` is not in `\iota(L)`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, random_frame_matrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import compression_check
        >>> r = 1/np.sqrt(2)
        >>> compression_check(build_dilation(FrameMatrix([[1, 1], [r, -r], [r, -r]])), 3) < 1e-10
        True
        >>> rng = np.random.default_rng(15)
        >>> all(compression_check(build_dilation(random_frame_matrix(N, M, rng)), 3) < 1e-10
        ...     for N, M in [(2, 3), (3, 5), (2, 4)])
        True

    """
    Q = system.size()
    N = system.N()
    deviation = 0.0
    for n in range(k + 1):
        for digits in itertools.product(range(Q), repeat=n):
            projected = project_V(dilated_frame_element(system, digits))
            preimages = [system.preimage(p) for p in digits]
            if any(l is None for l in preimages):
                expected = GridFunction1D.zero(N, n)
            else:
                expected = frame_element(system.source(), preimages)
            deviation = max(deviation, projected.distance(expected))
    logger.info("compression of words of length <= %s: deviation %.3e", k, deviation)
    return deviation


def orthonormal_basis_check(system, k):
    r"""
    Return the deviation of the Gram matrix of `\{S_\omega\mathbf{1}\}` from the identity.

    INPUT:

    - ``system`` -- a ``DilationSystem``
    - ``k`` -- a positive integer

    OUTPUT: `\max|G-I|`, where `G` is the Gram matrix of the functions
    `S_\omega\mathbf{1}` for the canonical words `\omega` over `B\times B'` of
    length `\leq k`. There are exactly `(NN')^k` of them, the dimension of
    the space of functions of level `k`, so a small deviation means that
    they are an orthonormal basis of that space.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix, random_frame_matrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import orthonormal_basis_check
        >>> orthonormal_basis_check(build_dilation(walsh_matrix()), 3) < 1e-12
        True
        >>> r = 1/np.sqrt(2)
        >>> orthonormal_basis_check(build_dilation(FrameMatrix([[1, 1], [r, -r], [r, -r]])), 2) < 1e-10
        True

    TESTS::

        >>> rng = np.random.default_rng(44)
        >>> all(orthonormal_basis_check(build_dilation(random_frame_matrix(N, M, rng)), 2) < 1e-10
        ...     for N, M in [(2, 3), (2, 5), (3, 4), (3, 6), (2, 6)])
        True

    """
    assert k >= 1, "the level must be positive"
    Q = system.size()
    words = enumerate_words(Q, k)
    assert len(words) == Q**k
    E = np.array([dilated_frame_element(system, w).refine(k).coefficients() for w in words])
    gram = E.conj() @ E.T / float(Q)**k
    deviation = float(np.max(np.abs(gram - np.eye(len(words)))))
    logger.info("Gram matrix of %s dilated frame elements at level %s: deviation %.3e",
                len(words), k, deviation)
    return deviation


def nu(system, idx, t, tprime):
    r"""
    Return `\nu_{(b,b')}(t,t')`.

    EXAMPLES::

        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import nu
        >>> r = 1/np.sqrt(2)
        >>> D = build_dilation(FrameMatrix([[1, 1], [r, -r], [r, -r]]))
        >>> abs(nu(D, (0, 0), 0, 0) - 1) < 1e-14
        True
        >>> total = sum(abs(nu(D, p, 0.37, 1.91))**2 for p in range(4))
        >>> abs(total - 1) < 1e-10
        True

    At `(0,0)` the value is the mean of `\overline{\alpha_{(b,b'),\cdot}}`::

        >>> all(abs(nu(D, p, 0, 0) - np.conj(D.alpha_padded()[p]).mean()) < 1e-12 for p in range(4))
        True

    """
    p = system.index(idx)
    N, Nprime = system.bases()
    c, cprime = np.divmod(np.arange(system.size()), Nprime)
    phases = np.exp(2j * np.pi * (t * c / N + tprime * cprime / Nprime))
    return complex(np.conj(system.a_matrix()[p]) @ phases / system.size())


def nu_normalization_check(system, points=None, seed=0):
    r"""
    Return `\max|\sum_{(b,b')}|\nu_{(b,b')}(t,t')|^2-1|` over sample points.

    INPUT:

    - ``system`` -- a ``DilationSystem``
    - ``points`` -- a list of pairs `(t,t')`, or ``None`` (default), in which
      case 20 pseudorandom points in `[0,2)^2` are drawn with ``seed``

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import random_frame_matrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.dilation.cuntz_operators import nu_normalization_check
        >>> import numpy as np
        >>> D = build_dilation(random_frame_matrix(3, 7, np.random.default_rng(2)))
        >>> nu_normalization_check(D) < 1e-10
        True

    TESTS::

        >>> from pframe.frames.frame_matrices import FrameMatrix, walsh_matrix
        >>> r = 1/np.sqrt(2)
        >>> seeds = [walsh_matrix(), FrameMatrix([[1, 1], [r, -r], [r, -r]])]
        >>> all(nu_normalization_check(build_dilation(A)) < 1e-10 for A in seeds)
        True
        >>> rng = np.random.default_rng(5)
        >>> all(nu_normalization_check(build_dilation(random_frame_matrix(N, M, rng)), seed=N) < 1e-10
        ...     for N, M in [(2, 3), (3, 5), (4, 8)])
        True

    """
    if points is None:
        points = np.random.default_rng(seed).uniform(0, 2, size=(20, 2))
    deviation = 0.0
    for t, tprime in points:
        total = sum(abs(nu(system, p, t, tprime))**2 for p in range(system.size()))
        deviation = max(deviation, abs(total - 1))
    logger.info("normalization of nu at %s points: deviation %.3e", len(points), deviation)
    return float(deviation)
