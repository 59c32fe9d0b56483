# -*- coding: utf-8 -*-
r"""
Words over a finite alphabet
============================

A *word* is a finite string `\omega=\omega_1\dots\omega_n` of digits in an
alphabet `\{0,\dots,Q-1\}`. Words index the products of operators
`S_{\omega_1}\cdots S_{\omega_n}`. Since `S_0\mathbf{1}=\mathbf{1}`, a word
and the same word followed by some zeros give the same vector
`S_\omega\mathbf{1}`. We therefore call a word *canonical* if it is empty or
its last digit is nonzero. The set of canonical words over `\{0,\dots,M-1\}`
is denoted `\Omega_M`.

Words of length `\leq k` in `\Omega_M` are counted by

.. MATH::

    1 + \sum_{j=1}^k (M-1)M^{j-1} = M^k.

For words over `B\times B'` (used by the dilation) the digit `(b,b')` is
stored as the single integer `b\cdot N' + b'`, so that `(0,0)` is `0`.

EXAMPLES::

    >>> from pframe.frames.words import Word, enumerate_words
    >>> w = Word([0, 1, 0, 0])
    >>> w
    word (0, 1, 0, 0)
    >>> w.is_canonical()
    False
    >>> w.canonical()
    word (0, 1)
    >>> enumerate_words(2, 2)
    [word (), word (1,), word (0, 1), word (1, 1)]
    >>> len(enumerate_words(3, 2))
    9

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

from pframe.errors import DigitOutOfRange


class Word(object):
    r"""
    Return the word with the given digits.

    INPUT:

    - ``digits`` -- an iterable of nonnegative integers
    - ``alphabet_size`` -- a positive integer `Q`, or ``None`` (default: ``None``)

    OUTPUT: the word `\omega` with digits ``digits``. If ``alphabet_size`` is
    given, every digit must lie in `\{0,\dots,Q-1\}`; otherwise
    ``DigitOutOfRange`` is raised.

    Words are immutable and hashable. They are ordered first by length and
    then lexicographically.

    EXAMPLES::

        >>> from pframe.frames.words import Word
        >>> Word((2, 1), alphabet_size=3).digits()
        (2, 1)
        >>> Word([3], alphabet_size=3)
        Traceback (most recent call last):
        ...
        pframe.errors.DigitOutOfRange: digit 3 is not in {0,...,2}
        >>> Word([1, 1]) < Word([0, 0, 1]) and Word([0, 1]) < Word([1, 1])
        True
        >>> Word([]).is_canonical() and len(Word([])) == 0
        True

    """

    __slots__ = ("_digits",)

    def __init__(self, digits, alphabet_size=None):
        digits = tuple(int(d) for d in digits)
        for d in digits:
            if d < 0 or (alphabet_size is not None and d >= alphabet_size):
                if alphabet_size is None:
                    raise DigitOutOfRange("digit %s is negative" % d)
                raise DigitOutOfRange("digit %s is not in {0,...,%s}" % (d, alphabet_size - 1))
        object.__setattr__(self, "_digits", digits)

    def __setattr__(self, name, value):
        raise AttributeError("words are immutable")

    def __repr__(self):
        return "word %s" % (self._digits,)

    def __len__(self):
        return len(self._digits)

    def __iter__(self):
        return iter(self._digits)

    def __getitem__(self, i):
        return self._digits[i]

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._digits == other._digits

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._digits)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def sort_key(self):
        r""" Return the key of the length-then-lexicographic order. """
        return (len(self._digits), self._digits)

    def digits(self):
        r""" Return the digits as a tuple. """
        return self._digits

    def is_empty(self):
        return len(self._digits) == 0

    def is_canonical(self):
        r"""
        Return whether this word is empty or does not end in `0`.
        """
        return len(self._digits) == 0 or self._digits[-1] != 0

    def canonical(self):
        r"""
        Return the canonical word obtained by stripping trailing zeros.

        EXAMPLES::

            >>> from pframe.frames.words import Word
            >>> w = Word([1, 0, 2, 0, 0])
            >>> w.canonical()
            word (1, 0, 2)
            >>> w.canonical().canonical() == w.canonical()
            True
            >>> Word([0, 0]).canonical()
            word ()

        """
        digits = self._digits
        n = len(digits)
        while n > 0 and digits[n - 1] == 0:
            n -= 1
        if n == len(digits):
            return self
        return Word(digits[:n])

    def check_alphabet(self, alphabet_size):
        r"""
        Raise ``DigitOutOfRange`` unless all digits lie in `\{0,\dots,Q-1\}`.
        """
        Word(self._digits, alphabet_size)
        return self


def enumerate_words(M, k):
    r"""
    Return the canonical words of length at most `k`.

    INPUT:

    - ``M`` -- the alphabet size, an integer `\geq 2`
    - ``k`` -- a nonnegative integer

    OUTPUT: the list of all words over `\{0,\dots,M-1\}` of length `\leq k`
    which do not end in `0`, including the empty word, in
    length-then-lexicographic order. It has exactly `M^k` entries.

    EXAMPLES::

        >>> from pframe.frames.words import enumerate_words
        >>> enumerate_words(2, 1)
        [word (), word (1,)]
        >>> enumerate_words(3, 0)
        [word ()]

    TESTS::

        >>> all(len(enumerate_words(M, k)) == M**k for M in range(2, 6) for k in range(5))
        True
        >>> W = enumerate_words(4, 3)
        >>> W == sorted(W) and len(set(W)) == len(W)
        True

    """
    assert M >= 2, "the alphabet must have at least two letters"
    assert k >= 0, "the length must be nonnegative"
    words = [Word(())]
    for n in range(1, k + 1):
        for head in itertools.product(range(M), repeat=n - 1):
            for last in range(1, M):
                words.append(Word(head + (last,)))
    return words


def all_words(M, n):
    r"""
    Return all words of length exactly `n`, canonical or not, in
    lexicographic order.

    EXAMPLES::

        >>> from pframe.frames.words import all_words
        >>> all_words(2, 2)
        [word (0, 0), word (0, 1), word (1, 0), word (1, 1)]

    """
    return [Word(digits) for digits in itertools.product(range(M), repeat=n)]
