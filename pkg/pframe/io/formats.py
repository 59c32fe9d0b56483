# -*- coding: utf-8 -*-
r"""
File formats
============

Reading and writing the objects of pframe. All JSON files are UTF-8, keys
are lowercase except for the mathematical names `N`, `M` and `N'`. Complex
numbers are written as pairs ``[re, im]``; a bare number is accepted as a
real entry when reading.

- Frame matrices: ``{"N": int, "M": int, "alpha": [[[re, im], ...], ...]}``,
  rows of `\alpha` in order.
- Parseval frames for `\mathbb{C}^{N-1}` (input of ``pframe build``):
  ``{"N": int, "psi": [[[re, im], ...], ...]}`` with `N-1` columns.
- Functions on `[0,1]`: CSV with a first line ``# base=N level=k``, optional
  further lines ``# key=value``, an optional column header ``index,re,im``,
  and one row ``index,re,im`` per cell.
- Frame coefficients: ``{"source_level": k, "coeffs": [{"word": [...], "re":
  r, "im": i}, ...]}`` sorted by word, optionally with ``"parseval_residual"``.
- Dilations: ``{"Nprime": int, "iota": [[b, b'], ...], "a": [[[re, im], ...],
  ...], "source": <frame matrix>}``.
- Frame listings: ``{"level": k, "words": [[...], ...], "files": [...]}``.
- Check reports: one JSON object ``{"condition": name, "deviation": float,
  "passed": bool}`` per line, or CSV with the columns
  ``condition,deviation,passed``.

Parse errors raise ``FormatError`` with a message naming the offending
field.

EXAMPLES::

    >>> import io
    >>> from pframe.frames.frame_matrices import walsh_matrix
    >>> from pframe.io.formats import dump_matrix, load_matrix
    >>> stream = io.StringIO()
    >>> dump_matrix(walsh_matrix(), stream)
    >>> stream.getvalue()
    '{"N": 2, "M": 2, "alpha": [[[1.0, 0.0], [1.0, 0.0]], [[1.0, 0.0], [-1.0, 0.0]]]}\n'
    >>> load_matrix(io.StringIO('{"N": 2, "M": 2, "alpha": [[1, 1], [1, [-1, 0]]]}')).is_valid()
    True
    >>> load_matrix(io.StringIO('{"N": 2, "M": 2, "alpha": [[1, 1], [1, "x"]]}'))
    Traceback (most recent call last):
    ...
    pframe.errors.FormatError: alpha[1][1]: expected a number or [re, im], got 'x'

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

import csv
import json
import logging
import numbers
from pathlib import Path

import numpy as np

from pframe.dilation.dilation_systems import build_dilation
from pframe.errors import FormatError, PframeError
from pframe.frames.frame_matrices import FrameMatrix
from pframe.frames.grid_functions import GridFunction1D, step_breakpoints
from pframe.frames.words import Word
from pframe.walsh.frame_families import CoefficientSet

logger = logging.getLogger(__name__)


def complex_to_json(z):
    r""" Return the pair ``[re, im]`` of a complex number. """
    z = complex(z)
    return [z.real, z.imag]


def complex_from_json(value, field):
    r"""
    Return the complex number encoded by ``value``.

    INPUT:

    - ``value`` -- a number or a pair ``[re, im]`` of numbers
    - ``field`` -- the name of the field, used in error messages

    EXAMPLES::

        >>> from pframe.io.formats import complex_from_json
        >>> complex_from_json([1, -2], "x"), complex_from_json(3, "x")
        ((1-2j), (3+0j))
        >>> complex_from_json([1], "alpha[0][0]")
        Traceback (most recent call last):
        ...
        pframe.errors.FormatError: alpha[0][0]: expected a number or [re, im], got [1]

    """
    if isinstance(value, numbers.Real) and not isinstance(value, bool):
        return complex(value)
    if (isinstance(value, list) and len(value) == 2
            and all(isinstance(x, numbers.Real) and not isinstance(x, bool) for x in value)):
        return complex(value[0], value[1])
    raise FormatError("%s: expected a number or [re, im], got %r" % (field, value))


def _matrix_from_json(rows, field, columns=None):
    if not isinstance(rows, list) or len(rows) == 0:
        raise FormatError("%s: expected a nonempty list of rows" % field)
    result = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise FormatError("%s[%s]: expected a list" % (field, i))
        if columns is not None and len(row) != columns:
            raise FormatError("%s[%s]: expected %s entries, got %s" % (field, i, columns, len(row)))
        result.append([complex_from_json(x, "%s[%s][%s]" % (field, i, j)) for j, x in enumerate(row)])
    return np.array(result, dtype=complex)


def _integer(data, key, minimum=0):
    if key not in data:
        raise FormatError("%s: missing" % key)
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise FormatError("%s: expected an integer >= %s, got %r" % (key, minimum, value))
    return value


def _load_json(stream):
    try:
        data = json.load(stream)
    except ValueError as e:
        raise FormatError("file: not valid JSON (%s)" % e)
    if not isinstance(data, dict):
        raise FormatError("file: expected a JSON object")
    return data


def _dump_json(data, stream):
    json.dump(data, stream)
    stream.write("\n")


def _read(path, load):
    with open(path, encoding="utf-8") as stream:
        return load(stream)


def _write(path, dump, *args):
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="") as stream:
        dump(*args, stream)
    logger.debug("wrote %s", path)


# ---------------------------------------------------------------------------
#  frame matrices and Parseval frames

def matrix_to_json(matrix):
    r""" Return the JSON object of a ``FrameMatrix``. """
    return {"N": matrix.N(), "M": matrix.M(),
            "alpha": [[complex_to_json(a) for a in row] for row in matrix.alpha()]}


def matrix_from_json(data, tolerance=None):
    r"""
    Return the ``FrameMatrix`` encoded by the JSON object ``data``.

    The dimensions must agree with the entries. The matrix is not validated.
    """
    N = _integer(data, "N", 1)
    M = _integer(data, "M", 1)
    alpha = _matrix_from_json(data.get("alpha"), "alpha", N)
    if alpha.shape[0] != M:
        raise FormatError("alpha: expected M=%s rows, got %s" % (M, alpha.shape[0]))
    return FrameMatrix(alpha, tolerance)


def dump_matrix(matrix, stream):
    _dump_json(matrix_to_json(matrix), stream)


def load_matrix(stream, tolerance=None):
    return matrix_from_json(_load_json(stream), tolerance)


def write_matrix(matrix, path):
    _write(path, dump_matrix, matrix)


def read_matrix(path, tolerance=None):
    r""" Return the ``FrameMatrix`` stored in the JSON file ``path``. """
    return _read(path, lambda stream: load_matrix(stream, tolerance))


def psi_from_json(data):
    r"""
    Return the pair ``(psi, N)`` encoded by ``data``.

    EXAMPLES::

        >>> from pframe.io.formats import psi_from_json
        >>> psi, N = psi_from_json({"N": 2, "psi": [[0.5], [[0, 0.5]]]})
        >>> N, psi.shape, complex(psi[1, 0])
        (2, (2, 1), 0.5j)
        >>> psi_from_json({"N": 3, "psi": [[1]]})
        Traceback (most recent call last):
        ...
        pframe.errors.FormatError: psi[0]: expected 2 entries, got 1

    """
    N = _integer(data, "N", 2)
    return _matrix_from_json(data.get("psi"), "psi", N - 1), N


def read_psi(path):
    r""" Return the pair ``(psi, N)`` stored in the JSON file ``path``. """
    return _read(path, lambda stream: psi_from_json(_load_json(stream)))


# ---------------------------------------------------------------------------
#  functions on [0,1]

def dump_grid_function(f, stream, metadata=None):
    r"""
    Write ``f`` as CSV to ``stream``.

    INPUT:

    - ``f`` -- a ``GridFunction1D``
    - ``stream`` -- a text stream
    - ``metadata`` -- a dictionary of further header entries (default: none)

    EXAMPLES::

        >>> import io
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.io.formats import dump_grid_function
        >>> stream = io.StringIO()
        >>> dump_grid_function(GridFunction1D(2, [1, 2j]), stream, {"note": "x"})
        >>> print(stream.getvalue())
        # base=2 level=1
        # note=x
        index,re,im
        0,1.0,0.0
        1,0.0,2.0
        <BLANKLINE>

    """
    stream.write("# base=%s level=%s\n" % (f.base(), f.level()))
    for key, value in (metadata or {}).items():
        stream.write("# %s=%s\n" % (key, value))
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["index", "re", "im"])
    for b, value in enumerate(f.coefficients()):
        writer.writerow([b, float(value.real), float(value.imag)])


def load_grid_function(stream):
    r"""
    Return the pair ``(f, metadata)`` read from the CSV ``stream``.

    EXAMPLES::

        >>> import io
        >>> from pframe.io.formats import load_grid_function
        >>> f, meta = load_grid_function(io.StringIO("# base=2 level=1\n# a=1\n0,1,0\n1,2,0.5\n"))
        >>> f.coefficients().tolist(), meta
        ([(1+0j), (2+0.5j)], {'a': '1'})
        >>> load_grid_function(io.StringIO("# base=2 level=2\n0,1,0\n"))
        Traceback (most recent call last):
        ...
        pframe.errors.FormatError: rows: a function of base 2 and level 2 needs 4 rows, got 1
        >>> load_grid_function(io.StringIO("0,1,0\n"))
        Traceback (most recent call last):
        ...
        pframe.errors.FormatError: header: expected '# base=N level=k', got '0,1,0'

    """
    header = stream.readline().strip()
    fields = dict(item.split("=", 1) for item in header.lstrip("#").split() if "=" in item)
    try:
        if not header.startswith("#"):
            raise ValueError
        base = int(fields["base"])
        level = int(fields["level"])
    except (KeyError, ValueError):
        raise FormatError("header: expected '# base=N level=k', got %r" % header)
    if base < 2 or level < 0:
        raise FormatError("header: base must be at least 2 and level nonnegative, got %r" % header)
    metadata = {}
    values = []
    for line in stream:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line.lstrip("#").strip().partition("=")
            metadata[key.strip()] = value.strip()
            continue
        row = next(csv.reader([line]))
        if row == ["index", "re", "im"]:
            continue
        field = "row %s" % len(values)
        if len(row) != 3:
            raise FormatError("%s: expected index,re,im, got %r" % (field, line))
        try:
            index, re, im = int(row[0]), float(row[1]), float(row[2])
        except ValueError:
            raise FormatError("%s: expected index,re,im, got %r" % (field, line))
        if index != len(values):
            raise FormatError("%s: expected index %s, got %s" % (field, len(values), index))
        values.append(complex(re, im))
    if len(values) != base**level:
        raise FormatError("rows: a function of base %s and level %s needs %s rows, got %s"
                          % (base, level, base**level, len(values)))
    return GridFunction1D(base, values, level), metadata


def write_grid_function(f, path, metadata=None):
    _write(path, lambda stream: dump_grid_function(f, stream, metadata))


def read_grid_function(path):
    r""" Return the pair ``(f, metadata)`` stored in the CSV file ``path``. """
    return _read(path, load_grid_function)


def write_step_data(f, path):
    r"""
    Write the step data of ``f`` as CSV with columns ``x0,x1,re,im``.

    See :func:`pframe.frames.grid_functions.step_breakpoints`.
    """
    def dump(stream):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["x0", "x1", "re", "im"])
        writer.writerows(step_breakpoints(f))
    _write(path, dump)


# ---------------------------------------------------------------------------
#  frame coefficients

def coefficients_to_json(coeffs, parseval_residual=None):
    r"""
    Return the JSON object of a ``CoefficientSet``.

    EXAMPLES::

        >>> from pframe.walsh.frame_families import CoefficientSet
        >>> from pframe.io.formats import coefficients_to_json, coefficients_from_json
        >>> data = coefficients_to_json(CoefficientSet({(0, 1): 2, (): 1j}, 2))
        >>> data
        {'source_level': 2, 'coeffs': [{'word': [], 're': 0.0, 'im': 1.0}, {'word': [0, 1], 're': 2.0, 'im': 0.0}]}
        >>> coefficients_from_json(data).items()
        [(word (), 1j), (word (0, 1), (2+0j))]
        >>> coefficients_from_json({"source_level": 1, "coeffs": [{"word": [1, 0], "re": 1, "im": 0}]})
        Traceback (most recent call last):
        ...
        pframe.errors.FormatError: coeffs[0].word: word (1, 0) ends in 0

    """
    data = {"source_level": coeffs.source_level(),
            "coeffs": [{"word": list(w.digits()), "re": c.real, "im": c.imag} for w, c in coeffs.items()]}
    if parseval_residual is not None:
        data["parseval_residual"] = float(parseval_residual)
    return data


def coefficients_from_json(data):
    r""" Return the ``CoefficientSet`` encoded by ``data``. """
    level = _integer(data, "source_level")
    entries = data.get("coeffs")
    if not isinstance(entries, list):
        raise FormatError("coeffs: expected a list")
    coeffs = {}
    for i, entry in enumerate(entries):
        field = "coeffs[%s]" % i
        if not isinstance(entry, dict):
            raise FormatError("%s: expected an object" % field)
        digits = entry.get("word")
        if not isinstance(digits, list) or not all(isinstance(d, int) and d >= 0 for d in digits):
            raise FormatError("%s.word: expected a list of nonnegative integers" % field)
        word = Word(digits)
        if not word.is_canonical():
            raise FormatError("%s.word: %s ends in 0" % (field, word))
        if word in coeffs:
            raise FormatError("%s.word: %s appears twice" % (field, word))
        coeffs[word] = complex_from_json([entry.get("re"), entry.get("im", 0.0)], field)
    return CoefficientSet(coeffs, level)


def dump_coefficients(coeffs, stream, parseval_residual=None):
    _dump_json(coefficients_to_json(coeffs, parseval_residual), stream)


def write_coefficients(coeffs, path, parseval_residual=None):
    _write(path, lambda stream: dump_coefficients(coeffs, stream, parseval_residual))


def read_coefficients(path):
    r""" Return the ``CoefficientSet`` stored in the JSON file ``path``. """
    return _read(path, lambda stream: coefficients_from_json(_load_json(stream)))


def write_coefficients_csv(coeffs, path, parseval_residual=None):
    r"""
    Write a ``CoefficientSet`` as CSV with columns ``word,re,im``.

    The digits of a word are separated by spaces. The header lines are
    ``# source_level=k`` and, if given, ``# parseval_residual=...``.

    EXAMPLES::

        >>> import os, tempfile
        >>> from pframe.walsh.frame_families import CoefficientSet
        >>> from pframe.io.formats import write_coefficients_csv
        >>> tmp = tempfile.TemporaryDirectory()
        >>> path = os.path.join(tmp.name, "c.csv")
        >>> write_coefficients_csv(CoefficientSet({(): 1, (0, 2): 0.5j}, 2), path)
        >>> print(open(path).read())
        # source_level=2
        word,re,im
        ,1.0,0.0
        0 2,0.0,0.5
        <BLANKLINE>
        >>> tmp.cleanup()

    """
    def dump(stream):
        stream.write("# source_level=%s\n" % coeffs.source_level())
        if parseval_residual is not None:
            stream.write("# parseval_residual=%r\n" % float(parseval_residual))
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["word", "re", "im"])
        for w, c in coeffs.items():
            writer.writerow([" ".join(str(d) for d in w), c.real, c.imag])
    _write(path, dump)


# ---------------------------------------------------------------------------
#  dilations

def dilation_to_json(system):
    r"""
    Return the JSON object of a ``DilationSystem``.

    EXAMPLES::

        >>> from pframe.frames.frame_matrices import walsh_matrix
        >>> from pframe.dilation.dilation_systems import build_dilation
        >>> from pframe.io.formats import dilation_to_json, dilation_from_json
        >>> data = dilation_to_json(build_dilation(walsh_matrix(), 2))
        >>> data["Nprime"], data["iota"]
        (2, [[0, 0], [1, 0]])
        >>> D = dilation_from_json(data)
        >>> D.Nprime(), D.is_valid()
        (2, True)

    """
    return {"Nprime": system.Nprime(),
            "iota": [list(pair) for pair in system.iota()],
            "a": [[complex_to_json(x) for x in row] for row in system.a_matrix()],
            "source": matrix_to_json(system.source())}


def dilation_from_json(data, tolerance=None):
    r"""
    Return the ``DilationSystem`` encoded by ``data``.

    The vectors `t` and `\tilde e` are recomputed from the source matrix; the
    stored matrix `a` is used as it is, so the checks apply to it.
    """
    Nprime = _integer(data, "Nprime", 1)
    if not isinstance(data.get("source"), dict):
        raise FormatError("source: expected a frame matrix object")
    source = matrix_from_json(data["source"], tolerance)
    try:
        system = build_dilation(source, Nprime, tolerance)
    except PframeError as e:
        raise FormatError("source: %s" % e)
    iota = data.get("iota")
    if iota != [list(pair) for pair in system.iota()]:
        raise FormatError("iota: expected %s, got %r" % ([list(p) for p in system.iota()], iota))
    Q = system.size()
    a = _matrix_from_json(data.get("a"), "a", Q)
    if a.shape != (Q, Q):
        raise FormatError("a: expected %s rows, got %s" % (Q, a.shape[0]))
    return system.with_a_matrix(a)


def write_dilation(system, path):
    _write(path, lambda stream: _dump_json(dilation_to_json(system), stream))


def read_dilation(path, tolerance=None):
    r""" Return the ``DilationSystem`` stored in the JSON file ``path``. """
    return _read(path, lambda stream: dilation_from_json(_load_json(stream), tolerance))


# ---------------------------------------------------------------------------
#  frame listings and check reports

def write_frame_index(path, level, words, files):
    r"""
    Write the listing of the files written by ``pframe frame``.
    """
    data = {"level": level, "words": [list(w.digits()) for w in words], "files": list(files)}
    _write(path, lambda stream: _dump_json(data, stream))


def read_frame_index(path):
    r""" Return the listing written by :func:`write_frame_index` as a dictionary. """
    data = _read(path, _load_json)
    for key in ("level", "words", "files"):
        if key not in data:
            raise FormatError("%s: missing" % key)
    return data


def check_report_line(condition, deviation, tolerance):
    r"""
    Return one line of a check report.

    EXAMPLES::

        >>> from pframe.io.formats import check_report_line
        >>> check_report_line("cuntz", 3e-16, 1e-10)
        '{"condition": "cuntz", "deviation": 3e-16, "passed": true}'

    """
    deviation = float(deviation)
    return json.dumps({"condition": condition, "deviation": deviation,
                       "passed": bool(deviation <= tolerance)})


def dump_check_report(results, tolerance, stream, format="json"):
    r"""
    Write the pairs ``(condition, deviation)`` of ``results`` to ``stream``.

    INPUT:

    - ``results`` -- a list of pairs ``(condition, deviation)``
    - ``tolerance`` -- the threshold deciding ``passed``
    - ``stream`` -- a text stream
    - ``format`` -- ``"json"`` (default) for JSON lines, or ``"csv"`` for
      the columns ``condition,deviation,passed``

    Nothing at all is written if ``results`` is empty.

    EXAMPLES::

        >>> import io
        >>> from pframe.io.formats import dump_check_report
        >>> stream = io.StringIO()
        >>> dump_check_report([("cuntz", 0.0), ("isometry", 0.5)], 1e-10, stream, "csv")
        >>> print(stream.getvalue())
        condition,deviation,passed
        cuntz,0.0,true
        isometry,0.5,false
        <BLANKLINE>
        >>> stream = io.StringIO()
        >>> dump_check_report([], 1e-10, stream, "csv")
        >>> stream.getvalue()
        ''

    """
    if not results:
        return
    if format == "json":
        for condition, deviation in results:
            stream.write(check_report_line(condition, deviation, tolerance) + "\n")
    elif format == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["condition", "deviation", "passed"])
        for condition, deviation in results:
            deviation = float(deviation)
            writer.writerow([condition, repr(deviation), "true" if deviation <= tolerance else "false"])
    else:
        raise ValueError("unknown report format %r" % (format,))


def parse_check_report(stream):
    r"""
    Return the list of dictionaries of a check report.
    """
    results = []
    for i, line in enumerate(stream):
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
        except ValueError as e:
            raise FormatError("line %s: not valid JSON (%s)" % (i + 1, e))
        if not isinstance(entry, dict) or "condition" not in entry or "deviation" not in entry:
            raise FormatError("line %s: expected an object with condition and deviation" % (i + 1))
        results.append(entry)
    return results
