# -*- coding: utf-8 -*-
r"""
The command line tool ``pframe``
================================

Subcommands:

- ``validate MATRIX`` -- check that a frame matrix is valid; the report lists
  the violated conditions only, so it is empty for a valid matrix
- ``build [PSI] [--random --n N --m M --seed S] [--fourier N]`` -- construct
  a frame matrix from a Parseval frame of `\mathbb{C}^{N-1}`
- ``frame MATRIX -k K --out DIR`` -- write the frame elements of level
  `\leq k`, one CSV per canonical word, and an ``index.json``
- ``analyze MATRIX SIGNAL --out COEFFS`` -- compute frame coefficients
- ``synthesize MATRIX COEFFS --out SIGNAL`` -- reconstruct a signal
- ``dilate MATRIX [--nprime N'] --out FILE`` -- write the dilation
- ``check MATRIX -k K`` -- run all verifications and write a report

The option ``--format json|csv`` selects the format of the reports of
``validate`` and ``check`` and of the coefficient file of ``analyze``. The
other commands have a single output format: JSON for matrices and
dilations, CSV for functions.

Exit codes: ``0`` on success, ``1`` if a mathematical condition fails (an
invalid matrix, a failed check, mismatching bases), and ``2`` for unusable
input or options (unreadable files, malformed content, `NN'<M`).

EXAMPLES::

    >>> import os, tempfile
    >>> from pframe.io import formats
    >>> from pframe.cli import main
    >>> tmp = tempfile.TemporaryDirectory()
    >>> walsh = os.path.join(tmp.name, "walsh.json")
    >>> main(["build", "--fourier", "2", "--out", walsh])
    0
    >>> main(["validate", walsh, "--out", os.path.join(tmp.name, "report.jsonl")])
    0
    >>> open(os.path.join(tmp.name, "report.jsonl")).read()
    ''
    >>> main(["validate", walsh])
    0
    >>> main(["frame", walsh, "-k", "2", "--out", os.path.join(tmp.name, "frame")])
    0
    >>> index = formats.read_frame_index(os.path.join(tmp.name, "frame", "index.json"))
    >>> index["words"], len(index["files"])
    ([[], [1], [0, 1], [1, 1]], 4)
    >>> main(["check", walsh, "-k", "2", "--out", os.path.join(tmp.name, "check.jsonl")])
    0
    >>> tmp.cleanup()

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

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from pframe.config import DEFAULT_MAX_LEVEL, resolve_tolerance
from pframe.errors import (ConfigurationError, DigitOutOfRange, FormatError,
                           IndexOutOfRange, PframeError)
from pframe.frames.frame_matrices import (build_from_complement, fourier_matrix,
                                          random_parseval_frame)
from pframe.walsh.frame_families import (FrameFamily, analyze, level_parseval_check,
                                         parseval_residual, synthesize)
from pframe.walsh.operators import resolution_of_identity_check
from pframe.dilation.dilation_systems import build_dilation
from pframe.dilation.cuntz_operators import (compatibility_check, compression_check,
                                             cuntz_check, nu_normalization_check,
                                             orthonormal_basis_check)
from pframe.io import formats

logger = logging.getLogger("pframe")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2

INPUT_ERRORS = (FormatError, ConfigurationError, DigitOutOfRange, IndexOutOfRange, OSError)


class CheckFailed(Exception):
    r""" A mathematical condition checked by a subcommand does not hold. """


def _tolerance(args):
    return resolve_tolerance(args.tolerance)


def _check_level(args):
    if args.level < 0:
        raise ConfigurationError("the level must be nonnegative, not %s" % args.level)
    if args.level > args.max_level:
        raise ConfigurationError("level %s exceeds the maximum level %s; raise it with --max-level"
                                 % (args.level, args.max_level))


def _read_valid_matrix(args):
    matrix = formats.read_matrix(args.matrix, _tolerance(args))
    report = matrix.validate()
    if not report.is_valid():
        raise CheckFailed("%s is not valid: %s" % (args.matrix, "; ".join(repr(v) for v in report)))
    return matrix


def _write_report(results, tolerance, args):
    if args.out is None:
        formats.dump_check_report(results, tolerance, sys.stdout, args.format)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as stream:
            formats.dump_check_report(results, tolerance, stream, args.format)


def _word_filename(word):
    if word.is_empty():
        return "word-empty.csv"
    return "word-%s.csv" % "-".join(str(d) for d in word)


def cmd_validate(args):
    tolerance = _tolerance(args)
    matrix = formats.read_matrix(args.matrix, tolerance)
    report = matrix.validate()
    _write_report([(v.condition(), v.deviation()) for v in report], tolerance, args)
    for violation in report:
        logger.error("%s", violation)
    return EXIT_OK if report.is_valid() else EXIT_FAILURE


def cmd_build(args):
    tolerance = _tolerance(args)
    if args.fourier is not None:
        if args.fourier < 2:
            raise ConfigurationError("--fourier needs N >= 2, not %s" % args.fourier)
        matrix = fourier_matrix(args.fourier)
    elif args.random:
        if args.n is None or args.m is None:
            raise ConfigurationError("--random needs --n and --m")
        if not 2 <= args.n <= args.m:
            raise ConfigurationError("--random needs 2 <= n <= m, not n=%s and m=%s" % (args.n, args.m))
        rng = np.random.default_rng(args.seed)
        matrix = build_from_complement(random_parseval_frame(args.n - 1, args.m - 1, rng), args.n, tolerance)
    elif args.psi is not None:
        psi, N = formats.read_psi(args.psi)
        matrix = build_from_complement(psi, N, tolerance)
    else:
        raise ConfigurationError("build needs a psi file, --random or --fourier")
    logger.info("built %s", matrix)
    if args.out is None:
        formats.dump_matrix(matrix, sys.stdout)
    else:
        formats.write_matrix(matrix, args.out)
    return EXIT_OK


def cmd_frame(args):
    _check_level(args)
    matrix = _read_valid_matrix(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    family = FrameFamily(matrix, args.level)
    files = []
    for word in family.words():
        name = _word_filename(word)
        element = family[word]
        formats.write_grid_function(element, out / name, {"word": " ".join(str(d) for d in word)})
        if args.plot_data:
            formats.write_step_data(element, out / name.replace(".csv", ".steps.csv"))
        files.append(name)
    formats.write_frame_index(out / "index.json", args.level, family.words(), files)
    logger.info("wrote %s frame elements to %s", len(files), out)
    return EXIT_OK


def cmd_analyze(args):
    matrix = _read_valid_matrix(args)
    f, _ = formats.read_grid_function(args.signal)
    args.level = f.level()
    _check_level(args)
    coeffs = analyze(matrix, f, tolerance=_tolerance(args))
    residual = parseval_residual(coeffs, f)
    if args.format == "csv":
        formats.write_coefficients_csv(coeffs, args.out, residual)
    else:
        formats.write_coefficients(coeffs, args.out, residual)
    logger.info("wrote %s coefficients, Parseval residual %.3e", len(coeffs), residual)
    return EXIT_OK


def roundtrip_residual(matrix, coeffs, f):
    r"""
    Return `\|c'-c\|`, where `c'` are the frame coefficients of `f`.
    """
    again = analyze(matrix, f)
    words = set(coeffs.words()) | set(again.words())
    return float(np.sqrt(sum(abs(again[w] - coeffs[w])**2 for w in words)))


def cmd_synthesize(args):
    matrix = _read_valid_matrix(args)
    coeffs = formats.read_coefficients(args.coeffs)
    args.level = max(coeffs.source_level(), coeffs.max_length())
    _check_level(args)
    f = synthesize(matrix, coeffs)
    residual = roundtrip_residual(matrix, coeffs, f)
    formats.write_grid_function(f, args.out, {"roundtrip_residual": repr(residual)})
    logger.info("reconstructed a function of level %s, round-trip residual %.3e", f.level(), residual)
    return EXIT_OK


def cmd_dilate(args):
    matrix = _read_valid_matrix(args)
    system = build_dilation(matrix, args.nprime)
    formats.write_dilation(system, args.out)
    logger.info("wrote %s to %s", system, args.out)
    return EXIT_OK


def run_checks(matrix, k, nprime=None):
    r"""
    Return the list of pairs ``(condition, deviation)`` of all checks.

    The checks on the dilation are only run if the matrix is valid.
    """
    results = list(matrix.validate().deviations().items())
    if k >= 1:
        results.append(("resolution_of_identity", resolution_of_identity_check(matrix, k)))
    results.append(("level_parseval", level_parseval_check(matrix, k)))
    if not matrix.is_valid():
        return results
    system = build_dilation(matrix, nprime)
    results.extend(sorted(system.defects().items()))
    if k >= 1:
        results.append(("cuntz", cuntz_check(system, k)))
        results.append(("compatibility", compatibility_check(system, k)))
        results.append(("orthonormal_basis", orthonormal_basis_check(system, k)))
    results.append(("compression", compression_check(system, k)))
    results.append(("nu_normalization", nu_normalization_check(system)))
    return results


def cmd_check(args):
    _check_level(args)
    tolerance = _tolerance(args)
    matrix = formats.read_matrix(args.matrix, tolerance)
    if args.nprime is not None and matrix.N() * args.nprime < matrix.M():
        raise ConfigurationError("N*N' = %s is smaller than M = %s" % (matrix.N() * args.nprime, matrix.M()))
    results = run_checks(matrix, args.level, args.nprime)
    _write_report(results, tolerance, args)
    failed = [(c, d) for c, d in results if not d <= tolerance]
    if failed:
        logger.error("check %s failed with deviation %.3e", failed[0][0], failed[0][1])
        return EXIT_FAILURE
    logger.info("all %s checks passed", len(results))
    return EXIT_OK


def _common_options(defaults):
    r"""
    Return a parent parser with the options shared by all commands.

    The subcommands get ``defaults=False`` so that an option given before
    the command name is not overwritten by the default of the subcommand.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count",
                        default=0 if defaults else argparse.SUPPRESS,
                        help="print progress (-v) or debugging (-vv) messages")
    common.add_argument("--tolerance", type=float,
                        default=None if defaults else argparse.SUPPRESS,
                        help="tolerance of the checks (default: $PFRAME_TOLERANCE or 1e-10)")
    common.add_argument("--max-level", type=int,
                        default=DEFAULT_MAX_LEVEL if defaults else argparse.SUPPRESS,
                        help="largest level accepted (default: %s)" % DEFAULT_MAX_LEVEL)
    return common


def build_parser():
    r"""
    Return the argument parser of ``pframe``.

    TESTS::

        >>> from pframe.cli import build_parser
        >>> args = build_parser().parse_args(["--tolerance", "1e-6", "check", "m.json", "-v"])
        >>> args.tolerance, args.verbose, args.max_level
        (1e-06, 1, 6)

    """
    parser = argparse.ArgumentParser(prog="pframe", parents=[_common_options(True)],
                                     description="Parseval frames of piecewise constant functions")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    common = _common_options(False)

    def add(name, func, help):
        sub = subparsers.add_parser(name, parents=[common], help=help)
        sub.set_defaults(func=func)
        return sub

    sub = add("validate", cmd_validate, "check that a frame matrix is valid")
    sub.add_argument("matrix", help="frame matrix JSON file")
    sub.add_argument("--out", default=None, help="report file (default: standard output)")
    sub.add_argument("--format", choices=["json", "csv"], default="json", help="format of the report")

    sub = add("build", cmd_build, "construct a frame matrix")
    sub.add_argument("psi", nargs="?", default=None, help="JSON file with a Parseval frame of C^(N-1)")
    sub.add_argument("--random", action="store_true", help="use a random Parseval frame")
    sub.add_argument("--n", type=int, default=None, help="number N of columns (with --random)")
    sub.add_argument("--m", type=int, default=None, help="number M of rows (with --random)")
    sub.add_argument("--seed", type=int, default=None, help="seed of the random generator")
    sub.add_argument("--fourier", type=int, default=None, metavar="N",
                     help="the unitary N x N Fourier seed")
    sub.add_argument("--out", default=None, help="output file (default: standard output)")

    sub = add("frame", cmd_frame, "write the frame elements up to a level")
    sub.add_argument("matrix", help="frame matrix JSON file")
    sub.add_argument("-k", "--level", type=int, required=True, help="largest word length")
    sub.add_argument("--out", required=True, help="output directory")
    sub.add_argument("--plot-data", action="store_true", help="also write step data for plotting")

    sub = add("analyze", cmd_analyze, "compute the frame coefficients of a signal")
    sub.add_argument("matrix", help="frame matrix JSON file")
    sub.add_argument("signal", help="signal CSV file")
    sub.add_argument("--out", required=True, help="coefficient file")
    sub.add_argument("--format", choices=["json", "csv"], default="json", help="format of the coefficient file")

    sub = add("synthesize", cmd_synthesize, "reconstruct a signal from frame coefficients")
    sub.add_argument("matrix", help="frame matrix JSON file")
    sub.add_argument("coeffs", help="coefficient JSON file")
    sub.add_argument("--out", required=True, help="signal CSV file")

    sub = add("dilate", cmd_dilate, "write the dilation of a frame matrix")
    sub.add_argument("matrix", help="frame matrix JSON file")
    sub.add_argument("--nprime", type=int, default=None, help="N' (default: the smallest with N*N' >= M)")
    sub.add_argument("--out", required=True, help="output JSON file")

    sub = add("check", cmd_check, "run all verifications")
    sub.add_argument("matrix", help="frame matrix JSON file")
    sub.add_argument("-k", "--level", type=int, default=2, help="level of the checks (default: %(default)s)")
    sub.add_argument("--nprime", type=int, default=None, help="N' of the dilation")
    sub.add_argument("--out", default=None, help="report file (default: standard output)")
    sub.add_argument("--format", choices=["json", "csv"], default="json", help="format of the report")
    return parser


def main(argv=None):
    r"""
    Run ``pframe`` with the arguments ``argv`` and return the exit code.

    EXAMPLES::

        >>> import os, tempfile
        >>> import numpy as np
        >>> from pframe.frames.frame_matrices import FrameMatrix
        >>> from pframe.frames.grid_functions import GridFunction1D
        >>> from pframe.io import formats
        >>> from pframe.cli import main
        >>> tmp = tempfile.TemporaryDirectory()
        >>> path = lambda name: os.path.join(tmp.name, name)
        >>> r = 1/np.sqrt(2)
        >>> formats.write_matrix(FrameMatrix([[1, 1], [r, -r], [r, -r]]), path("m3.json"))
        >>> formats.write_matrix(FrameMatrix([[1, 1], [1, 1]]), path("bad.json"))

    Validation::

        >>> main(["validate", path("m3.json"), "--out", path("r.jsonl")])
        0
        >>> main(["validate", path("bad.json"), "--out", path("r.jsonl")])
        1
        >>> [(e["condition"], e["passed"]) for e in formats.parse_check_report(open(path("r.jsonl")))]
        [('isometry', False)]
        >>> main(["validate", path("bad.json"), "--format", "csv"])
        condition,deviation,passed
        isometry,1.0,false
        1
        >>> _ = open(path("truncated.json"), "w").write('{"N": 2, "M": 2, "alpha": [[1, 1]')
        >>> main(["validate", path("truncated.json")])
        2
        >>> main(["validate", path("missing.json")])
        2

    Frames::

        >>> main(["frame", path("m3.json"), "-k", "1", "--out", path("f1")])
        0
        >>> sorted(os.listdir(path("f1")))
        ['index.json', 'word-1.csv', 'word-2.csv', 'word-empty.csv']
        >>> main(["frame", path("m3.json"), "-k", "0", "--out", path("f0"), "--plot-data"])
        0
        >>> f, meta = formats.read_grid_function(os.path.join(path("f0"), "word-empty.csv"))
        >>> f.coefficients().tolist()
        [(1+0j)]
        >>> main(["frame", path("bad.json"), "-k", "1", "--out", path("f2")])
        1
        >>> main(["frame", path("m3.json"), "-k", "7", "--out", path("f3")])
        2

    Analysis and synthesis of a random signal::

        >>> signal = GridFunction1D.random(2, 2, np.random.default_rng(0))
        >>> formats.write_grid_function(signal, path("s.csv"))
        >>> main(["analyze", path("m3.json"), path("s.csv"), "--out", path("c.json")])
        0
        >>> c = formats.read_coefficients(path("c.json"))
        >>> len(c), c.source_level()
        (9, 2)
        >>> main(["synthesize", path("m3.json"), path("c.json"), "--out", path("s2.csv")])
        0
        >>> g, meta = formats.read_grid_function(path("s2.csv"))
        >>> g.distance(signal) < 1e-10 and float(meta["roundtrip_residual"]) < 1e-10
        True
        >>> formats.write_grid_function(GridFunction1D(3, [1, 2, 3]), path("s3.csv"))
        >>> main(["analyze", path("m3.json"), path("s3.csv"), "--out", path("c3.json")])
        1

    Dilations and checks::

        >>> main(["dilate", path("m3.json"), "--out", path("d.json")])
        0
        >>> formats.read_dilation(path("d.json")).is_valid()
        True
        >>> main(["dilate", path("m3.json"), "--nprime", "1", "--out", path("d1.json")])
        2
        >>> main(["check", path("m3.json"), "-k", "2", "--out", path("check.jsonl")])
        0
        >>> report = formats.parse_check_report(open(path("check.jsonl")))
        >>> all(e["passed"] for e in report), "cuntz" in [e["condition"] for e in report]
        (True, True)
        >>> main(["check", path("m3.json"), "-k", "1", "--format", "csv", "--out", path("check.csv")])
        0
        >>> lines = open(path("check.csv")).read().splitlines()
        >>> lines[0], all(line.endswith(",true") for line in lines[1:])
        ('condition,deviation,passed', True)
        >>> main(["check", path("bad.json"), "-k", "1", "--out", path("check.jsonl")])
        1
        >>> main(["check", path("m3.json"), "--nprime", "1"])
        2
        >>> tmp.cleanup()

    """
    parser = build_parser()
    args = parser.parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s")
    logging.getLogger("pframe").setLevel(level)
    try:
        return args.func(args)
    except INPUT_ERRORS as e:
        logger.error("%s", e)
        return EXIT_INPUT
    except (CheckFailed, PframeError) as e:
        logger.error("%s", e)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
