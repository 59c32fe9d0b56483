# -*- coding: utf-8 -*-
import numpy as np

from pframe.frames.frame_matrices import fourier_matrix, random_frame_matrix
from pframe.frames.grid_functions import GridFunction1D
from pframe.walsh.frame_families import FrameFamily, analyze, synthesize
from pframe.cli import run_checks


class FourierFamily:
    r"""
    Generation of the frame of level 6 for the Fourier matrix with `N=3`.

    TESTS::

        >>> import pframe.benchmarks.frames
        >>> pframe.benchmarks.frames.FourierFamily().time_frame_family()
        729

    """
    def time_frame_family(self):
        family = FrameFamily(fourier_matrix(3), 6)
        family.synthesis_matrix()
        return len(family)


class RandomAnalysis:
    r"""
    Analysis and synthesis of a random function of level 4 with respect to a
    random `7\times 3` frame matrix.

    TESTS::

        >>> import pframe.benchmarks.frames
        >>> benchmark = pframe.benchmarks.frames.RandomAnalysis()
        >>> benchmark.setup()
        >>> benchmark.time_roundtrip()
        True

    """
    def setup(self):
        rng = np.random.default_rng(0)
        self.matrix = random_frame_matrix(3, 7, rng)
        self.f = GridFunction1D.random(3, 4, rng)
        self.family = FrameFamily(self.matrix, 4)
        self.family.synthesis_matrix()

    def time_roundtrip(self):
        coeffs = analyze(self.matrix, self.f, self.family)
        return synthesize(self.matrix, coeffs, self.family).is_close(self.f, 1e-9)


class CheckBattery:
    r"""
    The full battery of checks of ``pframe check`` at level 2 for a random
    `5\times 2` frame matrix.

    TESTS::

        >>> import pframe.benchmarks.frames
        >>> pframe.benchmarks.frames.CheckBattery().time_run_checks()
        True

    """
    def time_run_checks(self):
        matrix = random_frame_matrix(2, 5, np.random.default_rng(2))
        return all(d <= 1e-9 for c, d in run_checks(matrix, 2))
