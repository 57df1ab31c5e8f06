# -*- coding: utf-8 -*-

# MIT License
#
# Copyright 2026 The lambert_tube developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""This sub-module contains the limit laws of the exit data at a distant
level: the ladder functional `Lambda`, which is the limiting law of
`U_s / (U_s + O_s)`, the conditioned `t^d` law, the scaling limit of the
renewal measure below the level and the brightness constants derived from
it.
"""


import logging
import math

import numpy as np

from lambert_tube.analytic.common import LambdaEstimate
from lambert_tube.analytic.step import positive_part_mean
from lambert_tube.analytic.quadrature import DEFAULT_REL_TOL
from lambert_tube.chain import DEFAULT_MAX_STEPS, simulate_ladders
from lambert_tube.estimators import ratio_ci, DEFAULT_BATCHES
from lambert_tube.geometry import as_dimension


_logger = logging.getLogger(__name__)

MIN_LADDERS = 10000


def _check_t_grid(t_grid):
    t = np.asarray(t_grid, dtype=float).ravel()

    if t.shape[0] == 0:
        raise ValueError('Empty t grid.')
    if np.any((t < 0.0) | (t > 1.0)):
        raise ValueError('t grid must lie in [0, 1].')
    if np.any(np.diff(t) <= 0.0):
        raise ValueError('t grid must be strictly increasing.')

    return t


def lambda_from_ladders(ladders, t_grid, batches=DEFAULT_BATCHES):
    """Estimates `Lambda(t) = E[(t (U0 + O0) - U0)^+] / E[O0]` on a grid
    from simulated ladder variables.

    Args:
        ladders (:obj:`~lambert_tube.chain.LadderBatch`): The ladders.
        t_grid (array-like): Strictly increasing points of [0, 1].
        batches (:obj:`int`, optional): Number of batches for the standard
            errors. Defaults to 20.

    Returns:
        :obj:`~lambert_tube.analytic.common.LambdaEstimate`: The estimate,
        exactly 0 at `t = 0` and exactly 1 at `t = 1`.
    """

    t = _check_t_grid(t_grid)
    o0 = np.asarray(ladders.o0, dtype=float)
    u0 = np.asarray(ladders.u0, dtype=float)
    total = o0 + u0

    values = np.empty(t.shape[0])
    std_errs = np.empty(t.shape[0])

    for i, ti in enumerate(t):
        if ti == 0.0:
            values[i], std_errs[i] = 0.0, 0.0
        elif ti == 1.0:
            values[i], std_errs[i] = 1.0, 0.0
        else:
            est = ratio_ci(np.maximum(ti * total - u0, 0.0), o0, batches)
            values[i], std_errs[i] = est.mean, est.std_err

    return LambdaEstimate(t, values, std_errs, float(o0.mean()),
                          float(u0.mean()), int(o0.shape[0]),
                          int(ladders.excluded))


def lambda_estimate(dim, t_grid, n_ladders, rng, max_steps=DEFAULT_MAX_STEPS,
                    batches=DEFAULT_BATCHES):
    """Simulates `n_ladders` ladder walks and estimates the ladder
    functional on `t_grid`.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        t_grid (array-like): Strictly increasing points of [0, 1].
        n_ladders (:obj:`int`): Number of ladders, at least 10000.
        rng (:obj:`numpy.random.Generator`): The random stream.
        max_steps (:obj:`int`, optional): Step budget per ladder walk.
        batches (:obj:`int`, optional): Number of batches for the standard
            errors. Defaults to 20.

    Returns:
        :obj:`~lambert_tube.analytic.common.LambdaEstimate`: The estimate.

    Raises:
        :obj:`ValueError`: If fewer than 10000 ladders are requested.
    """

    if n_ladders < MIN_LADDERS:
        raise ValueError('Lambda estimates need at least {} ladders, got '
                         '{}.'.format(MIN_LADDERS, n_ladders))

    ladders = simulate_ladders(dim, n_ladders, rng, max_steps)
    _logger.info('Estimating Lambda from %d ladders (%d excluded)',
                 ladders.size, ladders.excluded)

    return lambda_from_ladders(ladders, t_grid, batches)


def lambda_slopes(dim, estimate, rel_tol=DEFAULT_REL_TOL):
    """Returns the one-sided derivatives of `Lambda` at the ends of [0, 1],
    `E[X^+] / E[O0]` at 0 and `E[O0 + U0] / E[O0]` at 1, with `E[X^+]` from
    quadrature and the ladder moments from `estimate`.
    """

    at_zero = positive_part_mean(dim, rel_tol) / estimate.mean_o0
    at_one = (estimate.mean_o0 + estimate.mean_u0) / estimate.mean_o0
    return at_zero, at_one


def centered_exit_bound(lam, r):
    """Returns `Lambda((1 + r) / 2) - Lambda((1 - r) / 2)`, an upper bound
    for the limiting probability that the exit point falls in the centred
    ball of radius `r`.

    Args:
        lam (:obj:`callable`): The ladder functional, for instance a
            :obj:`~lambert_tube.analytic.common.LambdaEstimate`.
        r (:obj:`float` or array-like): Radii in [0, 1].
    """

    r = np.asarray(r, dtype=float)
    if np.any((r < 0.0) | (r > 1.0)):
        raise ValueError('Radius must lie in [0, 1].')

    return lam(0.5 * (1.0 + r)) - lam(0.5 * (1.0 - r))


def conditional_ratio_limit(dim, t):
    """Returns `t^d`, the limiting law of `U_s / (U_s + O_s)` given that the
    last reflection before the exit is at distance at least `epsilon s`
    below the level.
    """

    t = np.asarray(t, dtype=float)
    if np.any((t < 0.0) | (t > 1.0)):
        raise ValueError('t must lie in [0, 1].')

    return t ** as_dimension(dim).d


def _check_interval(a1, a2, e_x2):
    if not 0.0 <= a1 <= a2:
        raise ValueError('Expected 0 <= a1 <= a2, got {} and {}.'.format(a1,
                                                                        a2))
    if e_x2 <= 0.0:
        raise ValueError('Second moment must be positive.')


def renewal_limit(a1, a2, e_x2):
    """Returns `(a2^2 - a1^2) / (2 E[X^2])`.
    """

    _check_interval(a1, a2, e_x2)
    return (a2 ** 2 - a1 ** 2) / (2.0 * e_x2)


def _min_one_primitive(a):
    return 0.5 * a * a if a <= 1.0 else a - 0.5


def green_function_limit(a1, a2, e_x2):
    """Returns the limit of `M_s(-s a2, -s a1) / s^2` for a walk started at
    0 and stopped when it first passes `s`:
    `(2 / E[X^2]) * int_{a1}^{a2} min(a, 1) da`. This is the Green function
    of a Brownian motion of variance `E[X^2]` killed at `s`, integrated over
    the interval.
    """

    _check_interval(a1, a2, e_x2)
    return 2.0 / e_x2 * (_min_one_primitive(a2) - _min_one_primitive(a1))


def brightness_constant(dim, r1, r2, e_x2):
    """Returns the constant of the brightness singularity for the annulus of
    directions between radii `r1` and `r2`:
    `pi^(-(d - 3) / 2) / (4 Gamma((d + 1) / 2) E[X^2])
    * (r2^(d - 2) - r1^(d - 2)) / (d - 2)`.

    Raises:
        :obj:`ValueError`: Unless `0 < r1 <= r2 < 1` and `e_x2 > 0`.
    """

    d = as_dimension(dim).d

    if not 0.0 < r1 <= r2 < 1.0:
        raise ValueError('Expected 0 < r1 <= r2 < 1, got {} and {}.'.format(
            r1, r2))
    if e_x2 <= 0.0:
        raise ValueError('Second moment must be positive.')

    prefactor = math.pi ** (-0.5 * (d - 3)) / (
        4.0 * math.gamma(0.5 * (d + 1)) * e_x2)
    return prefactor * (r2 ** (d - 2) - r1 ** (d - 2)) / (d - 2)


def rim_brightness_constant(dim, e_o0, e_u0_plus_o0):
    """Returns the brightness constant at the rim of the opening,
    `Gamma((d + 1) / 2) / ((d - 1) pi^((d - 1) / 2))
    * E[O0 + U0] / E[O0]`.
    """

    d = as_dimension(dim).d

    if e_o0 <= 0.0 or e_u0_plus_o0 <= 0.0:
        raise ValueError('Ladder moments must be positive.')

    base = math.gamma(0.5 * (d + 1)) / ((d - 1) * math.pi ** (0.5 * (d - 1)))
    return base * e_u0_plus_o0 / e_o0
