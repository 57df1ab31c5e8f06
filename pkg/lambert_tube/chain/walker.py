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

"""This sub-module runs the Markov chain of reflection points.

The scalar functions (:func:`init_chain`, :func:`step_chain`,
:func:`run_to_exit`, :func:`run_ladder`) follow a single light ray step by
step. The batch functions (:func:`simulate_exits`, :func:`simulate_ladders`,
:func:`accumulate_visits`) advance many independent rays in lock-step and
are what the command line tools use.
"""


import logging

import numpy as np

from lambert_tube.errors import StepBudgetExhaustedError
from lambert_tube.geometry import as_dimension, uniform_sphere
from lambert_tube.geometry import sample_angles, flight_vector, rotation_to
from lambert_tube.geometry import rotate_batch
from lambert_tube.chain.common import ChainState, ExitRecord, LadderRecord
from lambert_tube.chain.common import VisitHistogram, ExitBatch, LadderBatch
from lambert_tube.chain.steps import LambertianSteps


_logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 1000000


def _check_level(s):
    if not s > 0:
        raise ValueError('Level s must be positive, got {}.'.format(s))


def _check_max_steps(max_steps):
    if int(max_steps) != max_steps or max_steps < 1:
        raise ValueError('max_steps must be a positive integer, got '
                         '{}.'.format(max_steps))


def exit_geometry(s, prev_axial, prev_cross, new_axial, new_cross):
    """Computes the undershoot, overshoot, exit point and exit direction of
    flights crossing level `s`. Works on scalars or on arrays with a
    leading batch axis.

    Args:
        s (:obj:`float`): The level.
        prev_axial: Axial coordinate(s) of the reflection before the level.
        prev_cross: Cross-section coordinates of that reflection.
        new_axial: Axial coordinate(s) of the first reflection beyond `s`.
        new_cross: Cross-section coordinates of that reflection.

    Returns:
        :obj:`tuple`: `(undershoot, overshoot, exit_point, exit_dir)`.
    """

    prev_axial = np.asarray(prev_axial, dtype=float)
    new_axial = np.asarray(new_axial, dtype=float)
    prev_cross = np.asarray(prev_cross, dtype=float)
    new_cross = np.asarray(new_cross, dtype=float)

    undershoot = s - prev_axial
    overshoot = new_axial - s
    frac = undershoot / (undershoot + overshoot)

    chord = new_cross - prev_cross
    exit_point = prev_cross + frac[..., None] * chord

    displacement = np.concatenate(
        [(new_axial - prev_axial)[..., None], chord], axis=-1)
    norm = np.linalg.norm(displacement, axis=-1, keepdims=True)
    exit_dir = displacement / norm

    return undershoot, overshoot, exit_point, exit_dir


def init_chain(dim, rng):
    """Starts a chain at axial position 0 with a uniform cross-section
    point.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        rng (:obj:`numpy.random.Generator`): The random stream.

    Returns:
        :obj:`~lambert_tube.chain.common.ChainState`: The initial state.
    """

    return ChainState(0.0, uniform_sphere(dim, rng), 0)


def step_chain(state, rng, angles=None, construction='householder'):
    """Advances the chain by one reflection.

    Args:
        state (:obj:`~lambert_tube.chain.common.ChainState`): The current
            state.
        rng (:obj:`numpy.random.Generator`): The random stream.
        angles (:obj:`~lambert_tube.geometry.ReflectionAngles`, optional):
            Angles to use instead of sampling them. Defaults to `None`.
        construction (:obj:`str`, optional): The rotation construction.
            Defaults to `'householder'`.

    Returns:
        :obj:`~lambert_tube.chain.common.ChainState`: The next state.
    """

    if angles is None:
        angles = sample_angles(state.cross.shape[0] + 1, rng)

    flight = flight_vector(angles)
    rotation = rotation_to(state.cross, construction)

    return ChainState(state.axial + flight.axial, rotation(flight.landing),
                      state.step_index + 1)


def run_to_exit(dim, s, rng, max_steps=DEFAULT_MAX_STEPS,
                construction='householder'):
    """Follows one ray until its first reflection beyond level `s`.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        s (:obj:`float`): The level, positive.
        rng (:obj:`numpy.random.Generator`): The random stream.
        max_steps (:obj:`int`, optional): Step budget. Defaults to
            :const:`DEFAULT_MAX_STEPS`.
        construction (:obj:`str`, optional): The rotation construction.
            Defaults to `'householder'`.

    Returns:
        :obj:`~lambert_tube.chain.common.ExitRecord`: The exit record.

    Raises:
        :obj:`~lambert_tube.errors.StepBudgetExhaustedError`: If the level
            is not passed within `max_steps` reflections.
    """

    _check_level(s)
    _check_max_steps(max_steps)

    state = init_chain(dim, rng)

    while state.step_index < max_steps:
        prev = state
        state = step_chain(prev, rng, construction=construction)

        if state.axial > s:
            under, over, point, direction = exit_geometry(
                s, prev.axial, prev.cross, state.axial, state.cross)
            return ExitRecord(state.step_index, float(over), float(under),
                              prev.axial, prev.cross, point, direction)

    raise StepBudgetExhaustedError(max_steps, s)


def run_ladder(dim, rng, max_steps=DEFAULT_MAX_STEPS):
    """Follows the axial walk from 0 until its first strictly positive
    value.

    Returns:
        :obj:`~lambert_tube.chain.common.LadderRecord`: The ladder height
        and the undershoot below 0.

    Raises:
        :obj:`~lambert_tube.errors.StepBudgetExhaustedError`: If level 0 is
            not passed within `max_steps` reflections.
    """

    _check_max_steps(max_steps)

    dim = as_dimension(dim)
    position = 0.0

    for _ in range(int(max_steps)):
        step = flight_vector(sample_angles(dim, rng)).axial
        if position + step > 0.0:
            return LadderRecord(position + step, -position)
        position += step

    raise StepBudgetExhaustedError(max_steps, 0.0)


def simulate_exits(dim, s, n, rng, max_steps=DEFAULT_MAX_STEPS,
                   construction='householder', sampler=None):
    """Follows `n` independent rays until they pass level `s`.

    Rays that do not pass the level within `max_steps` reflections are left
    out and counted in :attr:`ExitBatch.excluded`.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        s (:obj:`float`): The level, positive.
        n (:obj:`int`): Number of rays.
        rng (:obj:`numpy.random.Generator`): The random stream.
        max_steps (:obj:`int`, optional): Step budget per ray. Defaults to
            :const:`DEFAULT_MAX_STEPS`.
        construction (:obj:`str`, optional): The rotation construction.
            Defaults to `'householder'`.
        sampler (:obj:`~lambert_tube.chain.steps.StepSampler`, optional):
            The step source. Defaults to Lambertian steps.

    Returns:
        :obj:`~lambert_tube.chain.common.ExitBatch`: The exits, in the
        order the rays were started.
    """

    _check_level(s)
    _check_max_steps(max_steps)

    dim = as_dimension(dim)
    sampler = LambertianSteps(dim) if sampler is None else sampler
    m = dim.sphere_dim

    axial = np.zeros(n)
    cross = uniform_sphere(dim, rng, n)

    n_s = np.zeros(n, dtype=np.int64)
    prev_axial = np.zeros(n)
    prev_cross = np.zeros((n, m))
    new_axial = np.zeros(n)
    new_cross = np.zeros((n, m))

    active = np.arange(n)
    step = 0

    while active.size > 0 and step < max_steps:
        step += 1
        advance, landing = sampler.flights(rng, active.size)
        moved_axial = axial[active] + advance
        moved_cross = rotate_batch(cross[active], landing, construction)

        crossed = moved_axial > s
        if np.any(crossed):
            idx = active[crossed]
            n_s[idx] = step
            prev_axial[idx] = axial[idx]
            prev_cross[idx] = cross[idx]
            new_axial[idx] = moved_axial[crossed]
            new_cross[idx] = moved_cross[crossed]

        staying = ~crossed
        active = active[staying]
        axial[active] = moved_axial[staying]
        cross[active] = moved_cross[staying]

    done = np.ones(n, dtype=bool)
    done[active] = False

    if active.size:
        _logger.warning('%d of %d walks did not pass level %g within %d steps',
                        active.size, n, s, max_steps)

    under, over, point, direction = exit_geometry(
        s, prev_axial[done], prev_cross[done], new_axial[done],
        new_cross[done])

    return ExitBatch(n_s[done], over, under, prev_axial[done],
                     prev_cross[done], point, direction,
                     excluded=int(active.size))


def simulate_ladders(dim, n, rng, max_steps=DEFAULT_MAX_STEPS, sampler=None):
    """Follows `n` independent axial walks from 0 until their first strictly
    positive value.

    Returns:
        :obj:`~lambert_tube.chain.common.LadderBatch`: The ladder heights
        and undershoots, in the order the walks were started.
    """

    _check_max_steps(max_steps)

    dim = as_dimension(dim)
    sampler = LambertianSteps(dim) if sampler is None else sampler

    position = np.zeros(n)
    o0 = np.zeros(n)
    u0 = np.zeros(n)

    active = np.arange(n)
    step = 0

    while active.size > 0 and step < max_steps:
        step += 1
        moved = position[active] + sampler.axial(rng, active.size)

        passed = moved > 0.0
        idx = active[passed]
        o0[idx] = moved[passed]
        u0[idx] = -position[idx]

        active = active[~passed]
        position[active] = moved[~passed]

    done = np.ones(n, dtype=bool)
    done[active] = False

    if active.size:
        _logger.warning('%d of %d ladder walks did not pass 0 within %d steps',
                        active.size, n, max_steps)

    return LadderBatch(o0[done], u0[done], int(active.size))


def _check_bins(bins):
    edges = np.asarray(bins, dtype=float)

    if edges.ndim != 1 or edges.shape[0] < 2:
        raise ValueError('At least two bin edges are required.')
    if np.any(np.diff(edges) <= 0):
        raise ValueError('Bin edges must be strictly increasing.')
    if edges[-1] >= 0 or not np.all(np.isfinite(edges)):
        raise ValueError('Bin edges must be finite and negative.')

    return edges


def accumulate_visits(dim, s, bins, n_traj, rng, max_steps=DEFAULT_MAX_STEPS,
                      sampler=None):
    """Counts the reflections of `n_traj` walks that fall in each bin below
    level `s` before the walk first passes `s`.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        s (:obj:`float`): The level, positive.
        bins (array-like): Increasing negative bin edges in units of `s`.
            Bin `i` is `[bins[i] * s, bins[i + 1] * s)` relative to `s`.
        n_traj (:obj:`int`): Number of walks.
        rng (:obj:`numpy.random.Generator`): The random stream.
        max_steps (:obj:`int`, optional): Step budget per walk. Defaults to
            :const:`DEFAULT_MAX_STEPS`.
        sampler (:obj:`~lambert_tube.chain.steps.StepSampler`, optional):
            The step source. Defaults to Lambertian steps.

    Returns:
        :obj:`~lambert_tube.chain.common.VisitHistogram`: The counts over
        all walks. Walks still below `s` after `max_steps` reflections
        contribute the visits made within the budget.
    """

    _check_level(s)
    _check_max_steps(max_steps)
    edges = _check_bins(bins)

    dim = as_dimension(dim)
    sampler = LambertianSteps(dim) if sampler is None else sampler
    scaled = edges * s
    n_bins = edges.shape[0] - 1

    counts = np.zeros((n_traj, n_bins), dtype=np.int64)
    position = np.zeros(n_traj)
    active = np.arange(n_traj)

    def _count(rows, values):
        idx = np.searchsorted(scaled, values - s, side='right') - 1
        inside = (idx >= 0) & (idx < n_bins)
        np.add.at(counts, (rows[inside], idx[inside]), 1)

    _count(active, position)
    step = 0

    while active.size > 0 and step < max_steps:
        step += 1
        moved = position[active] + sampler.axial(rng, active.size)

        staying = moved <= s
        active = active[staying]
        position[active] = moved[staying]
        _count(active, position[active])

    if active.size:
        _logger.warning('%d of %d visit walks did not pass level %g within %d '
                        'steps; their visits are truncated', active.size,
                        n_traj, s, max_steps)

    return VisitHistogram(float(s), edges, counts.sum(axis=0), n_traj,
                          (counts.astype(float) ** 2).sum(axis=0),
                          int(active.size))
