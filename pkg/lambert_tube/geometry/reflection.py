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

"""This sub-module samples Lambertian reflection angles and converts them
into flight displacements, chords and plane intersections.

All batch functions work on arrays of angles where `theta` has shape `(n,)`
and `phis` has shape `(n, d - 2)`. The scalar functions wrap them for a
single set of :obj:`~lambert_tube.geometry.common.ReflectionAngles`.
"""


import logging
import math

import numpy as np

from lambert_tube.errors import DegenerateGrazingError
from lambert_tube.geometry.common import as_dimension, ReflectionAngles
from lambert_tube.geometry.common import FlightVector, PlaneHit


_logger = logging.getLogger(__name__)

_HALF_PI = 0.5 * math.pi
_MIN_DENOMINATOR = 1e-300


def _open_uniform(rng, low, high, size):
    # Redraw exact zeros so that `low` itself is never produced.
    u = rng.random(size)
    zeros = u == 0.0
    while np.any(zeros):
        u[zeros] = rng.random(int(np.count_nonzero(zeros)))
        zeros = u == 0.0
    return low + (high - low) * u


def sample_angle_batch(dim, rng, size):
    """Samples `size` independent sets of reflection angles.

    The polar angle is `arcsin(V)` with `V` uniform on (-1, 1) and each
    azimuthal angle is uniform on (-pi/2, pi/2).

    Args:
        dim (:obj:`~lambert_tube.geometry.common.Dimension` or :obj:`int`):
            The ambient dimension.
        rng (:obj:`numpy.random.Generator`): The random stream.
        size (:obj:`int`): Number of angle sets.

    Returns:
        :obj:`tuple`: A pair `(theta, phis)` of arrays with shapes `(size,)`
        and `(size, d - 2)`.
    """

    dim = as_dimension(dim)
    theta = np.arcsin(_open_uniform(rng, -1.0, 1.0, size))
    phis = _open_uniform(rng, -_HALF_PI, _HALF_PI,
                         size * dim.n_phis).reshape(size, dim.n_phis)
    return theta, phis


def sample_angles(dim, rng):
    """Samples one set of reflection angles.

    Args:
        dim (:obj:`~lambert_tube.geometry.common.Dimension` or :obj:`int`):
            The ambient dimension.
        rng (:obj:`numpy.random.Generator`): The random stream.

    Returns:
        :obj:`~lambert_tube.geometry.common.ReflectionAngles`: The sampled
        angles.
    """

    theta, phis = sample_angle_batch(dim, rng, 1)
    return ReflectionAngles(theta[0], phis[0])


def _chord_terms(theta, phis):
    theta = np.asarray(theta, dtype=float)
    phis = np.asarray(phis, dtype=float)

    if np.any(np.abs(theta) >= _HALF_PI):
        raise DegenerateGrazingError(
            'Polar angle at +/-pi/2 gives a ray tangent to the wall.')

    sin_t = np.sin(theta)
    cos_t = np.cos(theta)
    cos_p = np.cos(phis)
    total = np.prod(cos_p, axis=-1)
    denom = 1.0 - (sin_t * total) ** 2

    if np.any(denom < _MIN_DENOMINATOR):
        raise DegenerateGrazingError(
            'Chord denominator vanished for a grazing direction.')

    chord = 2.0 * cos_t / denom
    return sin_t, cos_t, cos_p, total, chord


def flight_batch(theta, phis):
    """Computes the flight displacements for a batch of angles.

    Args:
        theta (:obj:`numpy.ndarray`): Polar angles, shape `(n,)`.
        phis (:obj:`numpy.ndarray`): Azimuthal angles, shape `(n, d - 2)`.

    Returns:
        :obj:`tuple`: A pair `(coords, chord)` where `coords` has shape
        `(n, d)` and `chord` has shape `(n,)`.

    Raises:
        :obj:`~lambert_tube.errors.DegenerateGrazingError`: If any direction
            is tangent to the wall.
    """

    phis = np.atleast_2d(np.asarray(phis, dtype=float))
    sin_t, cos_t, cos_p, total, chord = _chord_terms(theta, phis)
    n, n_phis = phis.shape

    # suffix[:, k] is the product of cos(Phi_j) for j > k.
    suffix = np.ones_like(cos_p)
    if n_phis > 1:
        suffix[:, :-1] = np.cumprod(cos_p[:, :0:-1], axis=1)[:, ::-1]

    radial = chord * sin_t
    coords = np.empty((n, n_phis + 2))
    coords[:, 0] = radial * total
    coords[:, 1:-1] = radial[:, None] * suffix * np.sin(phis)
    coords[:, -1] = chord * cos_t

    return coords, chord


def chord_length(angles):
    """Returns the length of the chord traced by one reflected flight.

    Args:
        angles (:obj:`~lambert_tube.geometry.common.ReflectionAngles`): The
            reflection angles.

    Returns:
        :obj:`float`: The chord length, positive.

    Raises:
        :obj:`~lambert_tube.errors.DegenerateGrazingError`: If the direction
            is tangent to the wall.
    """

    chord = _chord_terms(np.array([angles.theta]), np.array([angles.phis]))[4]
    return float(chord[0])


def flight_vector(angles):
    """Returns the displacement of one flight starting at the base point.

    Args:
        angles (:obj:`~lambert_tube.geometry.common.ReflectionAngles`): The
            reflection angles.

    Returns:
        :obj:`~lambert_tube.geometry.common.FlightVector`: The displacement
        and its chord length.
    """

    coords, chord = flight_batch(np.array([angles.theta]),
                                 np.array([angles.phis]))
    return FlightVector(coords[0], float(chord[0]))


def axial_batch(theta, phis):
    """Computes only the axial advance of a batch of flights.

    Returns:
        :obj:`numpy.ndarray`: Axial advances, shape `(n,)`.
    """

    sin_t, _, _, total, chord = _chord_terms(theta, np.atleast_2d(phis))
    return chord * sin_t * total


def axial_step(angles):
    """Returns the axial advance of one flight.

    Args:
        angles (:obj:`~lambert_tube.geometry.common.ReflectionAngles`): The
            reflection angles.

    Returns:
        :obj:`float`: The signed axial advance.
    """

    return float(axial_batch(np.array([angles.theta]),
                             np.array([angles.phis]))[0])


def plane_hit_batch(u, theta, phis):
    """Intersects rays leaving the base point at axial depth `-u` with the
    plane `{x_1 = 0}`.

    Rays with a non-positive polar angle move away from the plane and miss.

    Args:
        u (:obj:`float`): The depth of the starting point, positive.
        theta (:obj:`numpy.ndarray`): Polar angles, shape `(n,)`.
        phis (:obj:`numpy.ndarray`): Azimuthal angles, shape `(n, d - 2)`.

    Returns:
        :obj:`tuple`: A pair `(coords, hit)` where `coords` has shape
        `(n, d - 1)` with `nan` rows for misses and `hit` is a boolean mask.
    """

    if u <= 0:
        raise ValueError('Depth u must be positive, got {}.'.format(u))

    theta = np.asarray(theta, dtype=float)
    phis = np.atleast_2d(np.asarray(phis, dtype=float))
    n, n_phis = phis.shape

    hit = theta > 0.0
    coords = np.full((n, n_phis + 1), np.nan)

    if np.any(hit):
        th = theta[hit]
        ph = phis[hit]
        prefix = np.cumprod(np.cos(ph), axis=1)
        coords[hit, :-1] = u * np.sin(ph) / prefix
        coords[hit, -1] = u / (np.tan(th) * prefix[:, -1]) - 1.0

    return coords, hit


def plane_hit(u, angles):
    """Intersects one ray leaving the base point at axial depth `-u` with
    the plane `{x_1 = 0}`.

    Returns:
        :obj:`~lambert_tube.geometry.common.PlaneHit`: The intersection, or
        `None` if the ray misses the plane.
    """

    coords, hit = plane_hit_batch(u, np.array([angles.theta]),
                                  np.array([angles.phis]))
    if not hit[0]:
        return None
    return PlaneHit(coords[0])


def sample_plane_hits(dim, u, size, rng):
    """Samples the plane intersections of `size` Lambertian rays leaving the
    base point at axial depth `-u`.

    Returns:
        :obj:`tuple`: A pair `(coords, hit)` as in :func:`plane_hit_batch`.
    """

    theta, phis = sample_angle_batch(dim, rng, size)
    _logger.debug('Sampled %d plane hits at depth %g', size, u)
    return plane_hit_batch(u, theta, phis)
