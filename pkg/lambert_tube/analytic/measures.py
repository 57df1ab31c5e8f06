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

"""This sub-module contains the limiting laws of the point where a ray
started far below the plane `{x_1 = 0}` crosses it: the measure on the
unit disc of the cross section, its version on the cube `[-1, 1]^(d-1)`,
and the large-depth asymptotics of the plane intersection.

Regions of the cross-section space are described by :obj:`Ball`,
:obj:`Box`, :obj:`Rotated` and :obj:`Indicator` objects.
"""


from abc import ABC, abstractmethod
import logging
import math

import numpy as np

from lambert_tube.errors import RegionNotContainedError
from lambert_tube.analytic.common import MeasureValue, TauInftyMeasure
from lambert_tube.geometry import as_dimension, rotation_to


_logger = logging.getLogger(__name__)

DEFAULT_MC_SAMPLES = 200000

_CONTAINMENT_TOL = 1e-12


def ball_volume(m, radius=1.0):
    """Returns the Lebesgue measure of a ball of the given radius in
    `R^m`.
    """

    return math.pi ** (0.5 * m) / math.gamma(0.5 * m + 1.0) * radius ** m


class Region(ABC):
    """Base class for regions of the cross-section space `R^(d-1)`.
    """

    @property
    @abstractmethod
    def ndim(self):
        """:obj:`int`: The dimension of the space the region lives in.
        """

        raise NotImplementedError

    @abstractmethod
    def contains(self, points):
        """Returns a boolean array telling which rows of `points` lie in the
        region.
        """

        raise NotImplementedError

    @abstractmethod
    def inside_disc(self):
        """Returns whether the region is contained in the unit disc.
        """

        raise NotImplementedError

    def volume(self):
        """Returns the Lebesgue measure of the region.

        Raises:
            :obj:`NotImplementedError`: If the region has no closed form.
        """

        raise NotImplementedError

    def centroid(self):
        """Returns the centre of mass of the region.

        Raises:
            :obj:`NotImplementedError`: If the region has no closed form.
        """

        raise NotImplementedError


class Ball(Region):
    """The closed ball `B_r(center)`.

    Args:
        center (array-like): The centre.
        radius (:obj:`float`): The radius, non-negative.
    """

    def __init__(self, center, radius):
        if radius < 0:
            raise ValueError('Radius must be non-negative.')
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)

    def __repr__(self):
        return 'Ball({}, {})'.format(self.center.tolist(), self.radius)

    @property
    def ndim(self):
        return self.center.shape[0]

    def contains(self, points):
        points = np.asarray(points, dtype=float)
        return np.linalg.norm(points - self.center, axis=-1) <= self.radius

    def inside_disc(self):
        reach = np.linalg.norm(self.center) + self.radius
        return reach <= 1.0 + _CONTAINMENT_TOL

    def volume(self):
        return ball_volume(self.ndim, self.radius)

    def centroid(self):
        return self.center


class Box(Region):
    """The closed box `[lo_1, hi_1] x ... x [lo_m, hi_m]`.

    Args:
        lo (array-like): Lower corner.
        hi (array-like): Upper corner, not below `lo`.
    """

    def __init__(self, lo, hi):
        self.lo = np.asarray(lo, dtype=float)
        self.hi = np.asarray(hi, dtype=float)
        if self.lo.shape != self.hi.shape or np.any(self.hi < self.lo):
            raise ValueError('Invalid box corners.')

    def __repr__(self):
        return 'Box({}, {})'.format(self.lo.tolist(), self.hi.tolist())

    @property
    def ndim(self):
        return self.lo.shape[0]

    def contains(self, points):
        points = np.asarray(points, dtype=float)
        return np.all((points >= self.lo) & (points <= self.hi), axis=-1)

    def inside_disc(self):
        far = np.maximum(np.abs(self.lo), np.abs(self.hi))
        return np.linalg.norm(far) <= 1.0 + _CONTAINMENT_TOL

    def inside_cube(self):
        """Returns whether the box lies in `[-1, 1]^m`.
        """

        return bool(np.all(self.lo >= -1.0) and np.all(self.hi <= 1.0))

    def volume(self):
        return float(np.prod(self.hi - self.lo))

    def centroid(self):
        return 0.5 * (self.lo + self.hi)


class Rotated(Region):
    """The image `U^(y*)(A)` of a region `A` under the transpose of the
    operator mapping the base point to `target`.

    Args:
        region (:obj:`Region`): The region `A`.
        target (array-like): A point of the unit sphere.
        construction (:obj:`str`, optional): The rotation construction.
            Defaults to `'householder'`.
    """

    def __init__(self, region, target, construction='householder'):
        self.region = region
        self.operator = rotation_to(target, construction)

    def __repr__(self):
        return 'Rotated({!r}, {})'.format(self.region,
                                          self.operator.target.tolist())

    @property
    def ndim(self):
        return self.region.ndim

    def contains(self, points):
        return self.region.contains(self.operator(points))

    def inside_disc(self):
        return self.region.inside_disc()

    def volume(self):
        return self.region.volume()

    def centroid(self):
        return self.operator.adjoint @ self.region.centroid()


class Indicator(Region):
    """A region given by a membership function, inside a bounding box. Only
    Monte Carlo evaluation is available for it.

    Args:
        func (:obj:`callable`): Maps an `(n, m)` array of points to a
            boolean array of length `n`.
        bounds (:obj:`Box`): A box containing the region.
    """

    def __init__(self, func, bounds):
        self.func = func
        self.bounds = bounds

    def __repr__(self):
        return 'Indicator({!r})'.format(self.bounds)

    @property
    def ndim(self):
        return self.bounds.ndim

    def contains(self, points):
        points = np.asarray(points, dtype=float)
        return self.bounds.contains(points) & np.asarray(self.func(points),
                                                         dtype=bool)

    def inside_disc(self):
        return self.bounds.inside_disc()


def centered_ball(dim, radius):
    """Returns the ball of the given radius centred at the origin of the
    cross section.
    """

    return Ball(np.zeros(as_dimension(dim).sphere_dim), radius)


def touching_ball(dim, radius):
    """Returns the ball of the given radius centred at
    `(0, ..., 0, -1 + radius)`, touching the sphere at the base point.
    """

    center = np.zeros(as_dimension(dim).sphere_dim)
    center[-1] = radius - 1.0
    return Ball(center, radius)


def uniform_disc(dim, rng, size):
    """Samples points uniformly in the unit disc of the cross section.
    """

    m = as_dimension(dim).sphere_dim
    gauss = rng.standard_normal((size, m))
    norms = np.linalg.norm(gauss, axis=1, keepdims=True)
    radii = rng.random((size, 1)) ** (1.0 / m)
    return gauss / np.where(norms > 0.0, norms, 1.0) * radii


def _check_region(dim, region):
    if region.ndim != dim.sphere_dim:
        raise ValueError('Region lives in R^{}, expected R^{}.'.format(
            region.ndim, dim.sphere_dim))
    if not region.inside_disc():
        raise RegionNotContainedError(region)


def _tau_infty_mc(dim, region, rng, samples):
    points = uniform_disc(dim, rng, samples)
    # norm * vol(disc) is 1, so the density average is a plain mean.
    weights = region.contains(points) * (1.0 + points[:, -1])
    value = float(np.mean(weights))
    error = 3.0 * float(np.std(weights, ddof=1)) / math.sqrt(samples)
    return MeasureValue(value, error, 'mc')


def tau_infty(dim, region, rng=None, samples=DEFAULT_MC_SAMPLES):
    """Returns the limiting exit measure of a region of the unit disc, with
    density `Gamma((d + 1) / 2) / pi^((d - 1) / 2) * (1 + x_d)`.

    Balls, boxes and rotated images of them are evaluated exactly from
    their volume and centroid, the density being linear. With a random
    stream the density is integrated by Monte Carlo instead, which works
    for any region.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        region (:obj:`Region`): A region of the unit disc.
        rng (:obj:`numpy.random.Generator`, optional): If given, use Monte
            Carlo. Defaults to `None`.
        samples (:obj:`int`, optional): Monte Carlo sample size.

    Returns:
        :obj:`~lambert_tube.analytic.common.MeasureValue`: The measure and
        its error (three standard errors for Monte Carlo, 0 otherwise).

    Raises:
        :obj:`~lambert_tube.errors.RegionNotContainedError`: If the region
            is not inside the unit disc.
        :obj:`ValueError`: If no random stream is given for a region
            without closed form.
    """

    dim = as_dimension(dim)
    _check_region(dim, region)

    if rng is not None:
        return _tau_infty_mc(dim, region, rng, samples)

    try:
        volume = region.volume()
        centroid = region.centroid()
    except NotImplementedError:
        raise ValueError('Region {!r} has no closed form; pass a random '
                         'stream for Monte Carlo.'.format(region))

    norm = TauInftyMeasure(dim).norm
    return MeasureValue(norm * volume * (1.0 + float(centroid[-1])), 0.0,
                        'exact')


def rotated_tau_infty(dim, region, target):
    """Returns the measure of `U^(y*)(A)` through the closed form
    `lambda(A) (1 - y . c(A)) / lambda(D)`, with `c(A)` the centroid of `A`
    and `D` the unit disc.
    """

    dim = as_dimension(dim)
    _check_region(dim, region)

    target = np.asarray(getattr(target, 'coords', target), dtype=float)
    return (region.volume() * (1.0 - float(target @ region.centroid()))
            / ball_volume(dim.sphere_dim))


def rho_infty(dim, box):
    """Returns the limiting measure of a box of `[-1, 1]^(d-1)` under the
    law of the plane intersection conditioned on the cube, with density
    `2^(1-d) (1 + x_d)`.

    Raises:
        :obj:`ValueError`: If the box is not inside the cube.
    """

    dim = as_dimension(dim)
    if box.ndim != dim.sphere_dim or not box.inside_cube():
        raise ValueError('Box {!r} is not inside [-1, 1]^{}.'.format(
            box, dim.sphere_dim))

    return (box.volume() * (1.0 + float(box.centroid()[-1]))
            / 2.0 ** dim.sphere_dim)


def corner_box(dim, t):
    """Returns the box `[-1, -1 + t_2] x ... x [-1, -1 + t_d]`.
    """

    dim = as_dimension(dim)
    t = np.asarray(t, dtype=float)
    if t.shape != (dim.sphere_dim,) or np.any((t < 0) | (t > 2)):
        raise ValueError('Expected {} side lengths in [0, 2].'.format(
            dim.sphere_dim))
    return Box(np.full(dim.sphere_dim, -1.0), t - 1.0)


def box_limit_probability(dim, t):
    """Returns the limit `t_2 ... t_(d-1) t_d^2 / 2^d` of the probability
    that the plane intersection falls in :func:`corner_box` given that it
    falls in the cube.
    """

    dim = as_dimension(dim)
    corner_box(dim, t)
    t = np.asarray(t, dtype=float)
    return float(np.prod(t[:-1]) * t[-1] ** 2 / 2.0 ** dim.d)


def plane_hit_cube_asymptotic(dim, u):
    """Returns `2^(d-2) / (u^d pi^(d-2))`, the large-`u` equivalent of the
    probability that the plane intersection falls in `[-1, 1]^(d-1)`.
    """

    d = as_dimension(dim).d
    return 2.0 ** (d - 2) / (u ** d * math.pi ** (d - 2))


def plane_hit_density_asymptotic(dim, u, point=None):
    """Returns `(1 + x_d) / (2 u^d pi^(d-2))`, the large-`u` equivalent of the
    density of the plane intersection at `point` (the origin by default).
    """

    d = as_dimension(dim).d
    last = 0.0 if point is None else float(np.asarray(point)[-1])
    return (1.0 + last) / (2.0 * u ** d * math.pi ** (d - 2))
