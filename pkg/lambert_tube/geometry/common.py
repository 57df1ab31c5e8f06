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

"""This sub-module contains the domain types shared by the geometric
primitives: the ambient dimension, the angles driving a single reflected
flight, points of the cross-section sphere, flight displacements, rotations
of the cross-section and plane intersections.
"""


from collections import namedtuple
import math

import numpy as np

from lambert_tube.errors import InvalidDimensionError


_HALF_PI = 0.5 * math.pi


class Dimension(namedtuple('Dimension', ['d'])):
    """A named tuple holding the number of ambient dimensions of the tube.

    Attributes:
        d (:obj:`int`): The ambient dimension. Must be at least 3.

    Raises:
        :obj:`~lambert_tube.errors.InvalidDimensionError`: If `d` is not an
            integer greater than or equal to 3.
    """

    __slots__ = ()

    def __new__(cls, d):
        if isinstance(d, Dimension):
            return d

        if isinstance(d, bool) or int(d) != d or d < 3:
            raise InvalidDimensionError(d)

        return super(Dimension, cls).__new__(cls, int(d))

    @property
    def sphere_dim(self):
        """:obj:`int`: The number of coordinates of a cross-section point,
        i.e. `d - 1`.
        """

        return self.d - 1

    @property
    def n_phis(self):
        """:obj:`int`: The number of azimuthal angles, i.e. `d - 2`.
        """

        return self.d - 2


def as_dimension(dim):
    """Coerces an integer or a :obj:`Dimension` into a :obj:`Dimension`.
    """

    return Dimension(dim)


class ReflectionAngles(namedtuple('ReflectionAngles', ['theta', 'phis'])):
    """A named tuple containing the angles that drive one reflected flight.

    Attributes:
        theta (:obj:`float`): Angle between the reflected ray and the inner
            normal, in (-pi/2, pi/2).
        phis (:obj:`tuple` of :obj:`float`): The `d - 2` azimuthal angles
            Phi_1, ..., Phi_{d-2}, each in (-pi/2, pi/2).
    """

    __slots__ = ()

    def __new__(cls, theta, phis):
        theta = float(theta)
        phis = tuple(float(p) for p in phis)

        if len(phis) < 1:
            raise ValueError('At least one azimuthal angle is required.')

        for angle in (theta,) + phis:
            if not math.isfinite(angle) or abs(angle) > _HALF_PI:
                raise ValueError(
                    'Angle {} is outside [-pi/2, pi/2].'.format(angle))

        return super(ReflectionAngles, cls).__new__(cls, theta, phis)

    @property
    def dim(self):
        """:obj:`Dimension`: The dimension these angles belong to.
        """

        return Dimension(len(self.phis) + 2)


class CrossSectionPoint(namedtuple('CrossSectionPoint', ['coords'])):
    """A named tuple containing a point of the unit sphere of the cross
    section.

    Attributes:
        coords (:obj:`numpy.ndarray`): The `d - 1` coordinates of the point.
            Their Euclidean norm is 1.
    """

    __slots__ = ()


class FlightVector(namedtuple('FlightVector', ['coords', 'chord'])):
    """A named tuple containing the displacement of one flight from the base
    point of the tube wall.

    Attributes:
        coords (:obj:`numpy.ndarray`): The `d` coordinates of the
            displacement. The first one is the axial advance.
        chord (:obj:`float`): The length of the displacement, always
            positive.
    """

    __slots__ = ()

    @property
    def axial(self):
        """:obj:`float`: The axial coordinate of the displacement.
        """

        return float(self.coords[0])

    @property
    def landing(self):
        """:obj:`numpy.ndarray`: The cross-section point where the flight
        hits the wall again when it starts from the base point.
        """

        return base_point(self.coords.shape[0]) + self.coords[1:]


class RotationOperator(namedtuple('RotationOperator', ['matrix', 'target'])):
    """A named tuple containing an orthogonal operator of the cross-section
    space that maps the base point to `target`.

    Attributes:
        matrix (:obj:`numpy.ndarray`): The `(d - 1) x (d - 1)` orthogonal
            matrix.
        target (:obj:`numpy.ndarray`): The image of the base point.
    """

    __slots__ = ()

    def __call__(self, points):
        """Applies the operator to a point or to the rows of an array of
        points.
        """

        return np.asarray(points, dtype=float) @ self.matrix.T

    @property
    def adjoint(self):
        """:obj:`numpy.ndarray`: The transpose (and inverse) of
        :attr:`matrix`.
        """

        return self.matrix.T


class PlaneHit(namedtuple('PlaneHit', ['coords'])):
    """A named tuple containing the point where a ray leaving the base point
    at axial depth `-u` crosses the plane `{x_1 = 0}`.

    Attributes:
        coords (:obj:`numpy.ndarray`): The `d - 1` transverse coordinates of
            the intersection.
    """

    __slots__ = ()


def base_point(d):
    """Returns the base point (0, ..., 0, -1) of the cross-section sphere
    for dimension `d` (given either as an integer or a :obj:`Dimension`).

    Returns:
        :obj:`numpy.ndarray`: Array of length `d - 1`.
    """

    d = d.d if isinstance(d, Dimension) else int(d)
    point = np.zeros(d - 1)
    point[-1] = -1.0
    return point


def cross_section_point(coords, tol=1e-10):
    """Creates a :obj:`CrossSectionPoint` after checking that `coords` lies
    on the unit sphere.

    Args:
        coords (array-like): The coordinates of the point.
        tol (:obj:`float`, optional): Accepted deviation of the norm from 1.
            Defaults to 1e-10.

    Returns:
        :obj:`CrossSectionPoint`: The validated point.

    Raises:
        :obj:`ValueError`: If the norm of `coords` differs from 1 by more
            than `tol` or if fewer than 2 coordinates are given.
    """

    coords = np.array(coords, dtype=float)

    if coords.ndim != 1 or coords.shape[0] < 2:
        raise ValueError('Expected a vector with at least 2 coordinates.')

    norm = np.linalg.norm(coords)
    if abs(norm - 1.0) > tol:
        raise ValueError(
            'Point {} is not on the unit sphere (norm {}).'.format(
                coords.tolist(), norm))

    return CrossSectionPoint(coords)


def uniform_sphere(dim, rng, size=None):
    """Samples points uniformly on the cross-section sphere by normalising
    standard Gaussian vectors.

    Args:
        dim (:obj:`Dimension` or :obj:`int`): The ambient dimension.
        rng (:obj:`numpy.random.Generator`): The random stream.
        size (:obj:`int`, optional): Number of points. If `None`, a single
            point of shape `(d - 1,)` is returned. Defaults to `None`.

    Returns:
        :obj:`numpy.ndarray`: The sampled point(s).
    """

    dim = as_dimension(dim)
    shape = (dim.sphere_dim,) if size is None else (size, dim.sphere_dim)

    while True:
        gauss = rng.standard_normal(shape)
        norms = np.linalg.norm(gauss, axis=-1, keepdims=True)
        if np.all(norms > 0.0):
            return gauss / norms
