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

"""This sub-module contains the value types returned by the analytic
evaluators.
"""


from collections import namedtuple
import math

import numpy as np

from lambert_tube.geometry import as_dimension


class ArccosineLaw(object):
    """The law of `cos(Phi)` for `Phi` uniform on (-pi/2, pi/2). Its density
    on (0, 1) is `2 / (pi * sqrt(1 - x^2))`.
    """

    @staticmethod
    def _check(x):
        x = np.asarray(x, dtype=float)
        if np.any((x < 0.0) | (x > 1.0)):
            raise ValueError('Arccosine law is supported on [0, 1].')
        return x

    def survival(self, x):
        """Returns `P(F > x) = (2 / pi) * arccos(x)` for `x` in [0, 1].
        """

        return 2.0 / math.pi * np.arccos(self._check(x))

    def cdf(self, x):
        """Returns `P(F <= x)` for `x` in [0, 1].
        """

        return 1.0 - self.survival(x)

    def density(self, x):
        """Returns the density at `x` in [0, 1).
        """

        x = self._check(x)
        return 2.0 / (math.pi * np.sqrt(1.0 - x ** 2))

    def sample(self, rng, size=None):
        """Draws samples as the cosine of uniform angles.
        """

        return np.cos(rng.uniform(-0.5 * math.pi, 0.5 * math.pi, size))


class TailConstant(namedtuple('TailConstant', ['n_or_d', 'value'])):
    """A named tuple containing a tail constant.

    Attributes:
        n_or_d (:obj:`int`): The number of factors (for product tails) or
            the dimension (for step tails).
        value (:obj:`float`): The constant, positive.
    """

    __slots__ = ()

    def __float__(self):
        return float(self.value)


class MeasureValue(namedtuple('MeasureValue', ['value', 'error', 'method'])):
    """A named tuple containing the measure of a region.

    Attributes:
        value (:obj:`float`): The measure.
        error (:obj:`float`): Three standard errors for Monte Carlo values,
            0 for exact ones.
        method (:obj:`str`): `'exact'` or `'mc'`.
    """

    __slots__ = ()

    def __float__(self):
        return float(self.value)


class LambdaEstimate(namedtuple('LambdaEstimate', ['t_grid', 'values',
                                                   'std_errs', 'mean_o0',
                                                   'mean_u0', 'n_ladders',
                                                   'excluded'])):
    """A named tuple containing a Monte Carlo estimate of the ladder
    functional `Lambda(t) = E[(t (U0 + O0) - U0)^+] / E[O0]` on a grid.

    Attributes:
        t_grid (:obj:`numpy.ndarray`): Grid points in [0, 1].
        values (:obj:`numpy.ndarray`): Estimates. Exactly 0 at `t = 0` and
            exactly 1 at `t = 1`.
        std_errs (:obj:`numpy.ndarray`): Batch-means standard errors.
        mean_o0 (:obj:`float`): Sample mean of the ladder height.
        mean_u0 (:obj:`float`): Sample mean of the undershoot below 0.
        n_ladders (:obj:`int`): Number of ladders used.
        excluded (:obj:`int`): Ladder walks that ran out of steps.
    """

    __slots__ = ()

    def __call__(self, t):
        """Evaluates the estimate at `t` by linear interpolation.
        """

        return np.interp(t, self.t_grid, self.values)


class OffsetDisc(namedtuple('OffsetDisc', ['center_scale', 'radius'])):
    """A named tuple containing the disc of radius `t` centred at
    `(1 - t) * y0` for a point `y0` of the sphere. It touches the sphere at
    `y0` and equals the unit disc when `t = 1`.

    Attributes:
        center_scale (:obj:`numpy.ndarray`): The centre `(1 - t) * y0`.
        radius (:obj:`float`): The radius `t`, in [0, 1].
    """

    __slots__ = ()

    def contains(self, points, tol=0.0):
        """Returns whether each point lies in the closed disc.
        """

        points = np.asarray(points, dtype=float)
        dist = np.linalg.norm(points - self.center_scale, axis=-1)
        return dist <= self.radius + tol


def offset_disc(y0, t):
    """Creates the :obj:`OffsetDisc` of radius `t` touching the sphere at
    `y0`.

    Raises:
        :obj:`ValueError`: If `t` is outside [0, 1].
    """

    if not 0.0 <= t <= 1.0:
        raise ValueError('Radius must lie in [0, 1], got {}.'.format(t))

    y0 = np.asarray(getattr(y0, 'coords', y0), dtype=float)
    return OffsetDisc((1.0 - t) * y0, float(t))


class TauInftyMeasure(namedtuple('TauInftyMeasure', ['dim'])):
    """A named tuple describing the limiting law of the exit point of a ray
    started far below the exit plane. It has density
    `Gamma((d + 1) / 2) / pi^((d - 1) / 2) * (1 + x_d)` on the unit disc.

    Attributes:
        dim (:obj:`~lambert_tube.geometry.Dimension`): The dimension.
    """

    __slots__ = ()

    def __new__(cls, dim):
        return super(TauInftyMeasure, cls).__new__(cls, as_dimension(dim))

    @property
    def norm(self):
        """:obj:`float`: The normalising constant of the density.
        """

        d = self.dim.d
        return math.gamma(0.5 * (d + 1)) / math.pi ** (0.5 * (d - 1))

    def density(self, points):
        """Returns the density at points of the unit disc.
        """

        points = np.asarray(points, dtype=float)
        return self.norm * (1.0 + points[..., -1])

    def __call__(self, region, rng=None, samples=None):
        """Shortcut for :func:`~lambert_tube.analytic.measures.tau_infty`.
        """

        from lambert_tube.analytic.measures import tau_infty

        kwargs = {} if samples is None else {'samples': samples}
        return tau_infty(self.dim, region, rng=rng, **kwargs)
