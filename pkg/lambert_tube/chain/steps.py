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

"""This sub-module contains the step sources driving the chain. A step
source produces, for a batch of walkers, the axial advance of one flight
and the point where that flight lands when it starts from the base point.
"""


from abc import ABC, abstractmethod

import numpy as np

from lambert_tube.geometry import as_dimension, base_point
from lambert_tube.geometry import sample_angle_batch, flight_batch
from lambert_tube.geometry import axial_batch


class StepSampler(ABC):
    """Base class for step sources.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
    """

    def __init__(self, dim):
        self.dim = as_dimension(dim)

    @abstractmethod
    def flights(self, rng, size):
        """Draws `size` flights.

        Args:
            rng (:obj:`numpy.random.Generator`): The random stream.
            size (:obj:`int`): Number of flights.

        Returns:
            :obj:`tuple`: A pair `(axial, landing)` of arrays with shapes
            `(size,)` and `(size, d - 1)`.
        """

        raise NotImplementedError

    def axial(self, rng, size):
        """Draws the axial advances of `size` flights.

        Returns:
            :obj:`numpy.ndarray`: Array of shape `(size,)`.
        """

        return self.flights(rng, size)[0]


class LambertianSteps(StepSampler):
    """Flights with Lambertian (cosine law) reflection directions.
    """

    def flights(self, rng, size):
        theta, phis = sample_angle_batch(self.dim, rng, size)
        coords, _ = flight_batch(theta, phis)
        landing = base_point(self.dim)[None, :] + coords[:, 1:]
        return coords[:, 0], landing

    def axial(self, rng, size):
        theta, phis = sample_angle_batch(self.dim, rng, size)
        return axial_batch(theta, phis)


class ConstantSteps(StepSampler):
    """Deterministic flights advancing by `step` along the axis and landing
    at the point opposite to the base point. Used to check counting logic.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        step (:obj:`float`, optional): The axial advance. Defaults to 1.
    """

    def __init__(self, dim, step=1.0):
        super(ConstantSteps, self).__init__(dim)
        self.step = float(step)

    def flights(self, rng, size):
        landing = np.tile(-base_point(self.dim), (size, 1))
        return np.full(size, self.step), landing

    def axial(self, rng, size):
        return np.full(size, self.step)
