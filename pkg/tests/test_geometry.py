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

"""
Tests for lambert_tube.geometry
"""

import math

import numpy as np
import pytest

from lambert_tube.errors import DegenerateGrazingError, InvalidDimensionError
from lambert_tube.geometry import Dimension, ReflectionAngles
from lambert_tube.geometry import base_point, cross_section_point
from lambert_tube.geometry import uniform_sphere, sample_angles
from lambert_tube.geometry import sample_angle_batch, chord_length
from lambert_tube.geometry import flight_vector, flight_batch, axial_step
from lambert_tube.geometry import axial_batch, plane_hit, plane_hit_batch


HALF_PI = 0.5 * math.pi


class TestDimension(object):
    """Test class for testing the Dimension type.
    """

    def test_dimension_3(self):
        """Test the derived sizes for d = 3.
        """

        dim = Dimension(3)

        assert dim.d == 3
        assert dim.sphere_dim == 2
        assert dim.n_phis == 1

    def test_dimension_passthrough(self):
        """Test that a Dimension is returned unchanged.
        """

        dim = Dimension(5)
        assert Dimension(dim) is dim

    @pytest.mark.parametrize('d', [2, 1, 0, -3, 3.5, True])
    def test_dimension_invalid(self, d):
        """Test that dimensions other than integers >= 3 raise an
        InvalidDimensionError.
        """

        with pytest.raises(InvalidDimensionError):
            Dimension(d)

    def test_invalid_dimension_is_value_error(self):
        """Test that InvalidDimensionError is a ValueError.
        """

        with pytest.raises(ValueError):
            Dimension(2)


class TestCrossSection(object):
    """Test class for testing cross-section points.
    """

    def test_base_point(self):
        """Test the base point for d = 4.
        """

        assert base_point(4).tolist() == [0.0, 0.0, -1.0]
        assert base_point(Dimension(3)).tolist() == [0.0, -1.0]

    def test_cross_section_point_valid(self):
        """Test that a point of the sphere is accepted.
        """

        point = cross_section_point([0.6, 0.8])
        assert point.coords.tolist() == [0.6, 0.8]

    def test_cross_section_point_off_sphere(self):
        """Test that a point off the sphere raises a ValueError.
        """

        with pytest.raises(ValueError):
            cross_section_point([1.0, 1.0])

    @pytest.mark.parametrize('d', [3, 4, 6])
    def test_uniform_sphere_norm(self, d):
        """Test that uniform sphere samples have unit norm.
        """

        rng = np.random.default_rng(7)
        points = uniform_sphere(d, rng, 1000)

        assert points.shape == (1000, d - 1)
        assert np.allclose(np.linalg.norm(points, axis=1), 1.0)


class TestAngles(object):
    """Test class for testing reflection angle sampling.
    """

    def test_angles_invalid(self):
        """Test that angles outside [-pi/2, pi/2] raise a ValueError.
        """

        with pytest.raises(ValueError):
            ReflectionAngles(2.0, [0.0])

        with pytest.raises(ValueError):
            ReflectionAngles(0.0, [0.0, -1.6])

        with pytest.raises(ValueError):
            ReflectionAngles(0.0, [])

    def test_sample_angles_shape(self):
        """Test that a single sample has d - 2 azimuthal angles.
        """

        angles = sample_angles(5, np.random.default_rng(1))

        assert len(angles.phis) == 3
        assert angles.dim == Dimension(5)

    def test_sample_angles_open_intervals(self):
        """Test that sampled angles lie in the open interval (-pi/2, pi/2).
        """

        theta, phis = sample_angle_batch(4, np.random.default_rng(2), 100000)

        assert phis.shape == (100000, 2)
        assert np.all(np.abs(theta) < HALF_PI)
        assert np.all(np.abs(phis) < HALF_PI)

    def test_theta_law(self):
        """Test that the polar angle has CDF (1 + sin t) / 2.
        """

        theta, _ = sample_angle_batch(3, np.random.default_rng(3), 200000)

        for t in (-1.2, -0.3, 0.0, 0.5, 1.2):
            empirical = np.mean(theta <= t)
            assert abs(empirical - 0.5 * (1.0 + math.sin(t))) < 0.005

    def test_phi_law(self):
        """Test that the azimuthal angles are uniform.
        """

        _, phis = sample_angle_batch(3, np.random.default_rng(4), 200000)

        assert abs(np.mean(np.abs(phis[:, 0]) < 0.25 * math.pi) - 0.5) < 0.005


class TestChord(object):
    """Test class for testing chord lengths and flights.
    """

    def test_chord_normal(self):
        """Test that a flight along the inner normal has chord 2.
        """

        assert chord_length(ReflectionAngles(0.0, [0.3])) == pytest.approx(2.0)

    def test_chord_sideways(self):
        """Test the chord of a flight perpendicular to the axis.
        """

        angles = ReflectionAngles(0.25 * math.pi, [HALF_PI])
        assert chord_length(angles) == pytest.approx(math.sqrt(2.0))

    def test_chord_long(self):
        """Test that chords along the axis may exceed the diameter.
        """

        angles = ReflectionAngles(math.pi / 3.0, [0.0])
        assert chord_length(angles) == pytest.approx(4.0)

    def test_chord_grazing(self):
        """Test that a direction tangent to the wall raises a
        DegenerateGrazingError.
        """

        with pytest.raises(DegenerateGrazingError):
            chord_length(ReflectionAngles(HALF_PI, [0.0]))

        with pytest.raises(DegenerateGrazingError):
            flight_batch(np.array([-HALF_PI]), np.array([[0.1]]))

    @pytest.mark.parametrize('d', [3, 4, 5])
    def test_flight_normal(self, d):
        """Test that a flight along the inner normal lands opposite to the
        base point.
        """

        flight = flight_vector(ReflectionAngles(0.0, [0.2] * (d - 2)))

        expected = np.zeros(d)
        expected[-1] = 2.0

        assert np.allclose(flight.coords, expected)
        assert flight.axial == 0.0
        assert np.allclose(flight.landing, -base_point(d))

    @pytest.mark.parametrize('d', [3, 4, 6])
    def test_flight_lands_on_sphere(self, d):
        """Test that every flight lands on the cross-section sphere and that
        its length is the chord.
        """

        theta, phis = sample_angle_batch(d, np.random.default_rng(d), 20000)
        coords, chord = flight_batch(theta, phis)
        landing = base_point(d)[None, :] + coords[:, 1:]

        assert np.allclose(np.linalg.norm(landing, axis=1), 1.0, atol=1e-9)
        assert np.allclose(np.linalg.norm(coords, axis=1), chord)
        assert np.all(np.linalg.norm(coords[:, 1:], axis=1) <= 2.0 + 1e-12)
        assert np.all(chord > 0)

    def test_axial_odd(self):
        """Test that the axial advance is odd in the polar angle and even in
        the azimuthal angles.
        """

        theta, phis = sample_angle_batch(4, np.random.default_rng(5), 1000)
        axial = axial_batch(theta, phis)

        assert np.allclose(axial_batch(-theta, phis), -axial)
        assert np.allclose(axial_batch(theta, -phis), axial)

    def test_axial_matches_flight(self):
        """Test that the scalar and batch axial advances agree with the
        flight vector.
        """

        angles = ReflectionAngles(0.4, [-0.7, 1.1])
        coords, _ = flight_batch(np.array([0.4]), np.array([[-0.7, 1.1]]))

        assert axial_step(angles) == pytest.approx(coords[0, 0])
        assert flight_vector(angles).axial == pytest.approx(coords[0, 0])


class TestPlaneHit(object):
    """Test class for testing plane intersections.
    """

    def test_plane_hit_straight(self):
        """Test a ray in the plane of the axis and the base point.
        """

        hit = plane_hit(1.0, ReflectionAngles(0.25 * math.pi, [0.0, 0.0]))
        assert np.allclose(hit.coords, [0.0, 0.0, 0.0])

    def test_plane_hit_oblique(self):
        """Test an oblique ray in d = 3.
        """

        angles = ReflectionAngles(0.25 * math.pi, [0.25 * math.pi])
        hit = plane_hit(1.0, angles)

        assert np.allclose(hit.coords, [1.0, math.sqrt(2.0) - 1.0])

    def test_plane_hit_miss(self):
        """Test that rays moving away from the plane miss it.
        """

        assert plane_hit(1.0, ReflectionAngles(0.0, [0.1])) is None
        assert plane_hit(1.0, ReflectionAngles(-0.5, [0.1])) is None

    def test_plane_hit_invalid_depth(self):
        """Test that a non-positive depth raises a ValueError.
        """

        with pytest.raises(ValueError):
            plane_hit(0.0, ReflectionAngles(0.5, [0.1]))

    def test_plane_hit_on_ray(self):
        """Test that the intersection lies on the line of the flight.
        """

        u = 0.7
        theta, phis = sample_angle_batch(4, np.random.default_rng(6), 5000)
        coords, hit = plane_hit_batch(u, theta, phis)
        flights, _ = flight_batch(theta, phis)

        assert np.array_equal(hit, theta > 0)
        assert np.all(np.isnan(coords[~hit]))

        scale = u / flights[hit, 0]
        expected = base_point(4)[None, :] + scale[:, None] * flights[hit, 1:]

        assert np.allclose(coords[hit], expected, rtol=1e-9, atol=1e-9)
