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
Tests for lambert_tube.analytic.measures
"""

import math

import numpy as np
import pytest

from lambert_tube.analytic import Ball, Box, Rotated, Indicator
from lambert_tube.analytic import TauInftyMeasure, ball_volume
from lambert_tube.analytic import centered_ball, touching_ball, uniform_disc
from lambert_tube.analytic import tau_infty, rotated_tau_infty, rho_infty
from lambert_tube.analytic import corner_box, box_limit_probability
from lambert_tube.analytic import plane_hit_cube_asymptotic
from lambert_tube.analytic import plane_hit_density_asymptotic
from lambert_tube.errors import RegionNotContainedError
from lambert_tube.geometry import uniform_sphere, sample_plane_hits


class TestRegions(object):
    """Test class for testing regions of the cross section.
    """

    def test_ball_volume(self):
        """Test ball volumes in dimensions 1 to 3.
        """

        assert ball_volume(1, 0.5) == pytest.approx(1.0)
        assert ball_volume(2) == pytest.approx(math.pi)
        assert ball_volume(3, 2.0) == pytest.approx(32.0 * math.pi / 3.0)

    def test_ball_contains(self):
        """Test ball membership and containment in the disc.
        """

        ball = Ball([0.0, 0.5], 0.5)

        assert ball.contains(np.array([[0.0, 0.9], [0.0, -0.1]])).tolist() \
            == [True, False]
        assert ball.inside_disc()
        assert not Ball([0.5, 0.0], 0.6).inside_disc()

    def test_box(self):
        """Test box membership, volume and centroid.
        """

        box = Box([-0.5, -0.5], [0.5, 0.0])

        assert box.contains(np.array([[0.0, -0.2], [0.0, 0.2]])).tolist() \
            == [True, False]
        assert box.volume() == pytest.approx(0.5)
        assert box.centroid().tolist() == [0.0, -0.25]
        assert box.inside_disc()
        assert not Box([-1.0, -1.0], [1.0, 1.0]).inside_disc()
        assert Box([-1.0, -1.0], [1.0, 1.0]).inside_cube()

    def test_invalid_box(self):
        """Test that inverted corners raise a ValueError.
        """

        with pytest.raises(ValueError):
            Box([0.0, 0.0], [1.0, -1.0])

    def test_uniform_disc(self):
        """Test that uniform disc samples lie in the disc and fill it
        evenly.
        """

        points = uniform_disc(3, np.random.default_rng(0), 100000)
        radii = np.linalg.norm(points, axis=1)

        assert np.all(radii <= 1.0)
        assert np.mean(radii <= 0.5) == pytest.approx(0.25, abs=0.005)


class TestTauInfty(object):
    """Test class for testing the limiting exit measure on the disc.
    """

    @pytest.mark.parametrize('d', [3, 4, 5])
    def test_total_mass(self, d):
        """Test that the unit disc has measure 1.
        """

        assert tau_infty(d, centered_ball(d, 1.0)).value == pytest.approx(1.0)

    @pytest.mark.parametrize('d', [3, 4, 5])
    @pytest.mark.parametrize('r', [0.25, 0.5, 0.75])
    def test_balls(self, d, r):
        """Test the laws r^(d-1) of centred balls and r^d of balls touching
        the sphere at the base point.
        """

        centered = tau_infty(d, centered_ball(d, r))
        touching = tau_infty(d, touching_ball(d, r))

        assert centered.method == 'exact'
        assert centered.error == 0.0
        assert centered.value == pytest.approx(r ** (d - 1))
        assert touching.value == pytest.approx(r ** d)

    def test_d3_values(self):
        """Test the ball values for d = 3 and r = 1/2.
        """

        assert float(tau_infty(3, centered_ball(3, 0.5))) == pytest.approx(
            0.25)
        assert float(tau_infty(3, touching_ball(3, 0.5))) == pytest.approx(
            0.125)

    @pytest.mark.parametrize('d', [3, 4])
    def test_monte_carlo(self, d):
        """Test that Monte Carlo agrees with the exact values.
        """

        rng = np.random.default_rng(d)
        region = touching_ball(d, 0.6)

        exact = tau_infty(d, region).value
        mc = tau_infty(d, region, rng=rng)

        assert mc.method == 'mc'
        assert abs(mc.value - exact) <= 4.0 / 3.0 * mc.error

    def test_measure_object(self):
        """Test the TauInftyMeasure shortcut and its density.
        """

        measure = TauInftyMeasure(3)

        assert measure.norm == pytest.approx(1.0 / math.pi)
        assert measure.density(np.array([0.0, -1.0])) == pytest.approx(0.0)
        assert measure(centered_ball(3, 0.5)).value == pytest.approx(0.25)

    def test_not_contained(self):
        """Test that regions leaving the disc raise a
        RegionNotContainedError.
        """

        with pytest.raises(RegionNotContainedError):
            tau_infty(3, Ball([0.5, 0.0], 0.6))

        with pytest.raises(ValueError):
            tau_infty(3, Box([-1.0, -1.0], [1.0, 1.0]))

    def test_wrong_dimension(self):
        """Test that a region of the wrong dimension raises a ValueError.
        """

        with pytest.raises(ValueError):
            tau_infty(4, centered_ball(3, 0.5))

    def test_indicator(self):
        """Test a region given by a membership function.
        """

        bounds = Box([-0.7, -0.7], [0.7, 0.7])
        half = Indicator(lambda p: p[:, 0] > 0.0, bounds)

        with pytest.raises(ValueError):
            tau_infty(3, half)

        mc = tau_infty(3, half, rng=np.random.default_rng(5))
        expected = 0.5 * tau_infty(3, bounds).value

        assert abs(mc.value - expected) <= 4.0 / 3.0 * mc.error


class TestRotatedMeasure(object):
    """Test class for testing the measure of rotated regions.
    """

    @pytest.mark.parametrize('construction', ['householder', 'alternate'])
    def test_rotated_exact(self, construction):
        """Test that the exact measure of a rotated region matches the
        closed form and Monte Carlo.
        """

        d = 4
        rng = np.random.default_rng(6)
        region = Ball([0.2, 0.0, -0.3], 0.4)
        target = uniform_sphere(d, rng)

        rotated = Rotated(region, target, construction)
        closed = rotated_tau_infty(d, region, target)

        assert tau_infty(d, rotated).value == pytest.approx(closed)

        mc = tau_infty(d, rotated, rng=rng)
        assert abs(mc.value - closed) <= 4.0 / 3.0 * mc.error

    def test_base_point_target(self):
        """Test that rotating to the base point leaves the measure
        unchanged.
        """

        region = touching_ball(3, 0.5)
        assert rotated_tau_infty(3, region, [0.0, -1.0]) == pytest.approx(
            tau_infty(3, region).value)

    def test_sphere_average(self):
        """Test that the average over the sphere is the normalised volume.
        """

        d = 3
        region = touching_ball(d, 0.5)
        targets = uniform_sphere(d, np.random.default_rng(7), 20000)
        values = [rotated_tau_infty(d, region, y) for y in targets]

        expected = region.volume() / ball_volume(d - 1)
        std_err = np.std(values, ddof=1) / math.sqrt(len(values))

        assert abs(np.mean(values) - expected) < 5.0 * std_err


class TestCubeLimits(object):
    """Test class for testing the limits of the plane intersection.
    """

    @pytest.mark.parametrize('d', [3, 4, 5])
    def test_full_cube(self, d):
        """Test that the cube has measure 1.
        """

        t = np.full(d - 1, 2.0)

        assert rho_infty(d, corner_box(d, t)) == pytest.approx(1.0)
        assert box_limit_probability(d, t) == pytest.approx(1.0)

    @pytest.mark.parametrize('t', [[0.5, 1.0], [1.0, 0.3], [2.0, 2.0]])
    def test_corner_boxes(self, t):
        """Test that the cube measure of a corner box is the box limit.
        """

        assert rho_infty(3, corner_box(3, t)) == pytest.approx(
            box_limit_probability(3, t))

    def test_corner_box_d4(self):
        """Test the box limit for d = 4.
        """

        t = [0.5, 1.5, 1.0]
        assert box_limit_probability(4, t) == pytest.approx(0.75 / 16.0)
        assert rho_infty(4, corner_box(4, t)) == pytest.approx(0.75 / 16.0)

    def test_invalid(self):
        """Test invalid boxes and side lengths.
        """

        with pytest.raises(ValueError):
            corner_box(3, [0.5, 2.5])

        with pytest.raises(ValueError):
            rho_infty(3, Box([-1.5, -1.0], [0.0, 0.0]))

    def test_asymptotic_values(self):
        """Test the closed forms of the large-depth asymptotics.
        """

        assert plane_hit_cube_asymptotic(3, 10.0) == pytest.approx(
            2.0 / (1000.0 * math.pi))
        assert plane_hit_density_asymptotic(3, 10.0) == pytest.approx(
            1.0 / (2000.0 * math.pi))
        assert plane_hit_density_asymptotic(
            3, 10.0, [0.0, -1.0]) == pytest.approx(0.0)

    def test_plane_hits(self):
        """Test simulated plane intersections at depth 10 against the
        asymptotics.
        """

        d = 3
        u = 10.0
        n = 1000000
        coords, hit = sample_plane_hits(d, u, n, np.random.default_rng(8))

        in_cube = hit & np.all(np.abs(np.nan_to_num(coords, nan=9.0)) <= 1.0,
                               axis=1)
        probability = np.count_nonzero(in_cube) / n

        assert probability == pytest.approx(plane_hit_cube_asymptotic(d, u),
                                            rel=0.15)

        corner = corner_box(d, [1.0, 1.0]).contains(coords[in_cube])
        assert np.mean(corner) == pytest.approx(
            box_limit_probability(d, [1.0, 1.0]), abs=0.05)
