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
Tests for lambert_tube.geometry.rotation
"""

import numpy as np
import pytest
from scipy.stats import ks_2samp

from lambert_tube.geometry import base_point, uniform_sphere
from lambert_tube.geometry import cross_section_point
from lambert_tube.geometry import rotation_to, alternate_rotation_to
from lambert_tube.geometry import rotate_batch
from lambert_tube.geometry import sample_angle_batch, flight_batch


CONSTRUCTIONS = ['householder', 'alternate']


class TestRotationTo(object):
    """Test class for testing the operators mapping the base point to a
    point of the sphere.
    """

    def test_identity_at_base_point(self):
        """Test that the Householder operator of the base point is the
        identity.
        """

        rotation = rotation_to(base_point(4))
        assert np.array_equal(rotation.matrix, np.eye(3))

    def test_antipode(self):
        """Test that the operator to the antipode flips the last axis.
        """

        rotation = rotation_to(-base_point(3))
        assert np.allclose(rotation.matrix, np.diag([1.0, -1.0]))

    def test_accepts_cross_section_point(self):
        """Test that a CrossSectionPoint can be passed as target.
        """

        rotation = rotation_to(cross_section_point([0.6, 0.8]))
        assert np.allclose(rotation(base_point(3)), [0.6, 0.8])

    def test_unknown_construction(self):
        """Test that an unknown construction raises a ValueError.
        """

        with pytest.raises(ValueError):
            rotation_to(base_point(3), construction='euler')

    @pytest.mark.parametrize('construction', CONSTRUCTIONS)
    @pytest.mark.parametrize('d', [3, 4, 6])
    def test_maps_base_point(self, construction, d):
        """Test that the operator is orthogonal and maps the base point to
        the target.
        """

        rng = np.random.default_rng(d)
        base = base_point(d)

        for target in uniform_sphere(d, rng, 1000):
            rotation = rotation_to(target, construction)
            matrix = rotation.matrix

            assert np.max(np.abs(rotation(base) - target)) < 1e-12
            assert np.allclose(matrix @ matrix.T, np.eye(d - 1), atol=1e-12)
            assert np.allclose(rotation.adjoint @ target, base, atol=1e-12)

    def test_alternate_differs(self):
        """Test that the alternate operator differs from the Householder one
        but agrees on the base point.
        """

        target = uniform_sphere(4, np.random.default_rng(11))
        householder = rotation_to(target)
        alternate = alternate_rotation_to(target)

        assert not np.allclose(householder.matrix, alternate.matrix)
        assert np.allclose(alternate(base_point(4)), target)


class TestRotateBatch(object):
    """Test class for testing the vectorised rotation.
    """

    @pytest.mark.parametrize('construction', CONSTRUCTIONS)
    @pytest.mark.parametrize('d', [3, 5])
    def test_matches_rotation_to(self, construction, d):
        """Test that rotate_batch matches rotation_to row by row.
        """

        rng = np.random.default_rng(100 + d)
        targets = uniform_sphere(d, rng, 200)
        points = uniform_sphere(d, rng, 200)

        rotated = rotate_batch(targets, points, construction)

        for i in range(200):
            expected = rotation_to(targets[i], construction)(points[i])
            assert np.allclose(rotated[i], expected, atol=1e-12)

    def test_base_point_target(self):
        """Test that rows whose target is the base point are left unchanged.
        """

        targets = np.tile(base_point(3), (2, 1))
        points = np.array([[0.6, 0.8], [-1.0, 0.0]])

        assert np.array_equal(rotate_batch(targets, points), points)

    def test_preserves_norm(self):
        """Test that rotated points stay on the sphere.
        """

        rng = np.random.default_rng(12)
        rotated = rotate_batch(uniform_sphere(4, rng, 5000),
                               uniform_sphere(4, rng, 5000))

        assert np.allclose(np.linalg.norm(rotated, axis=1), 1.0)


class TestFlightInvariance(object):
    """Test class for testing that the law of a flight commutes with
    rotations of the cross-section.
    """

    @staticmethod
    def _flights(d, seed, n):
        theta, phis = sample_angle_batch(d, np.random.default_rng(seed), n)
        coords, _ = flight_batch(theta, phis)
        return coords[:, 0], base_point(d)[None, :] + coords[:, 1:]

    @staticmethod
    def _fixed_rotation(m, seed):
        q, r = np.linalg.qr(np.random.default_rng(seed).normal(size=(m, m)))
        q = q * np.sign(np.diag(r))
        if np.linalg.det(q) < 0:
            q[:, 0] = -q[:, 0]
        return q

    @pytest.mark.parametrize('construction', CONSTRUCTIONS)
    def test_rotated_start(self, construction):
        """Test that flights started at `W e` have the law of `W` applied
        to flights started at the base point `e`, jointly with the axial
        advance.

        The azimuth angles are i.i.d. uniform, which is isotropic around the
        normal only for d = 3.
        """

        d, n = 3, 20000
        w = self._fixed_rotation(d - 1, 61)
        start = w @ base_point(d)

        advance_a, landing_a = self._flights(d, 62, n)
        moved = rotate_batch(np.tile(start, (n, 1)), landing_a, construction)

        advance_b, landing_b = self._flights(d, 63, n)
        turned = landing_b @ w.T

        assert np.allclose(np.linalg.norm(moved, axis=1), 1.0)

        for coord in (0, -1):
            result = ks_2samp(moved[:, coord], turned[:, coord])
            assert result.pvalue > 0.001

        upper_a = advance_a[moved[:, -1] > 0.0]
        upper_b = advance_b[turned[:, -1] > 0.0]

        assert ks_2samp(upper_a, upper_b).pvalue > 0.001
