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
Tests for lambert_tube.analytic.quadrature
"""

import logging
import math

import pytest

from lambert_tube.analytic import int1d
from lambert_tube.analytic import quadrature
from lambert_tube.errors import ToleranceNotMetError


class TestInt1d(object):
    """Test class for testing one-dimensional adaptive quadrature.
    """

    def test_smooth_integrand(self, caplog):
        """Test that a smooth integral meets the tolerance without
        warnings.
        """

        with caplog.at_level(logging.WARNING):
            value = int1d(math.exp, 0.0, 1.0, rel_tol=1e-10)

        assert value == pytest.approx(math.e - 1.0, rel=1e-10)
        assert caplog.text == ''

    def test_stalled_refinement_raises(self):
        """Test that refinement stopping far above the tolerance raises.
        """

        with pytest.raises(ToleranceNotMetError) as excinfo:
            int1d(lambda x: math.sin(1000.0 * x), 0.0, 10.0, limit=5,
                  quantity='oscillation')

        assert excinfo.value.quantity == 'oscillation'

    def test_small_excess_warns(self, monkeypatch, caplog):
        """Test that an error estimate slightly above the tolerance is
        kept and logged with the relative error achieved.
        """

        def stalled_quad(func, a, b, **kwargs):
            return 2.0, 1e-7, {}, 'roundoff error is detected'

        monkeypatch.setattr(quadrature, 'quad', stalled_quad)

        with caplog.at_level(logging.WARNING):
            value = int1d(math.exp, 0.0, 1.0, rel_tol=1e-8,
                          quantity='survival')

        assert value == 2.0
        assert 'survival' in caplog.text
        assert 'relative error 5e-08' in caplog.text
