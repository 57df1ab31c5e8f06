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
Tests for lambert_tube.analytic.step
"""

import math

import numpy as np
import pytest

from lambert_tube.analytic import step_survival, abs_step_survival
from lambert_tube.analytic import step_tail_constant
from lambert_tube.analytic import step_tail_constant_gamma
from lambert_tube.analytic import second_moment, second_moment_cutoff
from lambert_tube.analytic import positive_part_mean
from lambert_tube.chain import LambertianSteps


@pytest.fixture(scope='module')
def steps_d3():
    return LambertianSteps(3).axial(np.random.default_rng(2024), 1000000)


class TestStepSurvival(object):
    """Test class for testing the survival function of the axial step.
    """

    @pytest.mark.parametrize('x', [0.1, 0.5, 0.9, 2.0, 10.0])
    def test_closed_generic(self, x):
        """Test that the closed and generic paths agree for d = 3.
        """

        closed = step_survival(3, x, method='closed')
        generic = step_survival(3, x, method='generic')

        assert closed == pytest.approx(generic, rel=1e-8)

    @pytest.mark.parametrize('x', [1.0, 2.0, 10.0, 50.0])
    def test_large_x_substitution(self, x):
        """Test that the large-x substitution agrees with the direct
        integral.
        """

        auto = step_survival(3, x)
        direct = step_survival(3, x, method='closed')

        assert auto == pytest.approx(direct, rel=1e-7)

    def test_at_zero(self):
        """Test that P(X > x) tends to 1/2 as x tends to 0.
        """

        assert step_survival(3, 1e-6) == pytest.approx(0.5, abs=1e-3)

    @pytest.mark.parametrize('d', [3, 4])
    def test_monotone(self, d):
        """Test that the survival function decreases.
        """

        x = [0.1, 0.3, 1.0, 3.0, 10.0, 30.0]
        values = [step_survival(d, xi, rel_tol=1e-6) for xi in x]

        assert np.all(np.diff(values) < 0)
        assert 0.0 < values[-1] < values[0] < 0.5

    def test_abs_survival(self):
        """Test that P(|X| > x) is twice P(X > x).
        """

        assert abs_step_survival(3, 2.0) == pytest.approx(
            2.0 * step_survival(3, 2.0))

    def test_against_simulation(self, steps_d3):
        """Test the survival function against simulated steps.
        """

        n = steps_d3.shape[0]

        for x in (0.5, 2.0, 5.0):
            mc = np.count_nonzero(steps_d3 > x) / n
            std_err = math.sqrt(mc * (1.0 - mc) / n)

            assert abs(mc - step_survival(3, x)) < 5.0 * std_err

    def test_symmetric_law(self, steps_d3):
        """Test that the simulated step is symmetric.
        """

        n = steps_d3.shape[0]
        assert abs(np.count_nonzero(steps_d3 > 0) / n - 0.5) < 0.003

    @pytest.mark.parametrize('d,rel_tol', [(3, 1e-8), (4, 1e-8), (5, 1e-6)])
    def test_tail_constant(self, d, rel_tol):
        """Test that x^d P(|X| > x) is close to C_d at x = 50.
        """

        x = 50.0
        scaled = x ** d * abs_step_survival(d, x, rel_tol=rel_tol)

        assert scaled / step_tail_constant(d).value == pytest.approx(
            1.0, abs=0.05)

    def test_invalid(self):
        """Test invalid thresholds and methods.
        """

        with pytest.raises(ValueError):
            step_survival(3, 0.0)

        with pytest.raises(ValueError):
            step_survival(4, 1.0, method='closed')

        with pytest.raises(ValueError):
            step_survival(3, 1.0, method='series')


class TestStepTailConstant(object):
    """Test class for testing the tail constants C_d.
    """

    def test_values(self):
        """Test C_3, C_4 and C_5.
        """

        assert step_tail_constant(3).value == pytest.approx(1.0)
        assert step_tail_constant(4).value == pytest.approx(4.0 / (3.0 *
                                                                   math.pi))
        assert step_tail_constant(5).value == pytest.approx(0.5 / math.pi)

    @pytest.mark.parametrize('d', range(3, 11))
    def test_gamma_form(self, d):
        """Test that the Gamma-function form agrees with the double
        factorial form.
        """

        assert step_tail_constant_gamma(d).value == pytest.approx(
            step_tail_constant(d).value, rel=1e-12)


class TestMoments(object):
    """Test class for testing the moments of the axial step.
    """

    def test_second_moment_methods(self):
        """Test that the survival and angular methods both reach pi / 2 for
        d = 3 at the default relative tolerance.
        """

        survival = second_moment(3)
        angular = second_moment(3, method='angular')

        assert survival == pytest.approx(math.pi / 2, rel=1e-8)
        assert angular == pytest.approx(math.pi / 2, rel=1e-8)

    def test_second_moment_d4(self):
        """Test that both methods agree for d = 4 and that the moment
        decreases with the dimension.
        """

        survival = second_moment(4, rel_tol=1e-6)
        angular = second_moment(4, rel_tol=1e-6, method='angular')

        assert survival == pytest.approx(angular, rel=1e-4)
        assert angular < second_moment(3, method='angular')

    def test_second_moment_cutoff(self):
        """Test that the result does not depend on the tail cutoff.
        """

        assert second_moment(3, cutoff=16.0) == pytest.approx(
            second_moment(3, cutoff=64.0), rel=1e-6)

    def test_cutoff_power_of_two(self):
        """Test that the default cutoff is a power of two from 8 on.
        """

        cutoff = second_moment_cutoff(3)

        assert cutoff >= 8.0
        assert math.log2(cutoff) == int(math.log2(cutoff))

    def test_invalid_method(self):
        """Test that an unknown method raises a ValueError.
        """

        with pytest.raises(ValueError):
            second_moment(3, method='simulation')

    def test_positive_part_mean(self, steps_d3):
        """Test E[X+] against simulated steps.
        """

        positive = np.maximum(steps_d3, 0.0)
        std_err = positive.std(ddof=1) / math.sqrt(positive.shape[0])

        assert abs(positive.mean() - positive_part_mean(3)) < 5.0 * std_err
