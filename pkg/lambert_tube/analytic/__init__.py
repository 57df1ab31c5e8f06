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

"""This module contains the analytic side of the simulator: the arccosine
law and the tails of its products, the tail and moments of the axial step,
the limiting exit measures, and the limit laws of the exit data at a
distant level.
"""

from lambert_tube.analytic.common import ArccosineLaw, TailConstant
from lambert_tube.analytic.common import MeasureValue, LambdaEstimate
from lambert_tube.analytic.common import OffsetDisc, offset_disc
from lambert_tube.analytic.common import TauInftyMeasure
from lambert_tube.analytic.quadrature import int1d, DEFAULT_REL_TOL
from lambert_tube.analytic.arccosine import arccos_survival
from lambert_tube.analytic.arccosine import product_survival
from lambert_tube.analytic.arccosine import product_survival_method
from lambert_tube.analytic.arccosine import product_tail_constant
from lambert_tube.analytic.arccosine import product_tail_closed_form
from lambert_tube.analytic.step import step_survival, abs_step_survival
from lambert_tube.analytic.step import step_tail_constant
from lambert_tube.analytic.step import step_tail_constant_gamma
from lambert_tube.analytic.step import second_moment, second_moment_cutoff
from lambert_tube.analytic.step import positive_part_mean
from lambert_tube.analytic.measures import Region, Ball, Box, Rotated
from lambert_tube.analytic.measures import Indicator, ball_volume
from lambert_tube.analytic.measures import centered_ball, touching_ball
from lambert_tube.analytic.measures import uniform_disc, tau_infty
from lambert_tube.analytic.measures import rotated_tau_infty, rho_infty
from lambert_tube.analytic.measures import corner_box, box_limit_probability
from lambert_tube.analytic.measures import plane_hit_cube_asymptotic
from lambert_tube.analytic.measures import plane_hit_density_asymptotic
from lambert_tube.analytic.limits import lambda_from_ladders, lambda_estimate
from lambert_tube.analytic.limits import lambda_slopes, centered_exit_bound
from lambert_tube.analytic.limits import conditional_ratio_limit
from lambert_tube.analytic.limits import renewal_limit, green_function_limit
from lambert_tube.analytic.limits import brightness_constant
from lambert_tube.analytic.limits import rim_brightness_constant


__all__ = [
    'ArccosineLaw',
    'TailConstant',
    'MeasureValue',
    'LambdaEstimate',
    'OffsetDisc',
    'offset_disc',
    'TauInftyMeasure',
    'int1d',
    'DEFAULT_REL_TOL',
    'arccos_survival',
    'product_survival',
    'product_survival_method',
    'product_tail_constant',
    'product_tail_closed_form',
    'step_survival',
    'abs_step_survival',
    'step_tail_constant',
    'step_tail_constant_gamma',
    'second_moment',
    'second_moment_cutoff',
    'positive_part_mean',
    'Region',
    'Ball',
    'Box',
    'Rotated',
    'Indicator',
    'ball_volume',
    'centered_ball',
    'touching_ball',
    'uniform_disc',
    'tau_infty',
    'rotated_tau_infty',
    'rho_infty',
    'corner_box',
    'box_limit_probability',
    'plane_hit_cube_asymptotic',
    'plane_hit_density_asymptotic',
    'lambda_from_ladders',
    'lambda_estimate',
    'lambda_slopes',
    'centered_exit_bound',
    'conditional_ratio_limit',
    'renewal_limit',
    'green_function_limit',
    'brightness_constant',
    'rim_brightness_constant',
]
