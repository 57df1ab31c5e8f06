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

"""This module contains the statistics used to confront simulations with the
analytic laws: empirical distributions, Kolmogorov-Smirnov distances, tail
index fits and batch-means confidence intervals.
"""

from lambert_tube.estimators.empirical import EmpiricalDistribution
from lambert_tube.estimators.empirical import empirical_distribution
from lambert_tube.estimators.empirical import empirical_survival
from lambert_tube.estimators.empirical import empirical_cdf
from lambert_tube.estimators.empirical import ks_statistic
from lambert_tube.estimators.empirical import ks_critical_value
from lambert_tube.estimators.tails import TailFit, loglog_tail_fit
from lambert_tube.estimators.tails import default_window
from lambert_tube.estimators.montecarlo import BatchEstimate, batch_mean_ci
from lambert_tube.estimators.montecarlo import ratio_ci, DEFAULT_BATCHES


__all__ = [
    'EmpiricalDistribution',
    'empirical_distribution',
    'empirical_survival',
    'empirical_cdf',
    'ks_statistic',
    'ks_critical_value',
    'TailFit',
    'loglog_tail_fit',
    'default_window',
    'BatchEstimate',
    'batch_mean_ci',
    'ratio_ci',
    'DEFAULT_BATCHES',
]
