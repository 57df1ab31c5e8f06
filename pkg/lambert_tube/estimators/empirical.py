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

"""This sub-module contains empirical distributions built from simulated
samples and the Kolmogorov-Smirnov distance to a reference law.
"""


from collections import namedtuple
import math

import numpy as np
from scipy.stats import kstwobign


class EmpiricalDistribution(namedtuple('EmpiricalDistribution',
                                       ['sorted_samples', 'n'])):
    """A named tuple containing the empirical law of a sample.

    Attributes:
        sorted_samples (:obj:`numpy.ndarray`): The samples in ascending
            order.
        n (:obj:`int`): The number of samples, at least 1.
    """

    __slots__ = ()

    def survival(self, x):
        """Shortcut for :func:`empirical_survival`.
        """

        return empirical_survival(self, x)

    def cdf(self, x):
        """Shortcut for :func:`empirical_cdf`.
        """

        return empirical_cdf(self, x)

    def quantile(self, q):
        """Returns the empirical `q`-quantile (linear interpolation).
        """

        return np.quantile(self.sorted_samples, q)


def empirical_distribution(samples):
    """Creates an :obj:`EmpiricalDistribution` from an array of samples.

    Args:
        samples (array-like): Finite real samples.

    Returns:
        :obj:`EmpiricalDistribution`: The empirical law.

    Raises:
        :obj:`ValueError`: If `samples` is empty or not finite.
    """

    samples = np.asarray(samples, dtype=float).ravel()

    if samples.shape[0] == 0:
        raise ValueError('Empirical distribution needs at least one sample.')
    if not np.all(np.isfinite(samples)):
        raise ValueError('Samples must be finite.')

    return EmpiricalDistribution(np.sort(samples), samples.shape[0])


def empirical_survival(dist, x):
    """Returns the fraction of samples strictly greater than `x`. The result
    is nonincreasing and right-continuous in `x`.
    """

    above = dist.n - np.searchsorted(dist.sorted_samples, x, side='right')
    return above / dist.n


def empirical_cdf(dist, x):
    """Returns the fraction of samples lower than or equal to `x`.
    """

    return np.searchsorted(dist.sorted_samples, x, side='right') / dist.n


def ks_statistic(dist, cdf):
    """Returns the Kolmogorov-Smirnov distance
    `sup_x |F_n(x) - F(x)|` between the empirical law and a reference CDF.

    The supremum is attained at a sample point, either as the jump of the
    empirical CDF overshooting `F` or as the left limit of `F` overshooting
    the empirical CDF before the jump. Both are checked, the left limits
    being evaluated one ulp below each sample.

    Args:
        dist (:obj:`EmpiricalDistribution`): The empirical law.
        cdf (:obj:`callable`): A vectorised, nondecreasing reference CDF.

    Returns:
        :obj:`float`: The statistic, in [0, 1].
    """

    x = dist.sorted_samples
    n = dist.n
    ranks = np.arange(1, n + 1)

    at = np.asarray(cdf(x), dtype=float)
    before = np.asarray(cdf(np.nextafter(x, -np.inf)), dtype=float)

    d_plus = np.max(ranks / n - at)
    d_minus = np.max(before - (ranks - 1) / n)

    return float(max(d_plus, d_minus, 0.0))


def ks_critical_value(n, alpha=0.01):
    """Returns the asymptotic critical value `K_(1 - alpha) / sqrt(n)` of
    the Kolmogorov-Smirnov statistic for `n` samples.
    """

    if n < 1:
        raise ValueError('Need at least one sample.')
    if not 0.0 < alpha < 1.0:
        raise ValueError('Level must lie in (0, 1).')

    return float(kstwobign.ppf(1.0 - alpha)) / math.sqrt(n)
