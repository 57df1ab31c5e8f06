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

"""Batch-means error estimates for Monte Carlo averages and ratios of
averages.
"""


from collections import namedtuple
import math

import numpy as np
from scipy.stats import t as student_t

from lambert_tube.errors import TooFewBatchesError


DEFAULT_BATCHES = 20
MIN_BATCHES = 8


class BatchEstimate(namedtuple('BatchEstimate', ['mean', 'half_width',
                                                 'std_err', 'batches'])):
    """A named tuple containing a Monte Carlo estimate and its batch-means
    confidence interval.

    Attributes:
        mean (:obj:`float`): The estimate.
        half_width (:obj:`float`): Half width of the confidence interval.
        std_err (:obj:`float`): Standard error of the estimate.
        batches (:obj:`int`): Number of batches used.
    """

    __slots__ = ()

    @property
    def interval(self):
        """:obj:`tuple`: The interval `(mean - half_width,
        mean + half_width)`.
        """

        return self.mean - self.half_width, self.mean + self.half_width


def _batch_rows(values, batches):
    if batches < MIN_BATCHES:
        raise TooFewBatchesError(
            'Batch means need at least {} batches, got {}'.format(
                MIN_BATCHES, batches))
    if values.shape[0] < batches:
        raise TooFewBatchesError(
            'Cannot split {} values into {} batches'.format(values.shape[0],
                                                            batches))

    # Trailing values that do not fill a batch only enter the point estimate.
    size = values.shape[0] // batches
    return values[:size * batches].reshape(batches, size)


def _half_width(std_err, batches, level):
    return float(student_t.ppf(0.5 + 0.5 * level, batches - 1)) * std_err


def batch_mean_ci(values, batches=DEFAULT_BATCHES, level=0.95):
    """Estimates the mean of a stream of values with a batch-means
    confidence interval. The stream is cut into `batches` consecutive batches
    of equal size and the spread of the batch means gives the standard
    error; the half width uses Student's t with `batches - 1` degrees of
    freedom.

    Args:
        values (array-like): The stream.
        batches (:obj:`int`, optional): Number of batches, at least 8.
            Defaults to 20.
        level (:obj:`float`, optional): Confidence level. Defaults to 0.95.

    Returns:
        :obj:`BatchEstimate`: The estimate.

    Raises:
        :obj:`~lambert_tube.errors.TooFewBatchesError`: If fewer than 8
            batches, or fewer values than batches, are given.
    """

    values = np.asarray(values, dtype=float).ravel()
    rows = _batch_rows(values, batches)

    means = rows.mean(axis=1)
    std_err = float(np.std(means, ddof=1)) / math.sqrt(batches)

    return BatchEstimate(float(values.mean()),
                         _half_width(std_err, batches, level), std_err,
                         batches)


def ratio_ci(numerators, denominators, batches=DEFAULT_BATCHES, level=0.95):
    """Estimates `E[A] / E[B]` by `sum(A) / sum(B)` with a batch-means
    confidence interval obtained from the linearised residuals
    `(A - r B) / mean(B)`.

    Args:
        numerators (array-like): Samples of `A`.
        denominators (array-like): Samples of `B`, paired with `A`.
        batches (:obj:`int`, optional): Number of batches, at least 8.
            Defaults to 20.
        level (:obj:`float`, optional): Confidence level. Defaults to 0.95.

    Returns:
        :obj:`BatchEstimate`: The ratio estimate.

    Raises:
        :obj:`~lambert_tube.errors.TooFewBatchesError`: If fewer than 8
            batches, or fewer values than batches, are given.
        :obj:`ValueError`: If the arrays differ in length or `B` sums to 0.
    """

    numerators = np.asarray(numerators, dtype=float).ravel()
    denominators = np.asarray(denominators, dtype=float).ravel()

    if numerators.shape != denominators.shape:
        raise ValueError('Numerators and denominators must be paired.')

    den_mean = denominators.mean()
    if den_mean == 0.0:
        raise ValueError('Denominators average to zero.')

    ratio = float(numerators.mean() / den_mean)
    rows = _batch_rows((numerators - ratio * denominators) / den_mean,
                       batches)

    std_err = float(np.std(rows.mean(axis=1), ddof=1)) / math.sqrt(batches)

    return BatchEstimate(ratio, _half_width(std_err, batches, level), std_err,
                         batches)
