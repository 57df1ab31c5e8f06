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

"""Log-log regression of the empirical survival function, used to read off
the index of a regularly varying tail.
"""


from collections import namedtuple

import numpy as np
from scipy.stats import linregress

from lambert_tube.errors import InsufficientTailDataError
from lambert_tube.estimators.empirical import empirical_survival


DEFAULT_GRID_POINTS = 20
MIN_GRID_POINTS = 10
MIN_EXCEEDANCES = 100

_DEFAULT_LO_QUANTILE = 0.95
_DEFAULT_HI_REMAINING = 500


class TailFit(namedtuple('TailFit', ['slope', 'intercept', 'x_range',
                                     'stderr_slope'])):
    """A named tuple containing a straight-line fit of
    `log P(X > x)` against `log x`.

    Attributes:
        slope (:obj:`float`): The fitted slope, minus the tail index.
        intercept (:obj:`float`): The fitted intercept.
        x_range (:obj:`tuple`): The window `(lo, hi)` of the grid.
        stderr_slope (:obj:`float`): Standard error of the slope.
    """

    __slots__ = ()

    @property
    def index(self):
        """:obj:`float`: The estimated tail index, `-slope`.
        """

        return -self.slope


def default_window(dist):
    """Returns the default fit window: from the empirical 95th percentile to
    the point beyond which 500 samples remain.

    Raises:
        :obj:`~lambert_tube.errors.InsufficientTailDataError`: If there are
            not enough samples for the upper end.
    """

    if dist.n <= _DEFAULT_HI_REMAINING:
        raise InsufficientTailDataError(dist.n, _DEFAULT_HI_REMAINING + 1)

    lo = float(dist.quantile(_DEFAULT_LO_QUANTILE))
    hi = float(dist.sorted_samples[dist.n - _DEFAULT_HI_REMAINING])
    return lo, hi


def loglog_tail_fit(dist, lo=None, hi=None,
                    grid_points=DEFAULT_GRID_POINTS):
    """Fits `log P(X > x) = slope * log x + intercept` by least squares on a
    log-spaced grid of `[lo, hi]`, with `P` the empirical survival function.

    Args:
        dist (:obj:`~lambert_tube.estimators.EmpiricalDistribution`): The
            samples.
        lo (:obj:`float`, optional): Lower end of the window, positive.
            Defaults to the empirical 95th percentile.
        hi (:obj:`float`, optional): Upper end of the window. Defaults to
            the point beyond which 500 samples remain.
        grid_points (:obj:`int`, optional): Number of grid points, at least
            10. Defaults to 20.

    Returns:
        :obj:`TailFit`: The fit.

    Raises:
        :obj:`~lambert_tube.errors.InsufficientTailDataError`: If fewer
            than 100 samples exceed `hi`.
        :obj:`ValueError`: If the window or the grid is invalid.
    """

    if lo is None or hi is None:
        default_lo, default_hi = default_window(dist)
        lo = default_lo if lo is None else lo
        hi = default_hi if hi is None else hi

    if grid_points < MIN_GRID_POINTS:
        raise ValueError('Tail fit needs at least {} grid points.'.format(
            MIN_GRID_POINTS))
    if not 0.0 < lo < hi:
        raise ValueError('Invalid fit window [{}, {}].'.format(lo, hi))

    exceedances = int(dist.n - np.searchsorted(dist.sorted_samples, hi,
                                               side='right'))
    if exceedances < MIN_EXCEEDANCES:
        raise InsufficientTailDataError(exceedances, MIN_EXCEEDANCES)

    grid = np.geomspace(lo, hi, grid_points)
    fit = linregress(np.log(grid), np.log(empirical_survival(dist, grid)))

    return TailFit(float(fit.slope), float(fit.intercept),
                   (float(lo), float(hi)), float(fit.stderr))
