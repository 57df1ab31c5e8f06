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

"""Thin wrapper around :func:`scipy.integrate.quad` that turns stalled
refinement into :obj:`~lambert_tube.errors.ToleranceNotMetError`.
"""


import logging

from scipy.integrate import quad

from lambert_tube.errors import ToleranceNotMetError


_logger = logging.getLogger(__name__)

DEFAULT_REL_TOL = 1e-8

# Results whose error estimate exceeds the requested tolerance are logged
# as warnings, and raise once it is this many times larger.
_STALL_FACTOR = 100.0


def int1d(func, a, b, rel_tol=DEFAULT_REL_TOL, quantity='integral',
          points=None, limit=200):
    """Integrates `func` over `[a, b]` with adaptive Gauss-Kronrod
    refinement to relative tolerance `rel_tol`.

    Args:
        func (:obj:`callable`): The integrand.
        a (:obj:`float`): Lower bound.
        b (:obj:`float`): Upper bound.
        rel_tol (:obj:`float`, optional): Relative tolerance. Defaults to
            :const:`DEFAULT_REL_TOL`.
        quantity (:obj:`str`, optional): Name used in error messages.
        points (:obj:`list`, optional): Break points inside `[a, b]`.
        limit (:obj:`int`, optional): Maximum number of subintervals.

    Returns:
        :obj:`float`: The value of the integral.

    Raises:
        :obj:`~lambert_tube.errors.ToleranceNotMetError`: If refinement
            stops with an error estimate well above the requested tolerance.
            Smaller excesses are logged with the relative error achieved.
    """

    result = quad(func, a, b, epsabs=0.0, epsrel=rel_tol, limit=limit,
                  points=points, full_output=1)
    value, abs_err = result[0], result[1]
    achieved = abs_err / abs(value) if value else abs_err

    if len(result) == 4:
        _logger.debug('%s on [%g, %g]: %s', quantity, a, b,
                      result[3].splitlines()[0])
        if achieved > _STALL_FACTOR * rel_tol:
            raise ToleranceNotMetError(quantity, abs_err, value)

    if achieved > rel_tol:
        _logger.warning('%s on [%g, %g]: relative error %.3g above the '
                        'requested %.3g', quantity, a, b, achieved, rel_tol)

    return value
