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

"""This sub-module evaluates the law of the axial step `X` of the chain:
its survival function, the constant `C_d` of its two-sided tail
`P(|X| > x) ~ C_d x^(-d)`, its second moment and the mean of its positive
part. The law is symmetric, so `P(X > x) ~ C_d x^(-d) / 2`.

Writing `V = sin(Theta)` and `P = cos(Phi_1) ... cos(Phi_{d-2})`, the step is
`X = 2 sqrt(1 - V^2) V P / (1 - V^2 P^2)`, so that for `x > 0`

    P(X > x) = 1/2 int_{x / sqrt(4 + x^2)}^1 G_{d-2}(g(v, x)) dv,
    g(v, x) = (sqrt(1 - v^2 + x^2) - sqrt(1 - v^2)) / (x v),

with `G_n` the survival function of a product of `n` arccosine variables.
For large `x` the substitution `1 / v^2 = 1 + w / x^2` maps the shrinking
`v` range onto `w` in [0, 4].
"""


import logging
import math

from cachetools import LRUCache, cached
from scipy.special import factorial2, gamma

from lambert_tube.analytic.arccosine import product_survival
from lambert_tube.analytic.arccosine import product_tail_constant
from lambert_tube.analytic.arccosine import arccos_survival
from lambert_tube.analytic.arccosine import MAX_NESTED_FACTORS
from lambert_tube.analytic.common import TailConstant
from lambert_tube.analytic.quadrature import int1d, DEFAULT_REL_TOL
from lambert_tube.geometry import as_dimension


_logger = logging.getLogger(__name__)

SURVIVAL_METHODS = ('auto', 'generic', 'closed')
MOMENT_METHODS = ('survival', 'angular')

# Relative tolerance used when the inner survival comes from Monte Carlo.
_MC_REL_TOL = 1e-4

# The tail cutoff of the second moment is the first power of two from
# _MIN_CUTOFF on where x^d P(X > x) is within _ASYMPTOTE_MATCH of C_d / 2.
_MIN_CUTOFF = 8.0
_MAX_CUTOFF = 4096.0
_ASYMPTOTE_MATCH = 0.01

# Integrands of outer quadratures evaluate their inner survival this much
# more tightly, down to _MIN_INNER_TOL.
_INNER_TOL_FACTOR = 0.01
_MIN_INNER_TOL = 1e-12


def _check_survival_method(dim, method):
    if method not in SURVIVAL_METHODS:
        raise ValueError('Unknown survival method {}, expected one of '
                         '{}.'.format(repr(method), SURVIVAL_METHODS))
    if method == 'closed' and dim.d != 3:
        raise ValueError('The closed survival path only exists for d = 3.')


def _inner(n, y, rel_tol, method):
    if method == 'closed':
        return arccos_survival(min(max(y, 0.0), 1.0))
    return product_survival(n, y, rel_tol, recursive=(method == 'generic'))


def _survival_v(dim, x, rel_tol, method):
    n = dim.n_phis
    x2 = x * x

    def integrand(v):
        a = 1.0 - v * v
        y = (math.sqrt(a + x2) - math.sqrt(a)) / (x * v)
        return _inner(n, min(y, 1.0), rel_tol, method)

    lo = x / math.sqrt(4.0 + x2)
    return 0.5 * int1d(integrand, lo, 1.0, rel_tol,
                       quantity='P(X > {}), d = {}'.format(x, dim.d))


def _survival_w(dim, x, rel_tol):
    n = dim.n_phis
    eps = 1.0 / (x * x)

    def integrand(w):
        ew = eps * w
        a = ew / (1.0 + ew)
        v = 1.0 / math.sqrt(1.0 + ew)
        y = (math.sqrt(a + x * x) - math.sqrt(a)) / (x * v)
        return _inner(n, min(y, 1.0), rel_tol, 'auto') * (1.0 + ew) ** -1.5

    value = int1d(integrand, 0.0, 4.0, rel_tol,
                  quantity='P(X > {}), d = {}'.format(x, dim.d))
    return 0.25 * eps * value


@cached(LRUCache(maxsize=65536))
def _step_survival(d, x, rel_tol, method):
    dim = as_dimension(d)

    if dim.n_phis > MAX_NESTED_FACTORS and rel_tol < _MC_REL_TOL:
        _logger.info('Relaxing step survival tolerance to %g for d = %d',
                     _MC_REL_TOL, d)
        rel_tol = _MC_REL_TOL

    if method == 'auto' and x >= 1.0:
        return _survival_w(dim, x, rel_tol)
    return _survival_v(dim, x, rel_tol, method)


def step_survival(dim, x, rel_tol=DEFAULT_REL_TOL, method='auto'):
    """Returns `P(X > x)` for the axial step `X`.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        x (:obj:`float`): The threshold, positive.
        rel_tol (:obj:`float`, optional): Relative tolerance. Defaults to
            1e-8.
        method (:obj:`str`, optional): `'auto'` integrates over `w` for
            `x >= 1` and over `v` otherwise, with closed-form inner survival
            for `d = 3`. `'generic'` always integrates over `v` and evaluates
            the inner survival by recursive quadrature. `'closed'` integrates
            over `v` with the arccosine closed form and requires `d = 3`.
            Defaults to `'auto'`.

    Returns:
        :obj:`float`: The survival probability.

    Raises:
        :obj:`~lambert_tube.errors.ToleranceNotMetError`: If the quadrature
            stalls.
    """

    dim = as_dimension(dim)
    _check_survival_method(dim, method)

    if not x > 0:
        raise ValueError('Threshold must be positive, got {}.'.format(x))

    return _step_survival(dim.d, float(x), float(rel_tol), method)


def abs_step_survival(dim, x, rel_tol=DEFAULT_REL_TOL, method='auto'):
    """Returns `P(|X| > x) = 2 P(X > x)`, the survival function whose tail
    constant is :func:`step_tail_constant`.
    """

    return 2.0 * step_survival(dim, x, rel_tol, method)


def step_tail_constant(dim):
    """Returns `C_d = lim x^d P(|X| > x)`, equal to
    `2 / (d - 1)!! * (2 / pi)^((d - 2) / 2)` for even `d` and
    `2 / (d - 1)!! * (2 / pi)^((d - 3) / 2)` for odd `d`.

    Returns:
        :obj:`~lambert_tube.analytic.common.TailConstant`: The constant.
    """

    d = as_dimension(dim).d
    dfact = float(factorial2(d - 1, exact=True))
    power = (d - 2) // 2 if d % 2 == 0 else (d - 3) // 2

    return TailConstant(d, 2.0 / dfact * (2.0 / math.pi) ** power)


def step_tail_constant_gamma(dim):
    """Returns `C_d` through its Gamma-function form
    `2^(d / 2) Gamma(d / 2)^2 d / Gamma(d + 1) * c_{d-2}`.

    Returns:
        :obj:`~lambert_tube.analytic.common.TailConstant`: The constant.
    """

    d = as_dimension(dim).d
    c = product_tail_constant(d - 2).value
    value = 2.0 ** (0.5 * d) * gamma(0.5 * d) ** 2 * d / gamma(d + 1.0) * c

    return TailConstant(d, float(value))


def _inner_tol(rel_tol):
    return max(rel_tol * _INNER_TOL_FACTOR, _MIN_INNER_TOL)


def _second_moment_integrand(dim, rel_tol):
    def integrand(x):
        return 4.0 * x * step_survival(dim, x, rel_tol)
    return integrand


def second_moment_cutoff(dim, rel_tol=DEFAULT_REL_TOL):
    """Returns the tail cutoff used by :func:`second_moment`: the first
    power of two, from 8 on, where `x^d P(X > x)` matches `C_d / 2` within
    1%.
    """

    dim = as_dimension(dim)
    c_d = 0.5 * step_tail_constant(dim).value
    cutoff = _MIN_CUTOFF

    while cutoff < _MAX_CUTOFF:
        ratio = cutoff ** dim.d * step_survival(dim, cutoff, rel_tol) / c_d
        if abs(ratio - 1.0) <= _ASYMPTOTE_MATCH:
            break
        cutoff *= 2.0

    return cutoff


def _second_moment_survival(dim, rel_tol, cutoff):
    d = dim.d
    c_d = 0.5 * step_tail_constant(dim).value

    if cutoff is None:
        cutoff = second_moment_cutoff(dim, rel_tol)

    # Break points 0, 1, 2, 4, ..., cutoff.
    edges = [0.0, 1.0]
    while edges[-1] < cutoff:
        edges.append(min(2.0 * edges[-1], cutoff))

    inner_tol = _inner_tol(rel_tol)
    integrand = _second_moment_integrand(dim, inner_tol)
    body = sum(int1d(integrand, a, b, rel_tol,
                     quantity='E[X^2] on [{}, {}]'.format(a, b))
               for a, b in zip(edges[:-1], edges[1:]))

    # Beyond the cutoff P(X > x) = c_d x^(-d) (1 + b / x^2 + e / x^4 + ...),
    # b and e being read off at the cutoff and at twice the cutoff.
    # Integrating 4 x P(X > x) term by term gives the tail below.
    x1, x2 = cutoff, 2.0 * cutoff
    q1 = (x1 ** d * step_survival(dim, x1, inner_tol) / c_d - 1.0) * x1 ** 2
    q2 = (x2 ** d * step_survival(dim, x2, inner_tol) / c_d - 1.0) * x2 ** 2
    e = (q1 - q2) / (x1 ** -2 - x2 ** -2)
    b = q1 - e * x1 ** -2
    tail = 4.0 * c_d * (x1 ** (2 - d) / (d - 2) + b * x1 ** -d / d
                        + e * x1 ** (-d - 2) / (d + 2))

    _logger.debug('E[X^2], d = %d: body %.12g up to %g, tail %.12g', d, body,
                  cutoff, tail)

    return body + tail


def _second_moment_kernel(p):
    # h(p) = int_0^1 4 (1 - v^2) v^2 p^2 / (1 - v^2 p^2)^2 dv
    if p < 0.05:
        q2 = p * p
        return 2.0 * sum((4.0 * k - 4.0) / (4.0 * k * k - 1.0)
                         * q2 ** (k - 1) for k in range(2, 10))
    if p >= 1.0:
        return math.inf
    return 2.0 / (p * p) * ((3.0 - p * p) * math.atanh(p) / p - 3.0)


def _positive_part_kernel(p):
    # k(p) = int_0^1 sqrt(1 - v^2) v p / (1 - v^2 p^2) dv
    if p >= 1.0:
        return 1.0
    z = p / math.sqrt(1.0 - p * p)
    if z < 0.01:
        z2 = z * z
        core = z2 / 3.0 - z2 * z2 / 5.0 + z2 ** 3 / 7.0
    else:
        core = 1.0 - math.atan(z) / z
    return core / p


def _angular_expectation(func, n, rel_tol, quantity):
    # E[func(cos(Phi_1) ... cos(Phi_n))] by nested quadrature over the
    # angles, each with density 2 / pi on (0, pi / 2).
    def level(k, scale):
        if k == 0:
            return func(scale)

        def integrand(u):
            return level(k - 1, scale * math.cos(u))

        return 2.0 / math.pi * int1d(integrand, 0.0, 0.5 * math.pi, rel_tol,
                                     quantity=quantity)

    return level(n, 1.0)


@cached(LRUCache(maxsize=128))
def _second_moment(d, rel_tol, method, cutoff):
    dim = as_dimension(d)
    if method == 'survival':
        return _second_moment_survival(dim, rel_tol, cutoff)
    return _angular_expectation(_second_moment_kernel, dim.n_phis, rel_tol,
                                'E[X^2], d = {}'.format(d))


def second_moment(dim, rel_tol=DEFAULT_REL_TOL, method='survival',
                  cutoff=None):
    """Returns `E[X^2]` for the axial step.

    Args:
        dim (:obj:`~lambert_tube.geometry.Dimension` or :obj:`int`): The
            ambient dimension.
        rel_tol (:obj:`float`, optional): Relative tolerance. Defaults to
            1e-8.
        method (:obj:`str`, optional): `'survival'` integrates
            `4 x P(X > x)` up to a cutoff and adds the asymptotic tail.
            `'angular'` averages the closed-form conditional second moment
            given the azimuthal angles. Defaults to `'survival'`.
        cutoff (:obj:`float`, optional): Tail cutoff for the survival
            method. Defaults to :func:`second_moment_cutoff`.

    Returns:
        :obj:`float`: The second moment.
    """

    if method not in MOMENT_METHODS:
        raise ValueError('Unknown moment method {}, expected one of '
                         '{}.'.format(repr(method), MOMENT_METHODS))

    dim = as_dimension(dim)
    cutoff = None if cutoff is None else float(cutoff)
    return _second_moment(dim.d, float(rel_tol), method, cutoff)


@cached(LRUCache(maxsize=128))
def _positive_part_mean(d, rel_tol):
    dim = as_dimension(d)
    return _angular_expectation(_positive_part_kernel, dim.n_phis, rel_tol,
                                'E[X+], d = {}'.format(d))


def positive_part_mean(dim, rel_tol=DEFAULT_REL_TOL):
    """Returns `E[X 1{X > 0}]`, half the mean absolute step.

    Returns:
        :obj:`float`: The mean of the positive part.
    """

    return _positive_part_mean(as_dimension(dim).d, float(rel_tol))
