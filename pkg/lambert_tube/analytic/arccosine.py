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

"""This sub-module evaluates the survival function of products of
independent arccosine variables `F_k = cos(Phi_k)` and the constants of
their tails near 1.

For `G_n(x) = P(F_1 ... F_n > x)` the survival function satisfies
`G_n(x) = (2 / pi) * int_{arcsin x}^{pi / 2} G_{n-1}(x / sin u) du`, where
the substitution `s = sin u` removes the endpoint singularity of the
arccosine density, and `G_n(x) ~ c_n (1 - x)^(n / 2)` as `x -> 1`.
"""


import logging
import math

from cachetools import LRUCache, cached
import numpy as np
from scipy.special import factorial2

from lambert_tube.analytic.common import ArccosineLaw, TailConstant
from lambert_tube.analytic.quadrature import int1d, DEFAULT_REL_TOL


_logger = logging.getLogger(__name__)

ARCCOSINE = ArccosineLaw()

# Nested quadrature is used for up to this many factors, stratified Monte
# Carlo beyond.
MAX_NESTED_FACTORS = 3

_MC_SAMPLES = 1 << 20
_MC_STRATA = 1024
_MC_SEED = 20170913


def arccos_survival(x):
    """Returns `P(F > x) = (2 / pi) * arccos(x)`.

    Args:
        x (:obj:`float`): A point of [0, 1].

    Returns:
        :obj:`float`: The survival probability.

    Raises:
        :obj:`ValueError`: If `x` is outside [0, 1].
    """

    return float(ARCCOSINE.survival(x))


def product_survival_method(n):
    """Returns `'quadrature'` or `'monte-carlo'`, the way
    :func:`product_survival` evaluates products of `n` factors.
    """

    return 'quadrature' if n <= MAX_NESTED_FACTORS else 'monte-carlo'


@cached(LRUCache(maxsize=16))
def _sorted_products(n):
    _logger.info('Switching to stratified Monte Carlo for products of %d '
                 'arccosine factors (%d samples)', n, _MC_SAMPLES)

    rng = np.random.Generator(np.random.Philox(
        np.random.SeedSequence(_MC_SEED, spawn_key=(n,))))

    per_stratum = _MC_SAMPLES // _MC_STRATA
    strata = np.repeat(np.arange(_MC_STRATA), per_stratum)
    first = (strata + rng.random(strata.shape[0])) / _MC_STRATA
    angles = np.empty((strata.shape[0], n))
    angles[:, 0] = math.pi * (first - 0.5)
    angles[:, 1:] = rng.uniform(-0.5 * math.pi, 0.5 * math.pi,
                                (strata.shape[0], n - 1))

    return np.sort(np.prod(np.cos(angles), axis=1))


def _product_survival_mc(n, x):
    products = _sorted_products(n)
    above = products.shape[0] - np.searchsorted(products, x, side='right')
    return above / products.shape[0]


@cached(LRUCache(maxsize=65536))
def _product_survival(n, x, rel_tol, recursive):
    if x <= 0.0:
        return 1.0
    if x >= 1.0:
        return 0.0
    if n == 0:
        return 1.0
    if n == 1 and not recursive:
        return arccos_survival(x)
    if n > MAX_NESTED_FACTORS:
        return _product_survival_mc(n, x)

    def integrand(u):
        return _product_survival(n - 1, min(x / math.sin(u), 1.0), rel_tol,
                                 recursive)

    value = int1d(integrand, math.asin(x), 0.5 * math.pi, rel_tol,
                  quantity='G_{}({})'.format(n, x))
    return 2.0 / math.pi * value


def product_survival(n, x, rel_tol=DEFAULT_REL_TOL, recursive=False):
    """Returns `G_n(x) = P(F_1 ... F_n > x)` for independent arccosine
    variables.

    Args:
        n (:obj:`int`): Number of factors, at least 1.
        x (:obj:`float`): The threshold.
        rel_tol (:obj:`float`, optional): Relative tolerance of each
            quadrature level. Defaults to 1e-8.
        recursive (:obj:`bool`, optional): If `True`, the one-factor case is
            also integrated numerically instead of using the closed form.
            Defaults to `False`.

    Returns:
        :obj:`float`: The survival probability.

    Raises:
        :obj:`~lambert_tube.errors.ToleranceNotMetError`: If a quadrature
            level stalls.
    """

    if int(n) != n or n < 1:
        raise ValueError('Number of factors must be a positive integer.')

    return _product_survival(int(n), float(x), float(rel_tol),
                             bool(recursive))


def product_tail_constant(n):
    """Returns the constant `c_n` with `G_n(x) ~ c_n (1 - x)^(n / 2)`,
    computed from `c_1 = 2 sqrt(2) / pi`, `c_2 = 2 / pi` and
    `c_n = 4 c_{n-2} / (pi n)`.

    Args:
        n (:obj:`int`): Number of factors, at least 1.

    Returns:
        :obj:`~lambert_tube.analytic.common.TailConstant`: The constant.
    """

    if int(n) != n or n < 1:
        raise ValueError('Number of factors must be a positive integer.')

    k = int(n)
    value = 2.0 * math.sqrt(2.0) / math.pi if k % 2 else 2.0 / math.pi
    for j in range(4 - k % 2, k + 1, 2):
        value *= 4.0 / (math.pi * j)

    return TailConstant(k, value)


def product_tail_closed_form(n):
    """Returns `c_n` from its closed form: `(4 / pi)^(n / 2) / n!!` for even
    `n` and `(4 / pi)^((n + 1) / 2) / (sqrt(2) n!!)` for odd `n`.

    Returns:
        :obj:`~lambert_tube.analytic.common.TailConstant`: The constant.
    """

    if int(n) != n or n < 1:
        raise ValueError('Number of factors must be a positive integer.')

    k = int(n)
    dfact = float(factorial2(k, exact=True))

    if k % 2 == 0:
        value = (4.0 / math.pi) ** (k // 2) / dfact
    else:
        value = (4.0 / math.pi) ** ((k + 1) // 2) / (math.sqrt(2.0) * dfact)

    return TailConstant(k, value)
