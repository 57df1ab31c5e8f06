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

"""This sub-module builds the orthogonal operators of the cross-section
space that carry the base point (0, ..., 0, -1) to a given point of the
sphere.

The default construction is the Householder reflection swapping the base
point and the target. An alternate construction first applies a fixed
operator that leaves the base point unchanged, which gives a different
operator with the same image of the base point.
"""


import numpy as np

from lambert_tube.geometry.common import RotationOperator, base_point


CONSTRUCTIONS = ('householder', 'alternate')

_ALTERNATE_ANGLE = 1.0
_COINCIDENT_TOL = 1e-15


def _check_construction(construction):
    if construction not in CONSTRUCTIONS:
        raise ValueError('Unknown rotation construction {}, expected one '
                         'of {}.'.format(repr(construction), CONSTRUCTIONS))


def _fixed_operator(m):
    # An orthogonal operator of R^m that leaves the last axis unchanged.
    matrix = np.eye(m)

    if m >= 3:
        c = np.cos(_ALTERNATE_ANGLE)
        s = np.sin(_ALTERNATE_ANGLE)
        matrix[0, 0] = c
        matrix[0, 1] = -s
        matrix[1, 0] = s
        matrix[1, 1] = c
    else:
        matrix[0, 0] = -1.0

    return matrix


def _householder(target):
    m = target.shape[0]
    w = base_point(m + 1) - target
    norm_sq = float(w @ w)

    if norm_sq < _COINCIDENT_TOL ** 2:
        return np.eye(m)

    return np.eye(m) - (2.0 / norm_sq) * np.outer(w, w)


def rotation_to(target, construction='householder'):
    """Returns an orthogonal operator mapping the base point to `target`.

    Args:
        target (:obj:`~lambert_tube.geometry.common.CrossSectionPoint` or
            array-like): A point of the cross-section sphere.
        construction (:obj:`str`, optional): Either `'householder'` or
            `'alternate'`. Defaults to `'householder'`.

    Returns:
        :obj:`~lambert_tube.geometry.common.RotationOperator`: The operator.
    """

    _check_construction(construction)

    target = np.array(getattr(target, 'coords', target), dtype=float)
    matrix = _householder(target)

    if construction == 'alternate':
        matrix = matrix @ _fixed_operator(target.shape[0])

    return RotationOperator(matrix, target)


def alternate_rotation_to(target):
    """Shortcut for :func:`rotation_to` with the alternate construction.
    """

    return rotation_to(target, construction='alternate')


def rotate_batch(targets, points, construction='householder'):
    """Applies the operator mapping the base point to `targets[i]` to
    `points[i]`, for every row `i`.

    This is the vectorised form of `rotation_to(targets[i])(points[i])`
    and never materialises the matrices.

    Args:
        targets (:obj:`numpy.ndarray`): Points of the sphere, shape
            `(n, d - 1)`.
        points (:obj:`numpy.ndarray`): Points to rotate, shape `(n, d - 1)`.
        construction (:obj:`str`, optional): Either `'householder'` or
            `'alternate'`. Defaults to `'householder'`.

    Returns:
        :obj:`numpy.ndarray`: The rotated points, shape `(n, d - 1)`.
    """

    _check_construction(construction)

    targets = np.asarray(targets, dtype=float)
    points = np.asarray(points, dtype=float)
    m = targets.shape[1]

    if construction == 'alternate':
        points = points @ _fixed_operator(m).T

    w = base_point(m + 1)[None, :] - targets
    norm_sq = np.einsum('ij,ij->i', w, w)
    proj = np.einsum('ij,ij->i', w, points)

    scale = np.zeros_like(norm_sq)
    moving = norm_sq >= _COINCIDENT_TOL ** 2
    scale[moving] = 2.0 * proj[moving] / norm_sq[moving]

    return points - scale[:, None] * w
