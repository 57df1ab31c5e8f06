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

"""This sub-module contains the records produced by the reflection chain:
chain states, first-passage records over a level, ladder records over level
zero and renewal visit histograms, together with their batched forms.
"""


from collections import namedtuple

import numpy as np


class ChainState(namedtuple('ChainState', ['axial', 'cross', 'step_index'])):
    """A named tuple containing the position of the chain after some number
    of reflections.

    Attributes:
        axial (:obj:`float`): Axial coordinate of the reflection point.
        cross (:obj:`numpy.ndarray`): Cross-section coordinates of the
            reflection point, on the unit sphere.
        step_index (:obj:`int`): Number of reflections so far.
    """

    __slots__ = ()


class ExitRecord(namedtuple('ExitRecord', ['n_s', 'overshoot', 'undershoot',
                                           'pre_exit_axial',
                                           'pre_exit_cross', 'exit_point',
                                           'exit_dir'])):
    """A named tuple containing the first passage of a walk over level `s`.

    Attributes:
        n_s (:obj:`int`): Index of the first reflection beyond `s`.
        overshoot (:obj:`float`): Distance beyond `s` of that reflection.
        undershoot (:obj:`float`): Distance below `s` of the previous
            reflection.
        pre_exit_axial (:obj:`float`): Axial coordinate of the previous
            reflection.
        pre_exit_cross (:obj:`numpy.ndarray`): Cross-section coordinates of
            the previous reflection.
        exit_point (:obj:`numpy.ndarray`): Point where the last flight
            crosses the plane at level `s`, inside the unit disc.
        exit_dir (:obj:`numpy.ndarray`): Unit direction of the last flight.
    """

    __slots__ = ()

    @property
    def ratio(self):
        """:obj:`float`: The fraction `U / (U + O)` of the last flight
        travelled before level `s`.
        """

        return self.undershoot / (self.undershoot + self.overshoot)


class LadderRecord(namedtuple('LadderRecord', ['o0', 'u0'])):
    """A named tuple containing the first passage of a walk over level 0.

    Attributes:
        o0 (:obj:`float`): The first strictly positive position.
        u0 (:obj:`float`): Minus the last non-positive position.
    """

    __slots__ = ()


class VisitHistogram(namedtuple('VisitHistogram', ['level', 'bin_edges',
                                                   'counts', 'trajectories',
                                                   'count_squares',
                                                   'excluded'])):
    """A named tuple containing renewal visit counts below a level.

    Bin `i` collects the reflections `S_k` with `k < N_s` and
    `bin_edges[i] * level <= S_k - level < bin_edges[i + 1] * level`.

    Attributes:
        level (:obj:`float`): The level `s`.
        bin_edges (:obj:`numpy.ndarray`): Increasing bin edges, in units of
            `s`.
        counts (:obj:`numpy.ndarray`): Total visits per bin over all
            trajectories.
        trajectories (:obj:`int`): Number of trajectories.
        count_squares (:obj:`numpy.ndarray`): Sum over trajectories of the
            squared per-trajectory counts.
        excluded (:obj:`int`): Trajectories that ran out of steps before
            passing the level. Only their visits within the step budget are
            counted.
    """

    __slots__ = ()

    @property
    def mean_visits(self):
        """:obj:`numpy.ndarray`: Expected visits per bin estimated as
        `counts / trajectories`.
        """

        return self.counts / max(self.trajectories, 1)

    @property
    def std_errs(self):
        """:obj:`numpy.ndarray`: Standard errors of :attr:`mean_visits`.
        """

        n = self.trajectories
        if n < 2:
            return np.full(self.counts.shape, np.nan)
        mean = self.counts / n
        var = (self.count_squares / n - mean ** 2) * n / (n - 1)
        return np.sqrt(np.maximum(var, 0.0) / n)

    @staticmethod
    def merge(histograms):
        """Adds up histograms of the same level and bins.
        """

        histograms = list(histograms)
        first = histograms[0]
        return VisitHistogram(
            first.level,
            first.bin_edges,
            sum(h.counts for h in histograms),
            sum(h.trajectories for h in histograms),
            sum(h.count_squares for h in histograms),
            sum(h.excluded for h in histograms))


_EXIT_FIELDS = ['n_s', 'overshoot', 'undershoot', 'pre_exit_axial',
                'pre_exit_cross', 'exit_point', 'exit_dir']


class ExitBatch(namedtuple('ExitBatch', _EXIT_FIELDS + ['excluded'])):
    """A named tuple containing many exit records as arrays, in the order
    the walks were started. The fields are those of :obj:`ExitRecord` with
    a leading axis, plus the number of walks that ran out of steps.

    Attributes:
        excluded (:obj:`int`): Walks that did not pass the level within the
            step budget. They are not part of the arrays.
    """

    __slots__ = ()

    def __len__(self):
        return self.n_s.shape[0]

    @property
    def size(self):
        """:obj:`int`: Number of exits in the batch.
        """

        return self.n_s.shape[0]

    @property
    def ratio(self):
        """:obj:`numpy.ndarray`: The fractions `U / (U + O)`.
        """

        return self.undershoot / (self.undershoot + self.overshoot)

    def record(self, i):
        """Returns the `i`-th exit as an :obj:`ExitRecord`.
        """

        return ExitRecord(int(self.n_s[i]), float(self.overshoot[i]),
                          float(self.undershoot[i]),
                          float(self.pre_exit_axial[i]),
                          self.pre_exit_cross[i], self.exit_point[i],
                          self.exit_dir[i])

    def select(self, mask, limit=None):
        """Returns the exits selected by `mask`, keeping at most the first
        `limit` of them. The exclusion count is carried over unchanged.
        """

        idx = np.flatnonzero(mask)
        if limit is not None:
            idx = idx[:limit]
        arrays = [getattr(self, f)[idx] for f in _EXIT_FIELDS]
        return ExitBatch(*arrays, excluded=self.excluded)

    @staticmethod
    def concatenate(batches):
        """Joins batches in the given order.
        """

        batches = list(batches)
        arrays = [np.concatenate([getattr(b, f) for b in batches])
                  for f in _EXIT_FIELDS]
        return ExitBatch(*arrays, excluded=sum(b.excluded for b in batches))


class LadderBatch(namedtuple('LadderBatch', ['o0', 'u0', 'excluded'])):
    """A named tuple containing many ladder records as arrays.

    Attributes:
        o0 (:obj:`numpy.ndarray`): Ladder heights.
        u0 (:obj:`numpy.ndarray`): Undershoots below level 0.
        excluded (:obj:`int`): Walks that did not pass level 0 within the
            step budget.
    """

    __slots__ = ()

    def __len__(self):
        return self.o0.shape[0]

    @property
    def size(self):
        """:obj:`int`: Number of ladders in the batch.
        """

        return self.o0.shape[0]

    @staticmethod
    def concatenate(batches):
        """Joins batches in the given order.
        """

        batches = list(batches)
        return LadderBatch(np.concatenate([b.o0 for b in batches]),
                           np.concatenate([b.u0 for b in batches]),
                           sum(b.excluded for b in batches))
