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

"""Error classes shared by all lambert_tube components.
"""


class LambertTubeError(Exception):
    """Base class for all lambert_tube errors.
    """

    def __init__(self, msg):
        self.msg = msg

    def __str__(self):
        return str(self.msg)


# Geometry Errors

class InvalidDimensionError(LambertTubeError, ValueError):
    """Error thrown when a dimension smaller than 3 is requested.
    """

    def __init__(self, d):
        LambertTubeError.__init__(
            self, 'Invalid dimension {}, expected an integer >= 3'.format(
                repr(d)))
        self.d = d


class DegenerateGrazingError(LambertTubeError, ValueError):
    """Error thrown when a reflection direction is tangent to the tube wall,
    so that the chord formula has no positive solution.
    """

    def __init__(self, msg):
        LambertTubeError.__init__(self, msg)


# Chain Errors

class StepBudgetExhaustedError(LambertTubeError):
    """Error thrown when a walk takes more than `max_steps` steps without
    reaching its stopping level.
    """

    def __init__(self, max_steps, level):
        LambertTubeError.__init__(
            self, 'Walk exceeded {} steps before passing level {}'.format(
                max_steps, level))
        self.max_steps = max_steps
        self.level = level


# Analytic Errors

class ToleranceNotMetError(LambertTubeError):
    """Error thrown when an adaptive quadrature cannot reach the requested
    tolerance.
    """

    def __init__(self, quantity, abs_err, value):
        LambertTubeError.__init__(
            self, 'Could not evaluate {} to tolerance (value {}, error '
                  'estimate {})'.format(quantity, value, abs_err))
        self.quantity = quantity
        self.abs_err = abs_err
        self.value = value


class RegionNotContainedError(LambertTubeError, ValueError):
    """Error thrown when a region passed to a measure on the exit disc is not
    contained in the disc.
    """

    def __init__(self, region):
        LambertTubeError.__init__(
            self, 'Region {} is not contained in the unit disc'.format(
                repr(region)))
        self.region = region


# Estimator Errors

class InsufficientTailDataError(LambertTubeError, ValueError):
    """Error thrown when too few samples exceed the upper end of a tail fit
    window.
    """

    def __init__(self, exceedances, required):
        LambertTubeError.__init__(
            self, 'Only {} samples exceed the fit window, {} are '
                  'required'.format(exceedances, required))
        self.exceedances = exceedances
        self.required = required


class TooFewBatchesError(LambertTubeError, ValueError):
    """Error thrown when a batch-means estimate is requested with fewer than
    8 batches or fewer values than batches.
    """

    def __init__(self, msg):
        LambertTubeError.__init__(self, msg)


# Configuration Errors

class ConfigError(LambertTubeError, ValueError):
    """Error thrown when an experiment configuration is invalid.
    """

    def __init__(self, msg):
        LambertTubeError.__init__(self, msg)
