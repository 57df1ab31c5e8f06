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

"""This module contains the Markov chain of reflection points: single-ray
stepping, first passage over a level, ladder variables over level zero,
renewal visit counts and the block runner used to parallelise them.
"""

from lambert_tube.chain.common import ChainState, ExitRecord, LadderRecord
from lambert_tube.chain.common import VisitHistogram, ExitBatch, LadderBatch
from lambert_tube.chain.steps import StepSampler, LambertianSteps
from lambert_tube.chain.steps import ConstantSteps
from lambert_tube.chain.walker import DEFAULT_MAX_STEPS, exit_geometry
from lambert_tube.chain.walker import init_chain, step_chain, run_to_exit
from lambert_tube.chain.walker import run_ladder, simulate_exits
from lambert_tube.chain.walker import simulate_ladders, accumulate_visits
from lambert_tube.chain.streams import BlockRunner, block_generator


__all__ = [
    'ChainState',
    'ExitRecord',
    'LadderRecord',
    'VisitHistogram',
    'ExitBatch',
    'LadderBatch',
    'StepSampler',
    'LambertianSteps',
    'ConstantSteps',
    'DEFAULT_MAX_STEPS',
    'exit_geometry',
    'init_chain',
    'step_chain',
    'run_to_exit',
    'run_ladder',
    'simulate_exits',
    'simulate_ladders',
    'accumulate_visits',
    'BlockRunner',
    'block_generator',
]
