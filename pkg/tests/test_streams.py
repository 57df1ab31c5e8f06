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

"""
Tests for lambert_tube.chain.streams
"""

from functools import partial

import numpy as np
import pytest

from lambert_tube.chain import BlockRunner, block_generator
from lambert_tube.chain import ExitBatch, LadderBatch
from lambert_tube.chain import simulate_exits, simulate_ladders
from lambert_tube.errors import ConfigError


def _sizes(n, rng):
    return n


class TestBlockGenerator(object):
    """Test class for testing block random streams.
    """

    def test_same_key(self):
        """Test that the same seed, kind and block give the same stream.
        """

        first = block_generator(42, 'exits', 3).random(10)
        second = block_generator(42, 'exits', 3).random(10)

        assert np.array_equal(first, second)

    def test_different_keys(self):
        """Test that blocks, kinds and seeds give different streams.
        """

        base = block_generator(42, 'exits', 3).random(10)

        assert not np.array_equal(base,
                                  block_generator(42, 'exits', 4).random(10))
        assert not np.array_equal(base,
                                  block_generator(42, 'ladders', 3).random(10))
        assert not np.array_equal(base,
                                  block_generator(43, 'exits', 3).random(10))

    def test_large_seed(self):
        """Test that 64-bit seeds are accepted.
        """

        rng = block_generator(2 ** 64 - 1, 'steps', 0)
        assert 0.0 <= rng.random() < 1.0


class TestBlockRunner(object):
    """Test class for testing the block runner.
    """

    def test_invalid_sizes(self):
        """Test that non-positive block sizes and worker counts raise a
        ConfigError.
        """

        with pytest.raises(ConfigError):
            BlockRunner(1, block_size=0)

        with pytest.raises(ConfigError):
            BlockRunner(1, workers=0)

    def test_block_split(self):
        """Test that walks are split into full blocks and a remainder.
        """

        runner = BlockRunner(1, block_size=1024)
        assert runner.collect(_sizes, 'exits', 2500) == [1024, 1024, 452]

    def test_workers_invariance(self):
        """Test that results do not depend on the number of workers.
        """

        task = partial(simulate_ladders, 3, max_steps=10000)

        single = LadderBatch.concatenate(
            BlockRunner(5, block_size=100, workers=1).collect(
                task, 'ladders', 450))
        pooled = LadderBatch.concatenate(
            BlockRunner(5, block_size=100, workers=2).collect(
                task, 'ladders', 450))

        assert np.array_equal(single.o0, pooled.o0)
        assert np.array_equal(single.u0, pooled.u0)
        assert single.excluded == pooled.excluded

    def test_block_determinism(self):
        """Test that a block gives the same exits whether it runs alone or
        with other blocks.
        """

        task = partial(simulate_exits, 3, 2.0, max_steps=10000)
        runner = BlockRunner(9, block_size=64)

        together = runner.collect(task, 'exits', 192)
        alone = runner.run_blocks(task, 'exits', [(2, 64)])

        assert np.array_equal(together[2].overshoot, alone[0].overshoot)
        assert np.array_equal(together[2].exit_point, alone[0].exit_point)

    def test_collect_until(self):
        """Test that collect_until runs full blocks until the target is
        reached.
        """

        runner = BlockRunner(1, block_size=100, workers=3)
        results = runner.collect_until(_sizes, 'exits', lambda r: r, 250)

        assert results == [100, 100, 100]

    def test_collect_until_workers_invariance(self):
        """Test that the leading blocks of collect_until do not depend on
        the number of workers.
        """

        task = partial(simulate_exits, 3, 2.0, max_steps=10000)

        def accepted(batch):
            return int(np.count_nonzero(batch.undershoot >= 1.0))

        single = BlockRunner(3, block_size=50, workers=1).collect_until(
            task, 'exits', accepted, 60)
        pooled = BlockRunner(3, block_size=50, workers=2).collect_until(
            task, 'exits', accepted, 60)

        n = min(len(single), len(pooled))
        assert np.array_equal(ExitBatch.concatenate(single[:n]).overshoot,
                              ExitBatch.concatenate(pooled[:n]).overshoot)

    def test_collect_until_too_rare(self):
        """Test that an unreachable target raises a ConfigError.
        """

        runner = BlockRunner(1, block_size=10, max_blocks=3)

        with pytest.raises(ConfigError):
            runner.collect_until(_sizes, 'exits', lambda r: 0, 1)
