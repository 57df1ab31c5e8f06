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

"""This sub-module splits a simulation into blocks of walks with their own
random substreams and runs the blocks on a pool of worker processes.

Block `b` of kind `k` always draws from
``Generator(Philox(SeedSequence(seed, spawn_key=(k, b))))`` and results are
merged in block order, so the output only depends on the seed and the block
size, never on the number of workers.
"""


import logging
from multiprocessing import Pool

import numpy as np

from lambert_tube.errors import ConfigError


_logger = logging.getLogger(__name__)

STREAM_KINDS = {
    'exits': 0,
    'ladders': 1,
    'visits': 2,
    'steps': 3,
    'measures': 4,
}

DEFAULT_BLOCK_SIZE = 1024
DEFAULT_MAX_BLOCKS = 100000


def block_generator(seed, kind, block):
    """Returns the random stream of one block.

    Args:
        seed (:obj:`int`): The experiment seed.
        kind (:obj:`str`): The kind of simulation, a key of
            :const:`STREAM_KINDS`.
        block (:obj:`int`): The block index.

    Returns:
        :obj:`numpy.random.Generator`: A Philox-based generator.
    """

    key = (STREAM_KINDS[kind], int(block))
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(int(seed), spawn_key=key)))


def _run_block(args):
    task, seed, kind, block, size = args
    return task(size, block_generator(seed, kind, block))


class BlockRunner(object):
    """Runs simulation tasks block by block.

    A task is a picklable callable taking `(n, rng)` and returning a batch
    of `n` results, for example a :obj:`functools.partial` of
    :func:`~lambert_tube.chain.walker.simulate_exits`.

    Args:
        seed (:obj:`int`): The experiment seed.
        block_size (:obj:`int`, optional): Walks per block. Defaults to
            :const:`DEFAULT_BLOCK_SIZE`.
        workers (:obj:`int`, optional): Worker processes. With 1 worker the
            blocks run in the calling process. Defaults to 1.
        max_blocks (:obj:`int`, optional): Upper bound on the number of
            blocks :meth:`collect_until` may run. Defaults to
            :const:`DEFAULT_MAX_BLOCKS`.
    """

    def __init__(self, seed, block_size=DEFAULT_BLOCK_SIZE, workers=1,
                 max_blocks=DEFAULT_MAX_BLOCKS):
        if block_size < 1:
            raise ConfigError('Block size must be positive.')
        if workers < 1:
            raise ConfigError('Number of workers must be positive.')

        self.seed = int(seed)
        self.block_size = int(block_size)
        self.workers = int(workers)
        self.max_blocks = int(max_blocks)

    def run_blocks(self, task, kind, blocks):
        """Runs `task` on the given `(block, size)` pairs.

        Returns:
            :obj:`list`: The block results, in the order of `blocks`.
        """

        jobs = [(task, self.seed, kind, b, size) for b, size in blocks]

        if self.workers == 1 or len(jobs) < 2:
            return [_run_block(job) for job in jobs]

        with Pool(processes=min(self.workers, len(jobs))) as pool:
            return pool.map(_run_block, jobs)

    def collect(self, task, kind, n):
        """Runs `task` on `n` walks split into blocks.

        Returns:
            :obj:`list`: The block results, in block order.
        """

        blocks = []
        remaining = int(n)
        block = 0

        while remaining > 0:
            size = min(self.block_size, remaining)
            blocks.append((block, size))
            remaining -= size
            block += 1

        _logger.info('Running %d %s blocks on %d worker(s)', len(blocks), kind,
                     self.workers)

        return self.run_blocks(task, kind, blocks)

    def collect_until(self, task, kind, accepted, target):
        """Runs full blocks of `task`, a round of `workers` blocks at a
        time, until `accepted(result)` summed over the results reaches
        `target`.

        The rounds only decide when to stop. The caller keeps the results in
        block order and truncates them, so the output does not depend on the
        number of workers.

        Returns:
            :obj:`list`: The block results, in block order.

        Raises:
            :obj:`~lambert_tube.errors.ConfigError`: If the target is not
                reached within `max_blocks` blocks.
        """

        results = []
        total = 0
        block = 0

        while total < target:
            if block >= self.max_blocks:
                raise ConfigError(
                    'Only {} of {} accepted samples after {} blocks; the '
                    'conditioning event is too rare'.format(
                        total, target, block))

            count = min(self.workers, self.max_blocks - block)
            blocks = [(block + i, self.block_size) for i in range(count)]
            block += count

            for result in self.run_blocks(task, kind, blocks):
                results.append(result)
                total += accepted(result)

            _logger.debug('%s: %d of %d accepted after %d blocks', kind, total,
                          target, block)

        return results
