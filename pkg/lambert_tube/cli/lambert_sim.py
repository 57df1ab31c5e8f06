#!/usr/bin/env python

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


"""The lambert_tube experiment runner.

Usage:
    lambert_sim exit-cdf [options]
    lambert_sim tail [options]
    lambert_sim lambda [options]
    lambert_sim renewal [options]
    lambert_sim disc-identity [options]
    lambert_sim constants [options]
    lambert_sim (-l | --list)
    lambert_sim (-v | --version)
    lambert_sim (-h | --help)

Options:
  --dim=D
        Dimension of the tube. [default: 3]
  --s=S
        Exit level. [default: 50]
  --beta=BETA
        exit-cdf conditions on a last reflection at least BETA below the
        exit level. [default: 3]
  --epsilon=EPS
        lambda conditions on a last reflection at least EPS * S below the
        exit level. [default: 0.06]
  --samples=N
        Number of exits, steps or walks. [default: 10000]
  --seed=SEED
        Experiment seed (required unless given by --config).
  --workers=W
        Worker processes. Results do not depend on it. [default: 1]
  --max-steps=M
        Step budget per walk. Exits of walks exceeding it are excluded,
        their renewal visits are truncated. [default: 1000000]
  --block-size=B
        Walks per random substream block. [default: 1024]
  --r1=R1
        Inner radius of the brightness annulus. [default: 0.2]
  --r2=R2
        Outer radius of the brightness annulus. [default: 0.6]
  --t-grid=TS
        Comma separated grid of [0, 1]. Defaults to 21 points, or to
        0.01, ..., 0.99 for disc-identity.
  --bins=EDGES
        Comma separated renewal bin edges in units of S.
        [default: -0.5,-0.4,-0.3,-0.2]
  --ladders=L
        Number of ladder walks for lambda. [default: 100000]
  --x-grid=XS
        Comma separated grid of the tail table.
        [default: 0.5,1,2,5,10,20,50]
  --preset=NAME
        Use the parameters of a packaged preset.
  --config=FILE
        Use the parameters of a JSON configuration or result file.
  -o OUTPUT --out=OUTPUT
        Output file. If not specified, the primary table is printed to
        stdout.
  --format=FORMAT
        Output format, csv or json. constants is always written as
        json. [default: csv]
  --timing
        Add the wall time to the output metadata.
  --log-level=LEVEL
        Logging level of the messages written to stderr.
        [default: WARNING]
  -l --list
        Show a list of available presets.
  -h --help
        Show this screen.
  -v --version
        Show version.
"""


import logging
import sys
import time

from docopt import docopt, DocoptExit

import lambert_tube as lt
from lambert_tube.cli.commands import COMMANDS
from lambert_tube.cli.config import parse, configure_logging
from lambert_tube.cli.results import write_result
from lambert_tube.data import PresetCatalogue, PresetLookupException
from lambert_tube.errors import ConfigError, ToleranceNotMetError


__version__ = lt.__version__

_logger = logging.getLogger('lambert_sim')

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_TOLERANCE = 3


def _list_presets():
    for preset in PresetCatalogue.presets_list():
        print('{}   {}'.format(preset.name.ljust(20),
                               preset.description or ''))


def run(arguments):
    """Runs the command selected by parsed docopt `arguments` and writes
    its result.
    """

    config = parse(arguments)
    configure_logging(config.log_level)

    start = time.perf_counter()
    result = COMMANDS[config.command](config)
    wall_time = time.perf_counter() - start

    _logger.info('%s finished in %.3f s', config.command, wall_time)

    if config.timing:
        result.metadata['wall_time'] = wall_time

    fmt = 'json' if config.command == 'constants' else config.format
    write_result(result, config.out, fmt)

    return result


def main():  # pragma: no cover
    try:
        version = ('lambert_tube v{}'.format(__version__))
        arguments = docopt(__doc__, version=version)

        if arguments['--list']:
            _list_presets()
            sys.exit(EXIT_OK)

        run(arguments)
        sys.exit(EXIT_OK)
    except DocoptExit as err:
        sys.stderr.write('{}\n'.format(err))
        sys.exit(EXIT_CONFIG)
    except (ConfigError, PresetLookupException) as err:
        sys.stderr.write('Error: {}\n'.format(err))
        sys.exit(EXIT_CONFIG)
    except ToleranceNotMetError as err:
        sys.stderr.write('Error: {}\n'.format(err))
        sys.exit(EXIT_TOLERANCE)
    except KeyboardInterrupt:
        sys.stderr.write('Exiting...\n')
        sys.exit(EXIT_FAILURE)
    except Exception as err:
        sys.stderr.write('Error: An unknown error occurred: {}\n'.format(err))
        sys.exit(EXIT_FAILURE)


if __name__ == '__main__':  # pragma: no cover
    main()
