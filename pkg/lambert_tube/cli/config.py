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

"""Resolution and validation of `lambert_sim` experiment configurations.

A configuration is built from the parsed command line, then overridden by a
named preset (``--preset``) and finally by a JSON configuration file
(``--config``), which may be a bare echo or a whole result file.
"""


from collections import namedtuple
import json
import logging

import numpy as np

from lambert_tube.data import PresetCatalogue
from lambert_tube.errors import ConfigError


COMMANDS = ('exit-cdf', 'tail', 'lambda', 'renewal', 'disc-identity',
            'constants')

FORMATS = ('csv', 'json')

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

# Fields that define an experiment. They are echoed in every output.
EXPERIMENT_FIELDS = ['command', 'dim', 's', 'beta', 'epsilon', 'samples',
                     'seed', 'max_steps', 'block_size', 'r1', 'r2', 't_grid',
                     'bins', 'ladders', 'x_grid']

# Fields that only affect how an experiment is run.
EXECUTION_FIELDS = ['workers', 'out', 'format', 'timing', 'log_level']

MIN_LADDERS = 10000
MAX_SEED = 2 ** 64


def _float_list(text):
    if isinstance(text, (list, tuple)):
        return tuple(float(v) for v in text)
    return tuple(float(v) for v in str(text).split(',') if v.strip())


def _int(value):
    if isinstance(value, bool):
        raise ValueError('{} is not an integer'.format(value))
    if isinstance(value, int):
        return value
    try:
        return int(str(value))
    except ValueError:
        pass
    # Scientific notation such as 1e6.
    number = float(value)
    if number != int(number):
        raise ValueError('{} is not an integer'.format(value))
    return int(number)


def _identity(value):
    return value


_FLAGS = {
    'dim': ('--dim', _int),
    's': ('--s', float),
    'beta': ('--beta', float),
    'epsilon': ('--epsilon', float),
    'samples': ('--samples', _int),
    'seed': ('--seed', _int),
    'max_steps': ('--max-steps', _int),
    'block_size': ('--block-size', _int),
    'r1': ('--r1', float),
    'r2': ('--r2', float),
    't_grid': ('--t-grid', _float_list),
    'bins': ('--bins', _float_list),
    'ladders': ('--ladders', _int),
    'x_grid': ('--x-grid', _float_list),
    'workers': ('--workers', _int),
    'out': ('--out', _identity),
    'format': ('--format', str),
    'timing': ('--timing', bool),
    'log_level': ('--log-level', str),
}


def _default_t_grid(command):
    if command == 'disc-identity':
        return tuple(np.round(np.linspace(0.01, 0.99, 99), 10).tolist())
    return tuple(np.round(np.linspace(0.0, 1.0, 21), 10).tolist())


class ExperimentConfig(namedtuple('ExperimentConfig',
                                  EXPERIMENT_FIELDS + EXECUTION_FIELDS)):
    """A named tuple containing a resolved `lambert_sim` configuration.

    Attributes:
        command (:obj:`str`): The sub-command, one of :const:`COMMANDS`.
        dim (:obj:`int`): The ambient dimension, at least 3.
        s (:obj:`float`): The exit level.
        beta (:obj:`float`): Conditioning depth of `exit-cdf`: only exits
            whose last reflection is at least `beta` below the level are
            kept in the conditioned sample.
        epsilon (:obj:`float`): Relative conditioning depth of `lambda`, in
            (0, 1).
        samples (:obj:`int`): Number of exits, steps or walks.
        seed (:obj:`int`): The experiment seed.
        max_steps (:obj:`int`): Step budget per walk.
        block_size (:obj:`int`): Walks per random substream block.
        r1 (:obj:`float`): Inner radius of the brightness annulus.
        r2 (:obj:`float`): Outer radius of the brightness annulus.
        t_grid (:obj:`tuple`): Grid of [0, 1].
        bins (:obj:`tuple`): Renewal bin edges in units of `s`.
        ladders (:obj:`int`): Number of ladder walks of `lambda`.
        x_grid (:obj:`tuple`): Grid of the `tail` table.
        workers (:obj:`int`): Worker processes.
        out (:obj:`str`): Output path, `None` for stdout.
        format (:obj:`str`): `'csv'` or `'json'`.
        timing (:obj:`bool`): Whether to add the wall time to the output.
        log_level (:obj:`str`): Logging level name.
    """

    __slots__ = ()


def _convert(field, value):
    flag, converter = _FLAGS[field]
    try:
        return converter(value)
    except (TypeError, ValueError):
        raise ConfigError('Invalid value {} for {}.'.format(repr(value),
                                                            flag))


def _update(values, params, origin):
    for field, value in params.items():
        if field not in _FLAGS:
            raise ConfigError('Unknown parameter {} in {}.'.format(
                repr(field), origin))
        values[field] = None if value is None else _convert(field, value)


def _check_command(command, expected, origin):
    if command is not None and command != expected:
        raise ConfigError('{} is for command {}, not {}.'.format(
            origin, repr(command), repr(expected)))


def load_config_file(path):
    """Loads the experiment parameters stored in a JSON file. The file may be
    a bare configuration echo, a metadata file or a JSON result file.

    Raises:
        :obj:`~lambert_tube.errors.ConfigError`: If the file cannot be read.
    """

    try:
        with open(path, 'r', encoding='utf-8') as config_fp:
            data = json.load(config_fp)
    except (OSError, ValueError) as err:
        raise ConfigError('Could not read configuration file {}: {}'.format(
            repr(path), err))

    if isinstance(data, dict) and 'metadata' in data:
        data = data['metadata']
    if isinstance(data, dict) and 'config' in data:
        data = data['config']
    if not isinstance(data, dict):
        raise ConfigError('Configuration file {} holds no configuration '
                          'object.'.format(repr(path)))

    return dict(data)


def parse(arguments):
    """Resolves the configuration of a parsed `lambert_sim` command line.

    Args:
        arguments (:obj:`dict`): The dictionary returned by docopt.

    Returns:
        :obj:`ExperimentConfig`: The validated configuration.

    Raises:
        :obj:`~lambert_tube.errors.ConfigError`: If a value is invalid.
        :obj:`~lambert_tube.data.PresetLookupException`: If the preset is
            not defined.
    """

    command = next((c for c in COMMANDS if arguments.get(c)), None)
    if command is None:
        raise ConfigError('No command given.')

    values = dict.fromkeys(EXPERIMENT_FIELDS + EXECUTION_FIELDS)
    values['command'] = command

    flags = {field: arguments.get(flag)
             for field, (flag, _) in _FLAGS.items()}
    _update(values, {k: v for k, v in flags.items() if v is not None},
            'command line')

    preset_name = arguments.get('--preset')
    if preset_name is not None:
        preset = PresetCatalogue.get_preset(preset_name)
        _check_command(preset.command, command,
                       'Preset {}'.format(repr(preset_name)))
        _update(values, preset.params, 'preset {}'.format(repr(preset_name)))

    config_path = arguments.get('--config')
    if config_path is not None:
        params = load_config_file(config_path)
        _check_command(params.pop('command', None), command,
                       'Configuration file {}'.format(repr(config_path)))
        _update(values, params, repr(config_path))

    if values['t_grid'] is None:
        values['t_grid'] = _default_t_grid(command)

    return validate(ExperimentConfig(**values))


def _require(condition, msg):
    if not condition:
        raise ConfigError(msg)


def _increasing(values):
    return len(values) > 0 and all(b > a for a, b in zip(values,
                                                         values[1:]))


def validate(config):
    """Checks every field of a configuration against the preconditions of
    the operations it feeds.

    Returns:
        :obj:`ExperimentConfig`: The configuration itself.

    Raises:
        :obj:`~lambert_tube.errors.ConfigError`: If a field is invalid.
    """

    _require(config.command in COMMANDS,
             'Unknown command {}.'.format(repr(config.command)))
    _require(config.seed is not None,
             'A seed is required (--seed or a configuration file).')
    _require(0 <= config.seed < MAX_SEED, 'Seed must fit in 64 bits.')
    _require(config.dim is not None and config.dim >= 3,
             'Dimension must be at least 3.')
    _require(config.s is not None and config.s > 0,
             'Level s must be positive.')
    _require(config.beta is not None and config.beta >= 0,
             'Conditioning depth beta must be non-negative.')
    _require(config.epsilon is not None and 0 < config.epsilon < 1,
             'epsilon must lie in (0, 1).')
    _require(config.samples is not None and config.samples >= 1,
             'Number of samples must be positive.')
    _require(config.max_steps is not None and config.max_steps >= 1,
             'Step budget must be positive.')
    _require(config.block_size is not None and config.block_size >= 1,
             'Block size must be positive.')
    _require(config.workers is not None and config.workers >= 1,
             'Number of workers must be positive.')
    _require(config.r1 is not None and config.r2 is not None
             and 0 < config.r1 <= config.r2 < 1,
             'Radii must satisfy 0 < r1 <= r2 < 1.')
    _require(_increasing(config.t_grid)
             and 0 <= config.t_grid[0] and config.t_grid[-1] <= 1,
             't grid must be strictly increasing in [0, 1].')
    _require(config.bins is not None and len(config.bins) >= 2
             and _increasing(config.bins)
             and -1 <= config.bins[0] and config.bins[-1] < 0,
             'Bin edges must be strictly increasing in [-1, 0).')
    _require(config.x_grid is not None and _increasing(config.x_grid)
             and config.x_grid[0] > 0,
             'x grid must be strictly increasing and positive.')
    _require(config.format in FORMATS,
             'Format must be one of {}.'.format(', '.join(FORMATS)))
    _require(str(config.log_level).upper() in LOG_LEVELS,
             'Log level must be one of {}.'.format(', '.join(LOG_LEVELS)))

    if config.command == 'lambda':
        _require(config.ladders is not None
                 and config.ladders >= MIN_LADDERS,
                 'lambda needs at least {} ladders.'.format(MIN_LADDERS))

    return config


def echo(config):
    """Returns the experiment fields of a configuration as a JSON-ready
    dictionary. Passing it back through ``--config`` reproduces the
    experiment.
    """

    result = {}

    for field in EXPERIMENT_FIELDS:
        value = getattr(config, field)
        result[field] = list(value) if isinstance(value, tuple) else value

    return result


def configure_logging(level):
    """Sends log records of at least `level` to stderr.
    """

    logging.basicConfig(level=getattr(logging, str(level).upper()),
                        format='%(asctime)s %(name)s %(levelname)s: '
                               '%(message)s')
