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

"""Result tables produced by the `lambert_sim` commands and their CSV and
JSON writers.

CSV output writes the primary table to the output path, every other table
to a sibling file ``<stem>.<table>.csv`` and the metadata and diagnostics to
``<stem>.meta.json``. JSON output holds everything in one object. Floats are
written with 17 significant digits so that files are byte-identical for
identical results.
"""


from collections import OrderedDict, namedtuple
import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

import lambert_tube
from lambert_tube.cli.utils import open_output, close_output


_logger = logging.getLogger(__name__)

PROGRAM = 'lambert_sim'

_FLOAT_FORMAT = '%.17g'


class ResultTable(namedtuple('ResultTable', ['metadata', 'tables',
                                             'diagnostics'])):
    """A named tuple containing the output of one command.

    Attributes:
        metadata (:obj:`dict`): Program, version, command and configuration
            echo. The wall time is added when timing is requested.
        tables (:obj:`collections.OrderedDict`): Named
            :obj:`pandas.DataFrame` tables, the primary table first.
        diagnostics (:obj:`dict`): Exclusion counts, acceptance rates and
            other run statistics.
    """

    __slots__ = ()

    @property
    def primary(self):
        """:obj:`str`: Name of the primary table.
        """

        return next(iter(self.tables))

    def table(self, name=None):
        """Returns a table by name, the primary table by default.
        """

        return self.tables[self.primary if name is None else name]


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if np.isfinite(value) else None
    return value


def result_table(command, config_echo, tables, diagnostics=None):
    """Builds a :obj:`ResultTable`.

    Args:
        command (:obj:`str`): The command name.
        config_echo (:obj:`dict`): The configuration echo.
        tables (:obj:`list`): `(name, columns)` pairs, the primary table
            first. `columns` is a :obj:`dict` of equal-length columns or a
            :obj:`pandas.DataFrame`.
        diagnostics (:obj:`dict`, optional): Run statistics.

    Returns:
        :obj:`ResultTable`: The result.

    Raises:
        :obj:`ValueError`: If no table is given or columns differ in length.
    """

    if not tables:
        raise ValueError('A result needs at least one table.')

    frames = OrderedDict()
    for name, columns in tables:
        if isinstance(columns, pd.DataFrame):
            frames[name] = columns.reset_index(drop=True)
            continue
        lengths = {len(np.atleast_1d(c)) for c in columns.values()}
        if len(lengths) > 1:
            raise ValueError('Columns of table {} differ in length.'.format(
                repr(name)))
        frames[name] = pd.DataFrame(OrderedDict(
            (k, np.atleast_1d(v)) for k, v in columns.items()))

    metadata = OrderedDict([
        ('program', PROGRAM),
        ('version', lambert_tube.__version__),
        ('command', command),
        ('config', config_echo),
    ])

    return ResultTable(metadata, frames, dict(diagnostics or {}))


def _meta_object(result):
    return OrderedDict([('metadata', _plain(result.metadata)),
                        ('diagnostics', _plain(result.diagnostics))])


def _dump_json(obj, fout):
    json.dump(obj, fout, indent=2, allow_nan=False)
    fout.write('\n')


def sibling_path(out, suffix):
    """Returns the path ``<stem>.<suffix>`` next to `out`.
    """

    out = Path(out)
    return out.with_name('{}.{}'.format(out.stem, suffix))


def _write_frame(frame, fout):
    frame.to_csv(fout, index=False, float_format=_FLOAT_FORMAT,
                 lineterminator='\n')


def write_csv(result, out=None):
    """Writes a result as CSV files. Without an output path only the
    primary table is written, to stdout.
    """

    fout = open_output(out)
    try:
        _write_frame(result.table(), fout)
    finally:
        close_output(fout)

    if out is None:
        if len(result.tables) > 1:
            _logger.info('Secondary tables and metadata are only written '
                         'with an output path')
        return

    for name, frame in result.tables.items():
        if name == result.primary:
            continue
        fout = open_output(sibling_path(out, '{}.csv'.format(name)))
        try:
            _write_frame(frame, fout)
        finally:
            close_output(fout)

    fout = open_output(sibling_path(out, 'meta.json'))
    try:
        _dump_json(_meta_object(result), fout)
    finally:
        close_output(fout)


def to_json_object(result):
    """Returns the JSON object written by :func:`write_json`.
    """

    obj = _meta_object(result)
    obj['tables'] = OrderedDict(
        (name, OrderedDict((col, _plain(frame[col].tolist()))
                           for col in frame.columns))
        for name, frame in result.tables.items())
    return obj


def write_json(result, out=None):
    """Writes a result as one JSON object.
    """

    fout = open_output(out)
    try:
        _dump_json(to_json_object(result), fout)
    finally:
        close_output(fout)


def write_result(result, out=None, fmt='csv'):
    """Writes a result in the given format, `'csv'` or `'json'`.
    """

    if fmt == 'json':
        write_json(result, out)
    elif fmt == 'csv':
        write_csv(result, out)
    else:
        raise ValueError('Unknown format {}.'.format(repr(fmt)))
