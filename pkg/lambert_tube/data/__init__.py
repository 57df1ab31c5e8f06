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

"""This sub-module contains the catalogue of packaged experiment presets.
"""


from collections import namedtuple
import json
from pathlib import Path


class PresetLookupException(ValueError):
    """Exception thrown when an undefined preset is requested.

    Args:
        msg (:obj:`str`): Exception message to be displayed.
    """

    def __init__(self, msg):
        self.msg = msg

    def __str__(self):
        return self.msg


_PRESETS_PATH = Path(__file__).parent / 'presets.json'
with _PRESETS_PATH.open('r', encoding='utf-8') as presets_fp:
    _PRESETS = json.load(presets_fp)


_PresetInfo = namedtuple('PresetInfo', ['name',
                                        'description',
                                        'command',
                                        'params'])


class PresetInfo(_PresetInfo):
    """Named tuple containing an experiment preset.

    Attributes:
        name (:obj:`str`): The name used to query this preset.
        description (:obj:`str`): A description of the experiment.
        command (:obj:`str`): The `lambert_sim` sub-command it runs.
        params (:obj:`dict`): Experiment parameters, keyed by configuration
            field name.
    """


def _gen_catalogue(presets_dict):
    catalogue = {}

    for name, info in presets_dict['presets'].items():
        catalogue[name] = PresetInfo(name,
                                     info.get('description', None),
                                     info['command'],
                                     dict(info.get('params', {})))

    return catalogue


class PresetCatalogue(object):
    """This class allows querying the experiment presets shipped with
    lambert_tube.
    """

    _catalogue = _gen_catalogue(_PRESETS)

    @staticmethod
    def get_preset(name):
        """Get the catalogue entry for a given preset.

        Args:
            name (:obj:`str`): Name of the preset to lookup in the catalogue.

        Returns:
            :obj:`PresetInfo`: The catalogue entry associated with the given
            preset.

        Raises:
            PresetLookupException: If `name` is not a valid preset name.
        """

        if name not in PresetCatalogue._catalogue:
            raise PresetLookupException('Undefined preset {}.'.format(
                                        repr(name)))

        return PresetCatalogue._catalogue[name]

    @staticmethod
    def presets_list():
        return [v for _, v in sorted(PresetCatalogue._catalogue.items())]
