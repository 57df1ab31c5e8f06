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

"""This module contains the geometric primitives of Lambertian reflection
inside the tube: angle sampling, flight displacements, chords, plane
intersections and rotations of the cross-section sphere.
"""

from lambert_tube.geometry.common import Dimension, ReflectionAngles
from lambert_tube.geometry.common import CrossSectionPoint, FlightVector
from lambert_tube.geometry.common import RotationOperator, PlaneHit
from lambert_tube.geometry.common import as_dimension, base_point
from lambert_tube.geometry.common import cross_section_point, uniform_sphere
from lambert_tube.geometry.reflection import sample_angles
from lambert_tube.geometry.reflection import sample_angle_batch
from lambert_tube.geometry.reflection import chord_length, flight_vector
from lambert_tube.geometry.reflection import flight_batch, axial_step
from lambert_tube.geometry.reflection import axial_batch, plane_hit
from lambert_tube.geometry.reflection import plane_hit_batch
from lambert_tube.geometry.reflection import sample_plane_hits
from lambert_tube.geometry.rotation import rotation_to, alternate_rotation_to
from lambert_tube.geometry.rotation import rotate_batch


__all__ = [
    'Dimension',
    'ReflectionAngles',
    'CrossSectionPoint',
    'FlightVector',
    'RotationOperator',
    'PlaneHit',
    'as_dimension',
    'base_point',
    'cross_section_point',
    'uniform_sphere',
    'sample_angles',
    'sample_angle_batch',
    'chord_length',
    'flight_vector',
    'flight_batch',
    'axial_step',
    'axial_batch',
    'plane_hit',
    'plane_hit_batch',
    'sample_plane_hits',
    'rotation_to',
    'alternate_rotation_to',
    'rotate_batch',
]
