# Copyright (C) 2026 The toric-strat authors
#
# This file is part of toric-strat.
#
# toric-strat is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# toric-strat is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with toric-strat.  If not, see <https://www.gnu.org/licenses/>.

"""Exact convex hulls, polyhedral cones and their face lattices."""

from .description import DualCone, dual_cone
from .hull import AffineHull, ConeFacets, DegenerateInput, Hyperplane, affine_hull, cone_facets, hull_facets, linear_hull
from .faces import Face, FaceLattice, LatticeKind, cone_face_lattice, face_lattice
