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

from .strata import (
    FaceRecord,
    NotSaturated,
    OrbitComponent,
    Stratification,
    StratificationError,
    configuration,
    dim_face_image,
    dim_face_variety,
    fiber_dimension,
    parameter_configuration,
    stratify,
    stratify_configuration,
    stratum_ideal,
)
