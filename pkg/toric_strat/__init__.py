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

"""Combinatorial Whitney stratification of the parameter projection of an
affine toric variety."""

from .ideal import ProblemSpec, load_benchmark, parse_input
from .stratifier import Stratification, stratify
from .verifier import run_verification
