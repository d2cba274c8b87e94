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

"""Numeric checks of the analytic claims behind a stratification."""

from .sampling import RankMismatch, SignUnsupported, Tolerances, TorusSample, VerificationError, jacobian_rank_check, sample_torus
from .fibers import Inconsistent, NotInImage, RankDeficient, TransportResult, fiber_count, fiber_transport, torus_roots
from .report import CheckResult, CheckStatus, VerificationReport, run_verification, verify_stratification
