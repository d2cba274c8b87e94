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

import pytest

from .ideal import load_benchmark, parse_input
from .stratifier import stratify


UMBRELLA = "vars: x1 x2; params: c; gens: c*x2^2 - x1^2"


@pytest.fixture(scope="session")
def umbrella_spec():
    return parse_input(UMBRELLA)


@pytest.fixture(scope="session")
def umbrella(umbrella_spec):
    return stratify(umbrella_spec)


@pytest.fixture(scope="session", params=["I1", "I2", "I3", "I4"])
def benchmark(request):
    spec = load_benchmark(request.param)
    return (spec, stratify(spec))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: stratifies the largest bundled network")
