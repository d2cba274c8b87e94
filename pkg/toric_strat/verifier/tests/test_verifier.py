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

import math
import random

import numpy as np
import pytest

from ...ideal import ProblemSpec, parse_input
from ...lattice import IntMatrix, PointConfiguration, rank
from ...stratifier import configuration, stratify
from ..fibers import NotInImage, RankDeficient, fiber_count, fiber_transport, torus_roots
from ..report import CheckStatus, run_verification, verify_stratification
from ..sampling import (
    RankMismatch,
    SignUnsupported,
    Tolerances,
    as_array,
    evaluate,
    jacobian_rank_check,
    sample_torus,
)


def test_all_ones_point(umbrella_spec, umbrella):
    sample = evaluate(umbrella_spec, as_array(umbrella.config), np.zeros(2))
    assert np.array_equal(sample.y, np.ones(3))
    assert sample.max_residual == 0


def test_other_presentation_of_the_umbrella(umbrella_spec):
    config = PointConfiguration(IntMatrix.from_rows([[1, 0, 2], [1, 1, 0]]), ("x1", "x2", "c"), 2)
    sample = evaluate(umbrella_spec, as_array(config), np.log([2.0, 3.0]))
    assert np.allclose(sample.y, [6, 3, 4])
    assert sample.max_residual < 1e-12


def test_samples(benchmark):
    (spec, strat) = benchmark
    samples = sample_torus(spec, strat.config, 100, seed=3)
    assert len(samples) == 100
    assert all(sample.max_residual < 1e-9 for sample in samples)
    assert all(np.all((0.5 <= s.t) & (s.t <= 2)) for s in samples)


def test_samples_are_deterministic(umbrella_spec, umbrella):
    first = sample_torus(umbrella_spec, umbrella.config, 5, seed=11)
    second = sample_torus(umbrella_spec, umbrella.config, 5, seed=11)
    assert all(np.array_equal(a.t, b.t) for (a, b) in zip(first, second))


def test_plus_sign_over_the_reals():
    spec = parse_input("field: nonnegative-reals\nvars: x y\ngens: x + y")
    with pytest.raises(SignUnsupported):
        sample_torus(spec, configuration(spec), 10)


def test_jacobian_rank(benchmark):
    (spec, strat) = benchmark
    samples = sample_torus(spec, strat.config, 100)
    report = jacobian_rank_check(spec, strat.config, samples, strat.face_table[-1].e)
    assert report.expected_rank == rank(IntMatrix.from_rows([g.difference for g in spec.gens]))
    assert report.samples == 100


def test_jacobian_rank_of_umbrella_and_empty_ideal(umbrella_spec, umbrella):
    samples = sample_torus(umbrella_spec, umbrella.config, 20)
    report = jacobian_rank_check(umbrella_spec, umbrella.config, samples, 1)
    assert (report.expected_rank, report.expected_image_rank) == (1, 1)
    with pytest.raises(RankMismatch):
        jacobian_rank_check(umbrella_spec, umbrella.config, samples, 0)
    empty = parse_input("vars: x1 x2\ngens:")
    samples = sample_torus(empty, configuration(empty), 20)
    assert jacobian_rank_check(empty, configuration(empty), samples, 0).expected_rank == 0


def test_transport_umbrella(umbrella_spec, umbrella):
    result = fiber_transport(umbrella_spec, umbrella.config, [1.0], [4.0])
    assert np.allclose(result.scaling, [math.sqrt(2), 1 / math.sqrt(2)])
    (s1, s2) = result.scaling
    assert math.isclose(s1 ** 2 / s2 ** 2, 4)
    assert result.max_residual < 1e-9


def test_identity_transport(umbrella_spec, umbrella):
    result = fiber_transport(umbrella_spec, umbrella.config, [2.5], [2.5])
    assert np.abs(result.scaling - 1).max() <= 1e-12


def test_transport_random_pairs(umbrella_spec, umbrella):
    rng = np.random.default_rng(0)
    params = as_array(umbrella.config)[:, 2:]
    for i in range(100):
        source = np.exp(params.T @ rng.uniform(-1, 1, 2))
        target = np.exp(params.T @ rng.uniform(-1, 1, 2))
        result = fiber_transport(umbrella_spec, umbrella.config, source, target, seed=i)
        assert result.max_residual < 1e-9


def test_transport_outside_the_image(umbrella_spec, umbrella):
    with pytest.raises(NotInImage):
        fiber_transport(umbrella_spec, umbrella.config, [1.0], [0.0])
    spec = parse_input("vars: x\nparams: a b\ngens: a - b")
    with pytest.raises(NotInImage):
        fiber_transport(spec, configuration(spec), [1.0, 2.0], [1.0, 1.0])


def test_fiber_count_examples(umbrella_spec, umbrella):
    square = parse_input("vars: x; params: c; gens: x^2 - c")
    assert configuration(square).matrix == IntMatrix.from_rows([[1, 2]])
    assert fiber_count(square, configuration(square)) == 2
    real = parse_input("field: nonnegative-reals; vars: x; params: c; gens: x^2 - c")
    assert fiber_count(real, configuration(real)) == 1
    assert fiber_count(umbrella_spec, umbrella.config) is None


def test_rank_deficient_parameters():
    spec = parse_input("vars: x\nparams: a b\ngens: a - b")
    with pytest.raises(RankDeficient):
        fiber_count(spec, configuration(spec))


def test_fiber_count_matches_root_enumeration():
    rng = random.Random(4)
    trials = 0
    while trials < 20:
        m = rng.randint(1, 3)
        nu = rng.randint(1, m)
        n = rng.randint(1, 2)
        rows = [[rng.randint(-3, 3) for _ in range(n + m)] for _ in range(nu)]
        matrix = IntMatrix.from_rows(rows, n + m)
        config = PointConfiguration(matrix, tuple(f"y{i}" for i in range(n + m)), n)
        if rank(config.matrix.columns(config.param_indices)) < nu:
            continue
        trials += 1
        spec = ProblemSpec(config.labels[:n], config.labels[n:], ())
        params = as_array(config)[:, n:]
        log_t = np.array([complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(nu)])
        values = np.exp(params.T @ log_t)
        roots = torus_roots(config, values)
        for root in roots:
            assert np.allclose(np.prod(root[:, None] ** params, axis=0), values)
        distinct = {tuple(np.round(root, 6)) for root in roots}
        assert fiber_count(spec, config) == len(distinct)


def test_verify_umbrella(umbrella):
    report = verify_stratification(umbrella, seed=7)
    assert report.passed
    assert len(report.checks) == 3 * 4


def test_verification_suite(benchmark):
    (_, strat) = benchmark
    report = run_verification(strat, seed=0, tolerances=Tolerances(samples_per_component=50))
    assert report.passed, [check.detail for check in report.failures()]
    names = [check.name for check in report.checks]
    assert names[:2] == ["torus samples", "jacobian rank"]


def test_skipped_checks():
    report = run_verification(stratify(parse_input("vars: x1 x2\ngens:")))
    statuses = {check.name: check.status for check in report.checks}
    assert statuses["fiber transport"] is CheckStatus.SKIPPED
    assert statuses["fiber count"] is CheckStatus.SKIPPED
    assert report.passed


def test_plus_generators_skip_vacuous_checks():
    strat = stratify(parse_input("vars: x y\nparams: c\ngens: x + c*y"))
    report = run_verification(strat, seed=1)
    statuses = {check.name: check.status for check in report.checks}
    assert statuses["torus samples"] is CheckStatus.SKIPPED
    assert statuses["fiber transport"] is CheckStatus.SKIPPED
    generators = [status for (name, status) in statuses.items() if name.endswith(": generators")]
    assert generators
    assert all(status is CheckStatus.SKIPPED for status in generators)


def test_mixed_signs_skip_transport_only():
    strat = stratify(parse_input("vars: x y\nparams: c\ngens: x - c*y, x^2 + y^2*c^2"))
    report = run_verification(strat, seed=1)
    statuses = {check.name: check.status for check in report.checks}
    assert statuses["torus samples"] is CheckStatus.PASSED
    assert statuses["fiber transport"] is CheckStatus.SKIPPED
