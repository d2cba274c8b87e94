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

import random

import pytest

from ...ideal import exponent_matrix, load_benchmark, parse_input
from ...lattice import IntMatrix, rank
from ..strata import (
    NotSaturated,
    configuration,
    dim_face_image,
    dim_face_variety,
    fiber_dimension,
    stratify,
    stratify_configuration,
    stratum_ideal,
)


def names(strat, indices):
    return {strat.config.labels[j] for j in indices}


def table(strat):
    return [
        (
            record.face.incidence,
            record.face.dim,
            record.d,
            record.e,
            tuple(c.nonzero_set for c in record.x_components),
            tuple(c.nonzero_set for c in record.y_components),
        )
        for record in strat.face_table
    ]


def flags(strat):
    return (
        {dim: [c.nonzero_set for c in comps] for (dim, comps) in strat.x_flag.items()},
        {dim: [c.nonzero_set for c in comps] for (dim, comps) in strat.y_flag.items()},
    )


def random_unimodular(rng, size):
    rows = IntMatrix.identity(size).to_lists()
    for _ in range(rng.randint(1, 10)):
        if size == 1:
            rows[0] = [-a for a in rows[0]]
            continue
        (i, j) = rng.sample(range(size), 2)
        factor = rng.choice([-1, 1])
        rows[i] = [a + factor * b for (a, b) in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows, size)


def test_umbrella_configuration(umbrella):
    assert umbrella.config.matrix == IntMatrix.from_rows([[1, 0, 2], [0, 1, -2]])
    assert umbrella.nu == 2


def test_umbrella_face_table(umbrella):
    values = {record.face.incidence: (record.d, record.e) for record in umbrella.face_table}
    assert values == {
        (0, 1, 2): (2, 1),
        (0, 2): (1, 1),
        (0, 1): (1, 0),
        (1, 2): (1, 1),
        (0,): (0, 0),
        (1,): (1, 0),
        (2,): (1, 1),
    }
    assert not any(record.empty for record in umbrella.face_table)


def test_umbrella_flags(umbrella):
    x_flag = {
        dim: sorted(sorted(names(umbrella, c.zero_set)) for c in comps)
        for (dim, comps) in umbrella.x_flag.items()
    }
    assert x_flag == {2: [[]], 1: [["c", "x1"], ["x1", "x2"]], 0: [["c", "x1", "x2"]]}
    y_flag = {dim: [c.zero_set for c in comps] for (dim, comps) in umbrella.y_flag.items()}
    assert y_flag == {1: [()], 0: [(0,)]}
    assert list(umbrella.x_flag) == [2, 1, 0]


def test_umbrella_edge_components(umbrella):
    edge = umbrella.polytope.find((1, 2))
    (d, faces) = dim_face_variety(edge, umbrella.cone)
    assert d == 1
    assert [face.incidence for face in faces] == [(1,), (2,)]
    vertex = umbrella.polytope.find((0,))
    (d, faces) = dim_face_variety(vertex, umbrella.cone)
    assert d == 0
    assert [face.incidence for face in faces] == [()]


def test_umbrella_image_dimensions(umbrella):
    (e, _) = dim_face_image(umbrella.polytope.find((0, 1)), umbrella.parameter_cone, 2)
    assert e == 0
    (e, _) = dim_face_image(umbrella.polytope.find((2,)), umbrella.parameter_cone, 2)
    assert e == 1
    (e, _) = dim_face_image(umbrella.polytope.top, umbrella.parameter_cone, 2)
    assert e == 1


def test_umbrella_stratum_ideals(umbrella):
    labels = umbrella.config.labels
    by_zeros = {c.zero_set: c for c in umbrella.x_components()}
    assert stratum_ideal(by_zeros[()], labels) == ["x1^2 - x2^2*c"]
    assert stratum_ideal(by_zeros[(0, 1)], labels) == ["x1", "x2"]
    assert stratum_ideal(by_zeros[(0, 1, 2)], labels) == ["x1", "x2", "c"]


def test_umbrella_fiber_dimensions(umbrella):
    records = {record.face.incidence: record for record in umbrella.face_table}
    assert fiber_dimension(records[(0, 1, 2)]) == 1
    assert fiber_dimension(records[(2,)]) == 0
    assert fiber_dimension(records[(0,)]) == 0


def test_empty_ideal():
    strat = stratify(parse_input("vars: x1 x2\ngens:"))
    assert strat.config.matrix == IntMatrix.identity(2)
    assert len(strat.polytope.faces) == 3
    assert flags(strat) == ({2: [(0, 1)], 1: [(0,), (1,)], 0: [()]}, {0: [()]})
    assert all(record.e == 0 for record in strat.face_table)


def test_not_saturated():
    spec = parse_input("vars: x y\ngens: x^2 - y^2")
    with pytest.raises(NotSaturated):
        stratify(spec)
    strat = stratify(spec, force_saturate=True)
    assert strat.config.matrix == IntMatrix.from_rows([[1, 1]])


def test_zero_dimensional_configuration():
    strat = stratify(parse_input("vars: x\ngens: x - 1"))
    assert strat.nu == 0
    (record,) = strat.face_table
    assert (record.d, record.e) == (0, 0)
    assert stratum_ideal(record.x_components[0], strat.config.labels) == ["x - 1"]


def test_zero_column_is_never_a_zero_coordinate():
    # y is identically 1 on the variety
    strat = stratify(parse_input("vars: x y\ngens: y - 1"))
    for component in strat.x_components():
        assert 1 not in component.zero_set


def test_non_pointed_cone_gives_empty_strata():
    # x*y = 1: the cone over the points is a line
    strat = stratify(parse_input("vars: x y\ngens: x*y - 1"))
    empty = [record for record in strat.face_table if record.empty]
    assert len(empty) == 2
    assert all((r.d, r.e) == (-1, -1) for r in empty)
    assert flags(strat)[0] == {1: [(0, 1)]}


def test_invariants(benchmark):
    (spec, strat) = benchmark
    records = strat.face_table
    top = records[-1]
    assert top.face == strat.polytope.top
    assert top.d == strat.nu
    params = strat.config.matrix.columns(strat.config.param_indices)
    assert top.e == rank(params)
    assert strat.x_flag[strat.nu] == top.x_components
    for record in records:
        if record.empty:
            continue
        assert 0 <= record.e <= record.d <= strat.nu
        assert record.d == max(c.dim for c in record.x_components)
        for component in record.x_components:
            assert set(component.nonzero_set) <= set(record.face.incidence)
            assert any(
                set(component.image.incidence) <= set(y.nonzero_set)
                for y in record.y_components
            )
            assert all(
                row[j] == 0 for row in component.binomials.entries for j in component.zero_set
            )
        for other in records:
            if set(record.face.incidence) <= set(other.face.incidence):
                assert record.d <= other.d
                assert record.e <= other.e


def qualifying_faces(strat):
    n_vars = strat.config.n_vars
    x_faces = set()
    y_faces = set()
    for record in strat.face_table:
        if record.empty:
            continue
        incidence = record.face.incidence
        x_faces.update(face.incidence for face in strat.cone.faces_within(incidence))
        y_faces.update(
            face.incidence
            for face in strat.parameter_cone.faces_within(i - n_vars for i in incidence if i >= n_vars)
        )
    return (x_faces, y_faces)


def test_flags_hold_every_qualifying_orbit(benchmark):
    (_, strat) = benchmark
    (x_faces, y_faces) = qualifying_faces(strat)
    assert {c.nonzero_set for c in strat.x_components()} == x_faces
    assert {c.nonzero_set for c in strat.y_components()} == y_faces
    for (dim, components) in strat.x_flag.items():
        assert all(c.dim == dim for c in components)


def test_flags_are_downward_closed(benchmark):
    (_, strat) = benchmark
    for (lattice, components) in [
        (strat.cone, strat.x_components()),
        (strat.parameter_cone, strat.y_components()),
    ]:
        present = {c.nonzero_set for c in components}
        for component in components:
            for face in lattice.faces:
                if face <= component.cone_face:
                    assert face.incidence in present, (face, component.key)


def test_origin_is_a_stratum():
    strat = stratify(load_benchmark("I3"))
    assert [c.nonzero_set for c in strat.x_flag[0]] == [()]
    assert min(strat.x_flag) == 0


def test_unimodular_invariance(benchmark):
    (spec, strat) = benchmark
    rng = random.Random(5)
    for _ in range(10):
        unimodular = random_unimodular(rng, strat.nu)
        moved = stratify_configuration(spec, strat.config.transformed(unimodular))
        assert table(moved) == table(strat)
        assert flags(moved) == flags(strat)


def test_threads_do_not_change_output(benchmark):
    (spec, strat) = benchmark
    assert table(stratify(spec, threads=4)) == table(strat)


def test_configuration_is_canonical():
    first = configuration(parse_input("vars: x1 x2; params: c; gens: c*x2^2 - x1^2"))
    second = configuration(parse_input("vars: x1 x2; params: c; gens: -c*x2^2 + x1^2"))
    assert first == second


@pytest.mark.slow
def test_phosphorylation_network_terminates():
    spec = load_benchmark("I5")
    strat = stratify(spec, threads=4)
    assert strat.nu == spec.n + spec.m - rank(exponent_matrix(spec))
    top = strat.face_table[-1]
    assert top.face == strat.polytope.top
    assert top.d == strat.nu
    assert len(strat.face_table) == len(strat.polytope.faces)
