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

import pytest

from ...ideal import exponent_matrix, load_benchmark
from ...lattice import IntMatrix, kernel_basis
from ..description import dual_cone
from ..faces import LatticeKind, cone_face_lattice, face_lattice
from ..hull import DegenerateInput, Hyperplane, affine_hull, cone_facets, hull_facets
from .. import oracle


UMBRELLA = [(1, 1), (0, 1), (2, 0)]
SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


def unit_vectors(dim):
    return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]


def summary(lattice):
    return {(face.incidence, face.dim) for face in lattice.faces}


def random_points(rng):
    dim = rng.randint(1, 3)
    return [
        tuple(rng.randint(-4, 4) for _ in range(dim))
        for _ in range(rng.randint(1, 8))
    ]


def random_unimodular(rng, size):
    matrix = IntMatrix.identity(size).to_lists()
    for _ in range(rng.randint(0, 10)):
        (i, j) = rng.sample(range(size), 2) if size > 1 else (0, 0)
        if i == j:
            matrix[i] = [-a for a in matrix[i]]
        else:
            factor = rng.choice([-2, -1, 1, 2])
            matrix[i] = [a + factor * b for (a, b) in zip(matrix[i], matrix[j])]
    return IntMatrix.from_rows(matrix, size)


def transform(unimodular, points):
    return [
        tuple(sum(a * b for (a, b) in zip(row, point)) for row in unimodular.entries)
        for point in points
    ]


def test_dual_of_quadrant():
    dual = dual_cone([(1, 0), (0, 1)], 2)
    assert sorted(dual.rays) == [(0, 1), (1, 0)]
    assert dual.lineality == ()


def test_dual_of_half_plane_keeps_a_line():
    dual = dual_cone([(0, 1)], 2)
    assert dual.rays == ((0, 1),)
    assert [abs(a) for a in dual.lineality[0]] == [1, 0]


def test_affine_hull_dimensions():
    assert affine_hull(UMBRELLA).dimension == 2
    collinear = affine_hull([(0, 0), (1, 1), (2, 2)])
    assert collinear.dimension == 1
    assert all(eq.contains((5, 5)) for eq in collinear.equations)
    assert affine_hull([(3, -1)]).dimension == 0
    with pytest.raises(DegenerateInput):
        affine_hull([])


def test_umbrella_triangle():
    facets = hull_facets(UMBRELLA)
    assert len(facets) == 3
    for facet in facets:
        assert all(facet.satisfied_by(point) for point in UMBRELLA)
        assert sum(facet.contains(point) for point in UMBRELLA) == 2
    lattice = face_lattice(UMBRELLA, facets)
    assert lattice.kind is LatticeKind.POLYTOPE
    assert summary(lattice) == {
        ((0,), 0), ((1,), 0), ((2,), 0),
        ((0, 1), 1), ((0, 2), 1), ((1, 2), 1),
        ((0, 1, 2), 2),
    }
    assert lattice.top.incidence == (0, 1, 2)
    assert lattice.f_vector() == [3, 3]


def test_simplex_of_unit_vectors():
    for dim in range(1, 5):
        points = unit_vectors(dim)
        assert len(hull_facets(points)) == (dim if dim > 1 else 0)
        lattice = face_lattice(points)
        assert len(lattice.faces) == 2 ** dim - 1
        assert len(affine_hull(points).equations) == 1


def test_square():
    lattice = face_lattice(SQUARE)
    assert len(lattice.faces) == 9
    assert lattice.f_vector() == [4, 4]
    assert len(lattice.covers()) == 8 + 4


def test_facets_are_primitive():
    points = [(0, 0, 0), (2, 0, 0), (0, 4, 0), (0, 0, 6), (2, 4, 6)]
    for facet in hull_facets(points):
        assert math.gcd(*facet.normal) == 1
        assert all(facet.satisfied_by(point) for point in points)


def test_lower_dimensional_polytope():
    # a square lying in the plane z = 1
    points = [(x, y, 1) for (x, y) in SQUARE]
    facets = hull_facets(points)
    assert len(facets) == 4
    assert summary(face_lattice(points, facets)) == summary(face_lattice(SQUARE))


def test_umbrella_cone():
    (inequalities, equations) = cone_facets(UMBRELLA)
    assert sorted(h.normal for h in inequalities) == [(-1, 0), (0, -1)]
    assert all(h.offset == 0 for h in inequalities)
    assert equations == []
    lattice = cone_face_lattice(UMBRELLA, inequalities)
    assert summary(lattice) == {((), 0), ((1,), 1), ((2,), 1), ((0, 1, 2), 2)}
    assert lattice.bottom.incidence == ()


def test_line_cone():
    (inequalities, equations) = cone_facets([(1, 0), (-1, 0)])
    assert inequalities == []
    assert equations == [Hyperplane((0, 1), 0)]
    lattice = cone_face_lattice([(1, 0), (-1, 0)])
    assert summary(lattice) == {((0, 1), 1)}


def test_half_plane_cone():
    lattice = cone_face_lattice([(1, 0), (-1, 0), (0, 1)])
    assert summary(lattice) == {((0, 1), 1), ((0, 1, 2), 2)}


def test_orthant():
    for dim in range(1, 5):
        points = unit_vectors(dim)
        assert len(cone_facets(points).inequalities) == dim
        assert len(cone_face_lattice(points).faces) == 2 ** dim


def test_zero_point_lies_on_every_cone_face():
    lattice = cone_face_lattice([(0, 0), (1, 0), (0, 1)])
    assert all(0 in face.incidence for face in lattice.faces)
    assert len(lattice.faces) == 4


def test_cone_without_points():
    lattice = cone_face_lattice([], dim=2)
    assert summary(lattice) == {((), 0)}


def test_supports_cut_out_incidence():
    points = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 1, 0)]
    lattice = face_lattice(points)
    for face in lattice.faces[:-1]:
        tight = {
            i for (i, point) in enumerate(points)
            if all(lattice.facets[k].contains(point) for k in face.supports)
        }
        assert tuple(sorted(tight)) == face.incidence


def test_matches_oracle():
    rng = random.Random(1)
    for _ in range(100):
        points = random_points(rng)
        assert summary(face_lattice(points)) == oracle.polytope_faces(points)
        assert summary(cone_face_lattice(points)) == oracle.cone_faces(points)


def test_matches_oracle_in_higher_dimensions():
    rng = random.Random(4)
    for _ in range(40):
        dim = rng.randint(4, 5)
        points = [
            tuple(rng.randint(-2, 2) for _ in range(dim))
            for _ in range(rng.randint(dim, 9))
        ]
        assert summary(face_lattice(points)) == oracle.polytope_faces(points)
        assert summary(cone_face_lattice(points)) == oracle.cone_faces(points)


def test_proofreading_configuration_matches_oracle():
    spec = load_benchmark("I3")
    points = kernel_basis(exponent_matrix(spec)).points
    assert len(points[0]) == 6
    polytope = face_lattice(points)
    cone = cone_face_lattice(points)
    assert summary(polytope) == oracle.polytope_faces(points)
    assert summary(cone) == oracle.cone_faces(points)
    assert len(polytope.facets) == len(polytope.by_dim(polytope.top.dim - 1))
    assert sorted(hull_facets(points), key=lambda h: h.normal) == sorted(
        polytope.facets, key=lambda h: h.normal
    )


def test_euler_poincare():
    rng = random.Random(2)
    for _ in range(100):
        lattice = face_lattice(random_points(rng))
        dim = lattice.top.dim
        alternating = sum((-1) ** i * f for (i, f) in enumerate(lattice.f_vector()))
        assert alternating == 1 - (-1) ** dim


def test_unimodular_invariance():
    rng = random.Random(3)
    for _ in range(50):
        points = random_points(rng)
        unimodular = random_unimodular(rng, len(points[0]))
        moved = transform(unimodular, points)
        assert summary(face_lattice(points)) == summary(face_lattice(moved))
        assert summary(cone_face_lattice(points)) == summary(cone_face_lattice(moved))
