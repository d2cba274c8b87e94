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

"""Exact H-representations of polytopes and cones spanned by lattice points."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

from ..lattice import IntMatrix, kernel_basis
from ..lattice.normal_forms import row_echelon
from .description import dot, dual_cone, primitive


logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


class DegenerateInput(Exception):
    pass


@dataclass(frozen=True)
class Hyperplane:
    """The hyperplane ``normal . a == offset``; as an inequality it reads
    ``normal . a <= offset``."""

    normal: Tuple[int, ...]
    offset: int

    def __post_init__(self):
        assert any(self.normal), self

    def value(self, point: Sequence[int]) -> int:
        return dot(self.normal, point)

    def contains(self, point: Sequence[int]) -> bool:
        return self.value(point) == self.offset

    def satisfied_by(self, point: Sequence[int]) -> bool:
        return self.value(point) <= self.offset

    def __str__(self):
        return f"{list(self.normal)} . a <= {self.offset}"


@dataclass(frozen=True)
class AffineHull:
    """``base_point`` plus the real span of ``basis`` (rows in Hermite
    normal form, with pivot columns ``pivots``)."""

    base_point: Point
    basis: IntMatrix
    pivots: Tuple[int, ...]
    equations: Tuple[Hyperplane, ...]

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def coordinates(self, point: Sequence[int]) -> Point:
        """Coordinates of a point of the hull, read on the pivot columns.
        This projection is injective on the hull."""
        return tuple(point[j] - self.base_point[j] for j in self.pivots)

    def lift(self, normal: Sequence[int]) -> Tuple[int, ...]:
        """Normal in the ambient space of a linear form given on the
        pivot coordinates."""
        lifted = [0] * len(self.base_point)
        for (j, value) in zip(self.pivots, normal):
            lifted[j] = value
        return tuple(lifted)


def _span(rows: Sequence[Sequence[int]], dim: int) -> Tuple[IntMatrix, Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    matrix = IntMatrix.from_rows(rows, dim)
    (h, _, pivots) = row_echelon(matrix)
    basis = IntMatrix.from_rows(h[: len(pivots)], dim)
    orthogonal = kernel_basis(matrix).matrix.entries
    return (basis, tuple(pivots), orthogonal)


def affine_hull(points: Sequence[Sequence[int]]) -> AffineHull:
    if not points:
        raise DegenerateInput("the affine hull of no points is empty")
    base = tuple(points[0])
    dim = len(base)
    differences = [[a - b for (a, b) in zip(point, base)] for point in points]
    (basis, pivots, orthogonal) = _span(differences, dim)
    equations = tuple(Hyperplane(normal, dot(normal, base)) for normal in orthogonal)
    return AffineHull(base, basis, pivots, equations)


def linear_hull(points: Sequence[Sequence[int]], dim: int) -> AffineHull:
    (basis, pivots, orthogonal) = _span(points, dim)
    equations = tuple(Hyperplane(normal, 0) for normal in orthogonal)
    return AffineHull((0,) * dim, basis, pivots, equations)


def hull_facets(points: Sequence[Sequence[int]]) -> List[Hyperplane]:
    """Irredundant facet inequalities of conv(points), relative to its
    affine hull (see ``affine_hull(points).equations``)."""
    hull = affine_hull(points)
    if hull.dimension == 0:
        return []
    constraints = [(1,) + hull.coordinates(point) for point in points]
    dual = dual_cone(constraints, hull.dimension + 1)
    assert not dual.lineality, dual
    facets = []
    for (h0, *h) in dual.rays:
        # h0 + h . q >= 0 on every reduced point q
        normal = hull.lift([-a for a in h])
        facets.append(Hyperplane(normal, h0 + dot(normal, hull.base_point)))
    facets.sort(key=lambda facet: (facet.normal, facet.offset))
    logger.debug(
        "%s points of affine dimension %s: %s facets",
        len(points), hull.dimension, len(facets),
    )
    return facets


class ConeFacets(NamedTuple):
    """``inequalities`` (all with offset 0) and the equations of the linear
    span of the cone."""

    inequalities: List[Hyperplane]
    equations: List[Hyperplane]


def cone_facets(points: Sequence[Sequence[int]], dim: Optional[int] = None) -> ConeFacets:
    """Facets of cone(points). The cone need not be pointed nor full
    dimensional; a lineality space shows up as missing inequalities."""
    if dim is None:
        if not points:
            raise DegenerateInput("cannot infer the dimension of an empty configuration")
        dim = len(points[0])
    span = linear_hull(points, dim)
    inequalities = []
    if span.dimension > 0:
        constraints = [span.coordinates(point) for point in points]
        dual = dual_cone(constraints, span.dimension)
        assert not dual.lineality, dual
        for ray in dual.rays:
            inequalities.append(Hyperplane(primitive(span.lift([-a for a in ray])), 0))
    inequalities.sort(key=lambda facet: facet.normal)
    logger.debug(
        "cone over %s points of linear dimension %s: %s facets",
        len(points), span.dimension, len(inequalities),
    )
    return ConeFacets(inequalities, list(span.equations))
