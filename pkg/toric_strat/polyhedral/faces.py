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

"""Face lattices of polytopes and cones, each face recorded by the set of
configuration points it contains."""

from __future__ import annotations

from dataclasses import dataclass
import enum
import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from ..lattice import IntMatrix, rank
from .hull import Hyperplane, cone_facets, hull_facets


logger = logging.getLogger(__name__)


class LatticeKind(enum.Enum):
    POLYTOPE = "polytope"
    CONE = "cone"


@dataclass(frozen=True)
class Face:
    incidence: Tuple[int, ...]
    """Sorted indices of the points lying on the face."""

    dim: int
    supports: FrozenSet[int]
    """Indices of the facets containing the face."""

    def __le__(self, other: Face) -> bool:
        return set(self.incidence) <= set(other.incidence)

    def __lt__(self, other: Face) -> bool:
        return set(self.incidence) < set(other.incidence)


@dataclass(frozen=True)
class FaceLattice:
    kind: LatticeKind
    faces: Tuple[Face, ...]
    """Sorted by dimension, then by incidence."""

    facets: Tuple[Hyperplane, ...]
    size: int

    @property
    def top(self) -> Face:
        return self.faces[-1]

    @property
    def bottom(self) -> Face:
        return self.faces[0]

    def by_dim(self, dim: int) -> List[Face]:
        return [face for face in self.faces if face.dim == dim]

    def find(self, incidence: Iterable[int]) -> Optional[Face]:
        incidence = tuple(sorted(incidence))
        return next((face for face in self.faces if face.incidence == incidence), None)

    def faces_within(self, incidence: Iterable[int]) -> List[Face]:
        """Faces all of whose points are in ``incidence``."""
        incidence = set(incidence)
        return [face for face in self.faces if incidence.issuperset(face.incidence)]

    def covers(self) -> List[Tuple[int, int]]:
        """Pairs ``(i, j)`` of face indices such that face ``i`` is a facet
        of face ``j``."""
        return [
            (i, j)
            for (i, lower) in enumerate(self.faces)
            for (j, upper) in enumerate(self.faces)
            if upper.dim == lower.dim + 1 and lower < upper
        ]

    def f_vector(self) -> List[int]:
        """Number of faces of each dimension below the top one."""
        return [len(self.by_dim(dim)) for dim in range(self.top.dim)]


def _affine_rank(points: Sequence[Sequence[int]], dim: int) -> int:
    if not points:
        return -1
    base = points[0]
    return rank(
        IntMatrix.from_rows(
            [[a - b for (a, b) in zip(point, base)] for point in points[1:]], dim
        )
    )


def _linear_rank(points: Sequence[Sequence[int]], dim: int) -> int:
    return rank(IntMatrix.from_rows(points, dim))


def _closure(
    facet_incidences: Sequence[FrozenSet[int]], size: int, keep_empty: bool
) -> Set[FrozenSet[int]]:
    found: Set[FrozenSet[int]] = {frozenset(range(size))}
    frontier = set(facet_incidences)
    while frontier:
        new = set()
        for incidence in frontier:
            if incidence in found or not (incidence or keep_empty):
                continue
            found.add(incidence)
            for facet_incidence in facet_incidences:
                new.add(incidence & facet_incidence)
        frontier = new
    return found


def _build(
    kind: LatticeKind,
    points: Sequence[Sequence[int]],
    facets: Sequence[Hyperplane],
    dim: int,
) -> FaceLattice:
    facet_incidences = [
        frozenset(i for (i, point) in enumerate(points) if facet.contains(point))
        for facet in facets
    ]
    incidences = _closure(
        facet_incidences, len(points), keep_empty=kind is LatticeKind.CONE
    )
    faces = []
    for incidence in incidences:
        members = [points[i] for i in sorted(incidence)]
        if kind is LatticeKind.POLYTOPE:
            face_dim = _affine_rank(members, dim)
        else:
            face_dim = _linear_rank(members, dim)
        supports = frozenset(
            k for (k, facet_incidence) in enumerate(facet_incidences)
            if incidence <= facet_incidence
        )
        faces.append(Face(tuple(sorted(incidence)), face_dim, supports))
    faces.sort(key=lambda face: (face.dim, face.incidence))
    lattice = FaceLattice(kind, tuple(faces), tuple(facets), len(points))
    logger.debug(
        "%s face lattice on %s points: %s faces", kind.value, len(points), len(faces)
    )
    return lattice


def face_lattice(
    points: Sequence[Sequence[int]], facets: Optional[Sequence[Hyperplane]] = None
) -> FaceLattice:
    """Every nonempty face of conv(points)."""
    if facets is None:
        facets = hull_facets(points)
    return _build(LatticeKind.POLYTOPE, points, facets, len(points[0]))


def cone_face_lattice(
    points: Sequence[Sequence[int]],
    facets: Optional[Sequence[Hyperplane]] = None,
    dim: Optional[int] = None,
) -> FaceLattice:
    """Every face of cone(points), from its lineality space up. With no
    points this is the single face {0}."""
    if dim is None:
        dim = len(points[0]) if points else 0
    if facets is None:
        facets = cone_facets(points, dim).inequalities
    return _build(LatticeKind.CONE, points, facets, dim)

