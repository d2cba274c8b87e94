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

"""Slow reference implementation of face enumeration: every hyperplane
spanned by a subset of the points is tried as a supporting hyperplane.

Only meant for small configurations in tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, List, Sequence, Set, Tuple


Face = Tuple[Tuple[int, ...], int]
"""Sorted incidence and dimension."""


def _row_reduce(vectors: Sequence[Sequence[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    rows = [list(vector) for vector in vectors]
    pivots = []
    r = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        (rows[r], rows[pivot]) = (rows[pivot], rows[r])
        rows[r] = [a / rows[r][col] for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for (a, b) in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return (rows, pivots)


def _rank(vectors) -> int:
    return len(_row_reduce([[Fraction(a) for a in v] for v in vectors])[1])


def _det(matrix: List[List[Fraction]]) -> Fraction:
    if not matrix:
        return Fraction(1)
    return sum(
        (-1) ** j * matrix[0][j] * _det([row[:j] + row[j + 1:] for row in matrix[1:]])
        for j in range(len(matrix))
    )


def _normal(vectors: Sequence[Sequence[Fraction]], dim: int) -> List[Fraction]:
    """Vector orthogonal to ``dim - 1`` vectors of length ``dim``."""
    return [
        (-1) ** k * _det([list(v[:k]) + list(v[k + 1:]) for v in vectors])
        for k in range(dim)
    ]


def _project(points: Sequence[Sequence[int]], base: Sequence[int]) -> List[Tuple[Fraction, ...]]:
    differences = [[Fraction(a - b) for (a, b) in zip(p, base)] for p in points]
    (_, pivots) = _row_reduce(differences)
    return [tuple(d[j] for j in pivots) for d in differences]


def _close(facets: Set[FrozenSet[int]], size: int, keep_empty: bool) -> Set[FrozenSet[int]]:
    everything = frozenset(range(size))
    closed = set()
    for r in range(0 if keep_empty else 1, size + 1):
        for subset in combinations(range(size), r):
            face = everything
            for facet in facets:
                if facet.issuperset(subset):
                    face = face & facet
            closed.add(face)
    return closed


def polytope_faces(points: Sequence[Sequence[int]]) -> Set[Face]:
    size = len(points)
    reduced = _project(points, points[0])
    dim = len(reduced[0])
    facets = set()
    if dim > 0:
        for subset in combinations(range(size), dim):
            spanning = [
                [a - b for (a, b) in zip(reduced[i], reduced[subset[0]])]
                for i in subset[1:]
            ]
            if _rank(spanning) != dim - 1:
                continue
            normal = _normal(spanning, dim)
            values = [sum(a * b for (a, b) in zip(normal, q)) for q in reduced]
            level = values[subset[0]]
            if all(v <= level for v in values) or all(v >= level for v in values):
                facets.add(frozenset(i for (i, v) in enumerate(values) if v == level))
    return {
        (
            tuple(sorted(face)),
            _rank([[a - b for (a, b) in zip(reduced[i], reduced[min(face)])] for i in face]),
        )
        for face in _close(facets, size, keep_empty=False)
    }


def cone_faces(points: Sequence[Sequence[int]]) -> Set[Face]:
    size = len(points)
    if not points:
        return {((), 0)}
    reduced = _project(points, [0] * len(points[0]))
    dim = len(reduced[0])
    facets = set()
    if dim > 0:
        for subset in combinations(range(size), dim - 1):
            spanning = [reduced[i] for i in subset]
            if _rank(spanning) != dim - 1:
                continue
            normal = _normal(spanning, dim)
            values = [sum(a * b for (a, b) in zip(normal, q)) for q in reduced]
            if all(v >= 0 for v in values) or all(v <= 0 for v in values):
                facets.add(frozenset(i for (i, v) in enumerate(values) if v == 0))
    return {
        (tuple(sorted(face)), _rank([reduced[i] for i in face]))
        for face in _close(facets, size, keep_empty=True)
    }
