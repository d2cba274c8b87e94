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

"""Exact double description: from generators of a cone to the extreme rays
of its dual, ie. to the facets of the cone.

All vectors stay integral; every combination is made primitive right away,
so coordinates stay small on the configurations we deal with."""

from __future__ import annotations

from dataclasses import dataclass
import logging
import math
from typing import Dict, FrozenSet, List, Sequence, Tuple


logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for (a, b) in zip(u, v))


def primitive(v: Sequence[int]) -> Vector:
    g = math.gcd(*v) if v else 0
    if g in (0, 1):
        return tuple(v)
    return tuple(a // g for a in v)


def _combine(a: int, u: Sequence[int], b: int, v: Sequence[int]) -> Vector:
    return primitive([a * x + b * y for (x, y) in zip(u, v)])


@dataclass(frozen=True)
class DualCone:
    """``{h : r . h >= 0 for every constraint r}`` as the sum of the span of
    ``lineality`` and the cone over ``rays``."""

    rays: Tuple[Vector, ...]
    lineality: Tuple[Vector, ...]


def dual_cone(constraints: Sequence[Sequence[int]], dim: int) -> DualCone:
    lineality: List[Vector] = [
        tuple(int(i == j) for j in range(dim)) for i in range(dim)
    ]
    rays: List[Vector] = []
    processed: List[Vector] = []

    for constraint in constraints:
        r = tuple(constraint)
        assert len(r) == dim, (r, dim)
        if not any(r):
            continue

        values = [dot(r, l) for l in lineality]
        pivot = next((k for (k, value) in enumerate(values) if value != 0), None)
        if pivot is not None:
            # The constraint cuts the lineality space: one lineality direction
            # becomes a ray, everything else is projected onto r's hyperplane.
            l0 = lineality.pop(pivot)
            v0 = values.pop(pivot)
            if v0 < 0:
                (l0, v0) = (tuple(-a for a in l0), -v0)
            lineality = [
                _combine(v0, l, -value, l0) for (l, value) in zip(lineality, values)
            ]
            rays = [_combine(v0, ray, -dot(r, ray), l0) for ray in rays]
            rays.append(l0)
        else:
            rays = _add_constraint(rays, r, processed)
        processed.append(r)

    logger.debug(
        "dual of %s constraints in dimension %s: %s rays, lineality %s",
        len(constraints), dim, len(rays), len(lineality),
    )
    return DualCone(tuple(rays), tuple(lineality))


def _add_constraint(
    rays: List[Vector], r: Vector, processed: List[Vector]
) -> List[Vector]:
    zero_sets: Dict[Vector, FrozenSet[int]] = {
        ray: frozenset(i for (i, q) in enumerate(processed) if dot(q, ray) == 0)
        for ray in rays
    }
    values = {ray: dot(r, ray) for ray in rays}
    positive = [ray for ray in rays if values[ray] > 0]
    negative = [ray for ray in rays if values[ray] < 0]
    result = [ray for ray in rays if values[ray] >= 0]

    for p in positive:
        for n in negative:
            common = zero_sets[p] & zero_sets[n]
            # p and n span a 2-face iff no third ray is tight on all the
            # constraints they share.
            adjacent = not any(
                common <= zero_sets[other]
                for other in rays
                if other != p and other != n
            )
            if adjacent:
                result.append(_combine(values[p], n, -values[n], p))
    return result
