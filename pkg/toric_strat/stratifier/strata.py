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

"""Stratification of the projection of an affine toric variety onto its
parameter coordinates.

For every face of the polytope conv(A), the coordinates of the points
outside the face are set to zero. What remains of the variety is a union of
torus orbits, one per face of cone(A) lying inside the polytope face; its
dimension ``d`` is the largest dimension of such a cone face. The same rule
on the cone over the parameter columns gives the dimension ``e`` of the
image."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..ideal import ProblemSpec, Sign, exponent_matrix, format_binomial, spec_digest
from ..lattice import IntMatrix, PointConfiguration, is_saturated_rowlattice, kernel_basis, subconfig_kernel
from ..polyhedral import Face, FaceLattice, cone_face_lattice, face_lattice


logger = logging.getLogger(__name__)


class StratificationError(Exception):
    pass


class NotSaturated(StratificationError):
    pass


@dataclass(frozen=True)
class OrbitComponent:
    """Closure of the torus orbit attached to a face of a cone: the points
    of the variety whose coordinates vanish exactly on ``zero_set``."""

    cone_face: Face
    zero_set: Tuple[int, ...]
    nonzero_set: Tuple[int, ...]
    binomials: IntMatrix
    """Basis of the relations between the points of ``nonzero_set``."""

    dim: int
    image: Optional[Face] = None
    """For components of the variety: the face of the parameter cone the
    orbit maps onto."""

    @property
    def key(self) -> Tuple[int, ...]:
        return self.cone_face.incidence


@dataclass(frozen=True)
class FaceRecord:
    face: Face
    d: int
    e: int
    x_components: Tuple[OrbitComponent, ...]
    y_components: Tuple[OrbitComponent, ...]
    empty: bool = False
    """No point of the variety has exactly these zero coordinates."""

    @property
    def fiber_dim(self) -> int:
        return self.d - self.e


@dataclass(frozen=True)
class Stratification:
    spec: ProblemSpec
    config: PointConfiguration
    polytope: FaceLattice
    cone: FaceLattice
    parameter_cone: FaceLattice
    face_table: Tuple[FaceRecord, ...]
    x_flag: Dict[int, Tuple[OrbitComponent, ...]]
    y_flag: Dict[int, Tuple[OrbitComponent, ...]]
    digest: str

    @property
    def nu(self) -> int:
        return self.config.nu

    def x_components(self) -> List[OrbitComponent]:
        return [c for dim in sorted(self.x_flag) for c in self.x_flag[dim]]

    def y_components(self) -> List[OrbitComponent]:
        return [c for dim in sorted(self.y_flag) for c in self.y_flag[dim]]


def parameter_configuration(config: PointConfiguration) -> PointConfiguration:
    """The sub-configuration of the parameter columns, in parameter-local
    indices."""
    return PointConfiguration(
        config.matrix.columns(config.param_indices),
        config.labels[config.n_vars:],
        0,
    )


def _maximal_within(lattice: FaceLattice, incidence: Iterable[int]) -> Tuple[int, List[Face]]:
    qualifying = lattice.faces_within(incidence)
    if not qualifying:
        return (-1, [])
    maximal = [face for face in qualifying if not any(face < other for other in qualifying)]
    return (max(face.dim for face in qualifying), maximal)


def dim_face_variety(face: Face, cone: FaceLattice) -> Tuple[int, List[Face]]:
    """Dimension of the part of the variety with zeros outside ``face``,
    and the cone faces indexing its irreducible components. ``-1`` when
    that part is empty."""
    return _maximal_within(cone, face.incidence)


def dim_face_image(face: Face, parameter_cone: FaceLattice, n_vars: int) -> Tuple[int, List[Face]]:
    """Same as ``dim_face_variety``, for the image in parameter space."""
    return _maximal_within(
        parameter_cone, (i - n_vars for i in face.incidence if i >= n_vars)
    )


def stratum_ideal(component: OrbitComponent, labels: Sequence[str]) -> List[str]:
    """Generators cutting out the component: its zero coordinates, and one
    binomial per basis vector of its relation lattice."""
    generators = [labels[j] for j in component.zero_set]
    for row in component.binomials.entries:
        positive = tuple(max(a, 0) for a in row)
        negative = tuple(max(-a, 0) for a in row)
        generators.append(format_binomial(positive, negative, Sign.MINUS, labels))
    return generators


def fiber_dimension(record: FaceRecord) -> int:
    return record.fiber_dim


class _Components:
    """Builds each orbit component once, keyed by its cone face."""

    def __init__(self, config: PointConfiguration, parameter_cone: Optional[FaceLattice]):
        self.config = config
        self.parameter_cone = parameter_cone
        self.cache: Dict[Tuple[int, ...], OrbitComponent] = {}

    def get(self, face: Face) -> OrbitComponent:
        if face.incidence not in self.cache:
            nonzero = face.incidence
            image = None
            if self.parameter_cone is not None:
                n_vars = self.config.n_vars
                image = self.parameter_cone.find(i - n_vars for i in nonzero if i >= n_vars)
                assert image is not None, face
            self.cache[face.incidence] = OrbitComponent(
                cone_face=face,
                zero_set=tuple(j for j in range(self.config.size) if j not in nonzero),
                nonzero_set=nonzero,
                binomials=subconfig_kernel(self.config, nonzero),
                dim=face.dim,
                image=image,
            )
        return self.cache[face.incidence]


def _flag(components: Iterable[OrbitComponent]) -> Dict[int, Tuple[OrbitComponent, ...]]:
    """Orbits grouped by dimension, highest first; ``X_i`` is the union of
    the closures of the orbits of dimension at most ``i``."""
    flag: Dict[int, Dict[Tuple[int, ...], OrbitComponent]] = {}
    for component in components:
        flag.setdefault(component.dim, {})[component.key] = component
    return {
        dim: tuple(sorted(flag[dim].values(), key=lambda c: c.nonzero_set))
        for dim in sorted(flag, reverse=True)
    }


def stratify_configuration(
    spec: ProblemSpec, config: PointConfiguration, threads: int = 1
) -> Stratification:
    """Stratifies the variety of an explicit point configuration; ``config``
    may be any presentation of the kernel of the exponent matrix."""
    if config.nu == 0:
        logger.info("empty configuration: the variety is a single point")
    points = config.points
    polytope = face_lattice(points)
    cone = cone_face_lattice(points, dim=config.nu)
    parameters = parameter_configuration(config)
    parameter_cone = cone_face_lattice(parameters.points, dim=config.nu)
    x_builder = _Components(config, parameter_cone)
    y_builder = _Components(parameters, None)

    def record(face: Face) -> FaceRecord:
        (d, x_faces) = dim_face_variety(face, cone)
        if d < 0:
            logger.debug("face %s: empty stratum", face.incidence)
            return FaceRecord(face, -1, -1, (), (), empty=True)
        (e, y_faces) = dim_face_image(face, parameter_cone, config.n_vars)
        return FaceRecord(
            face,
            d,
            e,
            tuple(x_builder.get(tau) for tau in x_faces),
            tuple(y_builder.get(tau) for tau in y_faces),
        )

    # records only read the lattices; component caches are filled first so
    # that workers never write to them
    for face in cone.faces:
        x_builder.get(face)
    for face in parameter_cone.faces:
        y_builder.get(face)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            records = list(executor.map(record, polytope.faces))
    else:
        records = [record(face) for face in polytope.faces]
    records.sort(key=lambda r: (r.face.dim, r.face.incidence))

    stratification = Stratification(
        spec=spec,
        config=config,
        polytope=polytope,
        cone=cone,
        parameter_cone=parameter_cone,
        face_table=tuple(records),
        x_flag=_flag(
            x_builder.get(tau)
            for r in records
            if not r.empty
            for tau in cone.faces_within(r.face.incidence)
        ),
        y_flag=_flag(
            y_builder.get(tau)
            for r in records
            if not r.empty
            for tau in parameter_cone.faces_within(
                i - config.n_vars for i in r.face.incidence if i >= config.n_vars
            )
        ),
        digest=spec_digest(spec),
    )
    logger.info(
        "stratified: nu=%s, %s polytope faces, %s variety strata, %s image strata",
        config.nu,
        len(polytope.faces),
        sum(len(c) for c in stratification.x_flag.values()),
        sum(len(c) for c in stratification.y_flag.values()),
    )
    return stratification


def configuration(spec: ProblemSpec, force_saturate: bool = False) -> PointConfiguration:
    """The canonical point configuration of the variety of ``spec``."""
    relations = exponent_matrix(spec)
    if not is_saturated_rowlattice(relations):
        if not force_saturate:
            raise NotSaturated(
                "the lattice spanned by the exponent differences is not saturated: "
                "the ideal is not prime (use --force-saturate to stratify its "
                "toric component)"
            )
        logger.warning("exponent lattice is not saturated; using its saturation")
    return kernel_basis(relations, labels=spec.names, n_vars=spec.n)


def stratify(spec: ProblemSpec, force_saturate: bool = False, threads: int = 1) -> Stratification:
    return stratify_configuration(spec, configuration(spec, force_saturate), threads)
