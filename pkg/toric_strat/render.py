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

"""Text and JSON renderings of the results.

Point indices are 1-based in every rendering (``a1`` is the first column
of ``A``), and 0-based everywhere else."""

from __future__ import annotations

import json
from typing import Dict, List, Sequence

from .polyhedral import FaceLattice
from .stratifier import FaceRecord, OrbitComponent, Stratification, stratum_ideal
from .verifier import CheckStatus, TransportResult, VerificationReport


def one_based(indices: Sequence[int]) -> List[int]:
    return [i + 1 for i in indices]


def format_incidence(indices: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in one_based(indices)) + "}"


def dumps(document) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def component_to_json(component: OrbitComponent, labels: Sequence[str]) -> Dict:
    ideal = stratum_ideal(component, labels)
    zeros = len(component.zero_set)
    return {
        "zeros": ideal[:zeros],
        "binomials": ideal[zeros:],
        "dim": component.dim,
        "presentation": "lattice-basis",
    }


def _flag_to_json(flag, labels) -> Dict[str, List[Dict]]:
    return {
        str(dim): [component_to_json(c, labels) for c in components]
        for (dim, components) in flag.items()
    }


def record_to_json(record: FaceRecord, strat: Stratification) -> Dict:
    return {
        "incidence": one_based(record.face.incidence),
        "dim": record.face.dim,
        "d": record.d,
        "e": record.e,
        "fiber_dim": record.fiber_dim,
        "empty": record.empty,
        "x_components": [component_to_json(c, strat.config.labels) for c in record.x_components],
        "y_components": [component_to_json(c, strat.spec.params) for c in record.y_components],
    }


def stratification_to_json(strat: Stratification) -> Dict:
    return {
        "digest": strat.digest,
        "nu": strat.nu,
        "A": strat.config.matrix.to_json(),
        "labels": list(strat.config.labels),
        "faces": [record_to_json(record, strat) for record in strat.face_table],
        "X_flag": _flag_to_json(strat.x_flag, strat.config.labels),
        "Y_flag": _flag_to_json(strat.y_flag, strat.spec.params),
    }


def format_component(component: OrbitComponent, labels: Sequence[str]) -> str:
    return "V(" + (", ".join(stratum_ideal(component, labels)) or "0") + ")"


def format_record(record: FaceRecord, strat: Stratification) -> List[str]:
    head = f"face {format_incidence(record.face.incidence)} dim={record.face.dim}"
    if record.empty:
        return [f"{head} empty"]
    return [
        f"{head} d={record.d} e={record.e} fiber_dim={record.fiber_dim}",
        "  X: " + " ∪ ".join(format_component(c, strat.config.labels) for c in record.x_components),
        "  Y: " + " ∪ ".join(format_component(c, strat.spec.params) for c in record.y_components),
    ]


def _format_flag(name: str, flag, labels) -> List[str]:
    return [
        f"{name}_{dim} = " + " ∪ ".join(format_component(c, labels) for c in components)
        for (dim, components) in flag.items()
    ]


def render_stratification(strat: Stratification, json_output: bool = False) -> str:
    if json_output:
        return dumps(stratification_to_json(strat))
    lines = [
        f"coordinates: {' '.join(strat.config.labels)}",
        f"nu = {strat.nu}",
        "A =",
        str(strat.config.matrix),
        "",
    ]
    for record in strat.face_table:
        lines.extend(format_record(record, strat))
    lines.append("")
    lines.extend(_format_flag("X", strat.x_flag, strat.config.labels))
    lines.extend(_format_flag("Y", strat.y_flag, strat.spec.params))
    return "\n".join(lines) + "\n"


def lattice_to_json(lattice: FaceLattice) -> Dict:
    return {
        "kind": lattice.kind.value,
        "facets": [
            {"normal": list(facet.normal), "offset": facet.offset} for facet in lattice.facets
        ],
        "faces": [
            {
                "incidence": one_based(face.incidence),
                "dim": face.dim,
                "facets": one_based(sorted(face.supports)),
            }
            for face in lattice.faces
        ],
    }


def _format_lattice(title: str, lattice: FaceLattice) -> List[str]:
    lines = [f"{title}: {len(lattice.faces)} faces, {len(lattice.facets)} facets"]
    for (k, facet) in enumerate(lattice.facets, start=1):
        lines.append(f"  facet {k}: {facet}")
    for face in lattice.faces:
        lines.append(f"  {face.dim}: {format_incidence(face.incidence)}")
    return lines


def render_lattices(strat: Stratification, json_output: bool = False) -> str:
    lattices = {
        "polytope": strat.polytope,
        "cone": strat.cone,
        "parameter_cone": strat.parameter_cone,
    }
    if json_output:
        return dumps({name: lattice_to_json(lattice) for (name, lattice) in lattices.items()})
    lines = []
    for (name, lattice) in lattices.items():
        lines.extend(_format_lattice(name, lattice))
    return "\n".join(lines) + "\n"


def render_report(report: VerificationReport, json_output: bool = False) -> str:
    if json_output:
        return dumps(report.to_json())
    lines = []
    for check in report.checks:
        residual = "" if check.worst_residual is None else f" (residual {check.worst_residual:.3g})"
        line = f"{check.status.value.upper():7} {check.name}{residual}"
        if check.status is not CheckStatus.PASSED and check.detail:
            line += f": {check.detail}"
        lines.append(line)
    lines.append("all checks passed" if report.passed else f"{len(report.failures())} check(s) failed")
    return "\n".join(lines) + "\n"


def render_transport(result: TransportResult, json_output: bool = False) -> str:
    document = {
        "from": result.source.tolist(),
        "to": result.target.tolist(),
        "scaling": result.scaling.tolist(),
        "max_residual": result.max_residual,
        "samples": result.samples,
    }
    if json_output:
        return dumps(document)
    return "".join(f"{key}: {value}\n" for (key, value) in document.items())
