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

"""Graphviz Hasse diagrams and Macaulay2 cross-check scripts."""

from __future__ import annotations

import textwrap
from typing import List

from .ideal import Field, ProblemSpec
from .polyhedral import Face, FaceLattice
from .render import format_incidence


def face_label(face: Face) -> str:
    return f"{face.dim}:{format_incidence(face.incidence)}"


def lattice_to_dot(lattice: FaceLattice, name: str = "faces") -> str:
    """Hasse diagram of ``lattice``, one node per face, bottom to top."""
    nodes: List[str] = [
        f'  f{i} [label="{face_label(face)}"];' for (i, face) in enumerate(lattice.faces)
    ]
    edges = [f"  f{i} -> f{j};" for (i, j) in lattice.covers()]
    return textwrap.dedent(f"""\
        digraph {name} {{
          rankdir=BT;
          node [shape=box];
        """) + "\n".join(nodes + edges) + "\n}\n"


def _ideal(spec: ProblemSpec) -> str:
    if not spec.gens:
        return "ideal(0_R)"
    return "ideal(" + ", ".join(spec.format_generator(g) for g in spec.gens) + ")"


def m2_script(spec: ProblemSpec) -> str:
    """A Macaulay2 script stratifying the projection onto the parameters
    with the WhitneyStratifications package."""
    real = "" if spec.field is Field.COMPLEX else "-- real points only: keep the strata meeting the positive orthant\n"
    target = ", ".join(spec.params) if spec.params else "t"
    image = "{" + ", ".join(spec.params) + "}" if spec.params else "{0_R}"
    return real + textwrap.dedent(f"""\
        -- projection of V(I) onto its parameters; compare with `toric-strat stratify`
        needsPackage "WhitneyStratifications"
        kk = QQ
        R = kk[{", ".join(spec.names)}]
        S = kk[{target}]
        I = {_ideal(spec)}
        F = map(R, S, {image})
        MS = mapStratify(F, I, ideal(0_S))
        peek MS
        """)
