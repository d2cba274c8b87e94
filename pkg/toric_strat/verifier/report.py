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

"""Numeric verification of a stratification, reported check by check."""

from __future__ import annotations

from dataclasses import dataclass, field
import enum
import logging
from typing import Dict, List, Optional

import numpy as np

from ..ideal import Field, Sign
from ..stratifier import OrbitComponent, Stratification
from .fibers import RankDeficient, fiber_count, fiber_transport, torus_roots
from .sampling import (
    RankMismatch,
    SignUnsupported,
    Tolerances,
    VerificationError,
    as_array,
    check_signs,
    generator_residuals,
    image_differential,
    jacobian_rank_check,
    log_uniform,
    minus_generators,
    numeric_rank,
    sample_torus,
)


logger = logging.getLogger(__name__)

NO_MINUS = "no generator of the form y^l - y^k to evaluate"


class CheckStatus(enum.Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass
class CheckResult:
    name: str
    status: CheckStatus
    worst_residual: Optional[float] = None
    samples: int = 0
    detail: str = ""

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "status": self.status.value,
            "worst_residual": self.worst_residual,
            "samples": self.samples,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.status is not CheckStatus.FAILED for check in self.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if check.status is CheckStatus.FAILED]

    def add(self, name, passed: bool, worst_residual=None, samples=0, detail="") -> None:
        status = CheckStatus.PASSED if passed else CheckStatus.FAILED
        self.checks.append(CheckResult(name, status, worst_residual, samples, detail))
        if not passed:
            logger.warning("check %r failed: %s", name, detail)

    def skip(self, name: str, detail: str) -> None:
        self.checks.append(CheckResult(name, CheckStatus.SKIPPED, detail=detail))

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    def to_json(self) -> Dict:
        return {"passed": self.passed, "checks": [check.to_json() for check in self.checks]}


def _component_name(strat: Stratification, component: OrbitComponent) -> str:
    zeros = ",".join(strat.config.labels[j] for j in component.zero_set)
    return f"component {{{zeros}}}"


def _records_of(strat: Stratification, component: OrbitComponent):
    support = set(component.nonzero_set)
    return [r for r in strat.face_table if not r.empty and support <= set(r.face.incidence)]


def verify_component(
    strat: Stratification,
    component: OrbitComponent,
    rng: np.random.Generator,
    tolerances: Tolerances,
) -> VerificationReport:
    spec = strat.spec
    config = strat.config
    a = as_array(config)
    nonzero = list(component.nonzero_set)
    name = _component_name(strat, component)
    report = VerificationReport()
    count = tolerances.samples_per_component

    worst = 0.0
    patterns = set()
    ranks = set()
    for _ in range(count):
        log_t = log_uniform(rng, config.nu, tolerances)
        y = np.zeros(config.size)
        y[nonzero] = np.exp(a[:, nonzero].T @ log_t)
        worst = max(worst, float(generator_residuals(spec, y).max(initial=0.0)))
        patterns.add(tuple(int(j) for j in np.flatnonzero(y[config.n_vars:])))
        ranks.add(numeric_rank(image_differential(a, y, nonzero), tolerances.rank))

    if minus_generators(spec):
        report.add(
            f"{name}: generators",
            worst <= tolerances.residual,
            worst,
            count,
            f"worst relative residual {worst:.3g}",
        )
    else:
        report.skip(f"{name}: generators", NO_MINUS)

    image = component.image.incidence
    contained = all(
        any(set(image) <= set(y.nonzero_set) for y in record.y_components)
        for record in _records_of(strat, component)
    )
    report.add(
        f"{name}: image zero pattern",
        patterns == {image} and contained,
        samples=count,
        detail=f"parameter nonzero patterns {sorted(patterns)}, expected {image}",
    )
    report.add(
        f"{name}: dimension",
        ranks == {component.dim},
        samples=count,
        detail=f"numeric ranks {sorted(ranks)}, expected {component.dim}",
    )
    return report


def verify_stratification(
    strat: Stratification, seed: int = 0, tolerances: Tolerances = Tolerances()
) -> VerificationReport:
    """Samples every orbit component through its own parametrization, and
    checks that the samples lie on the variety, project onto the expected
    image stratum, and have the expected dimension."""
    check_signs(strat.spec)
    components = strat.x_components()
    streams = np.random.SeedSequence(seed).spawn(len(components))
    report = VerificationReport()
    for (component, stream) in zip(components, streams):
        report.extend(
            verify_component(strat, component, np.random.default_rng(stream), tolerances)
        )
    return report


def _transport_check(strat: Stratification, seed: int, tolerances: Tolerances, report: VerificationReport) -> None:
    config = strat.config
    rng = np.random.default_rng(seed)
    a = as_array(config)
    params = a[:, config.n_vars:]
    worst = 0.0
    for i in range(tolerances.samples):
        source = np.exp(params.T @ log_uniform(rng, config.nu, tolerances))
        target = np.exp(params.T @ log_uniform(rng, config.nu, tolerances))
        result = fiber_transport(strat.spec, config, source, target, seed=seed + i, tolerances=tolerances)
        worst = max(worst, result.max_residual)
    report.add(
        "fiber transport",
        worst <= tolerances.residual,
        worst,
        tolerances.samples,
        f"worst relative residual after rescaling {worst:.3g}",
    )


def _fiber_count_check(strat: Stratification, seed: int, report: VerificationReport) -> None:
    spec = strat.spec
    config = strat.config
    try:
        count = fiber_count(spec, config)
    except RankDeficient as e:
        report.add("fiber count", False, detail=str(e))
        return
    if count is None:
        report.skip("fiber count", f"nu={config.nu} > m={spec.m}: the projection is not proper")
        return
    if spec.field is Field.NONNEGATIVE_REALS:
        report.add("fiber count", count == 1, detail=f"{count} positive point(s) per fiber")
        return
    rng = np.random.default_rng(seed)
    params = as_array(config)[:, config.n_vars:]
    values = np.exp(params.T @ (rng.normal(size=config.nu) + 1j * rng.normal(size=config.nu)))
    roots = torus_roots(config, values)
    distinct = {tuple(np.round(root, 8)) for root in roots}
    solves = all(
        np.allclose(np.prod(root[:, None] ** params, axis=0), values) for root in roots
    )
    report.add(
        "fiber count",
        count == len(distinct) and solves,
        samples=1,
        detail=f"{count} points per fiber, {len(distinct)} torus roots found",
    )


def run_verification(
    strat: Stratification, seed: int = 0, tolerances: Tolerances = Tolerances()
) -> VerificationReport:
    """The whole numeric suite: torus samples, Jacobian ranks, transport
    between fibers, fiber counts and per-component checks."""
    report = VerificationReport()
    spec = strat.spec
    config = strat.config
    try:
        samples = sample_torus(spec, config, tolerances.samples, seed, tolerances)
    except SignUnsupported as e:
        report.skip("torus samples", str(e))
        return report

    if minus_generators(spec):
        worst = max((s.max_residual for s in samples), default=0.0)
        report.add(
            "torus samples", worst <= tolerances.residual, worst, len(samples),
            f"worst relative residual {worst:.3g}",
        )
    else:
        report.skip("torus samples", NO_MINUS)

    try:
        jacobian_rank_check(spec, config, samples, strat.face_table[-1].e, tolerances)
        report.add("jacobian rank", True, samples=len(samples))
    except RankMismatch as e:
        report.add("jacobian rank", False, samples=len(samples), detail=str(e))

    if spec.m == 0:
        report.skip("fiber transport", "no parameters")
    elif any(g.sign is Sign.PLUS for g in spec.gens):
        report.skip("fiber transport", "rescaling is only checked on binomials y^l - y^k")
    else:
        try:
            _transport_check(strat, seed, tolerances, report)
        except VerificationError as e:
            report.add("fiber transport", False, detail=str(e))

    _fiber_count_check(strat, seed, report)
    report.extend(verify_stratification(strat, seed, tolerances))
    logger.info(
        "verification: %s checks, %s failed", len(report.checks), len(report.failures())
    )
    return report
