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

"""Sampling the torus of a toric variety through its monomial
parametrization, and numeric checks at the sampled points."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import List, Optional, Sequence

import numpy as np

from ..ideal import Field, ProblemSpec, Sign
from ..lattice import IntMatrix, PointConfiguration, rank


logger = logging.getLogger(__name__)


class VerificationError(Exception):
    pass


class SignUnsupported(VerificationError):
    pass


class RankMismatch(VerificationError):
    def __init__(self, message: str, sample: Optional[TorusSample] = None):
        super().__init__(message)
        self.sample = sample


@dataclass(frozen=True)
class Tolerances:
    residual: float = 1e-9
    rank: float = 1e-8
    """Singular values below ``rank`` times the largest one count as zero."""

    sample_low: float = 0.5
    sample_high: float = 2.0
    samples: int = 100
    samples_per_component: int = 50


@dataclass(frozen=True, eq=False)
class TorusSample:
    t: np.ndarray
    y: np.ndarray
    residuals: np.ndarray
    """One entry per generator with sign ``-``."""

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max(initial=0.0))


def as_array(config: PointConfiguration) -> np.ndarray:
    return np.array(config.matrix.entries, dtype=float).reshape(config.matrix.shape)


def check_signs(spec: ProblemSpec) -> None:
    if spec.field is Field.NONNEGATIVE_REALS and any(g.sign is Sign.PLUS for g in spec.gens):
        raise SignUnsupported(
            "a generator y^l + y^k has no zero with positive coordinates"
        )


def minus_generators(spec: ProblemSpec):
    return [g for g in spec.gens if g.sign is Sign.MINUS]


def generator_residuals(spec: ProblemSpec, y: np.ndarray) -> np.ndarray:
    """``|y^l - y^k|`` relative to the larger monomial, for every generator
    with sign ``-``. Zero when both monomials vanish."""
    residuals = []
    for generator in minus_generators(spec):
        lead = np.prod(y ** np.array(generator.lead))
        trail = np.prod(y ** np.array(generator.trail))
        scale = max(abs(lead), abs(trail))
        residuals.append(abs(lead - trail) / scale if scale > 0 else 0.0)
    return np.array(residuals, dtype=float)


def numeric_rank(matrix: np.ndarray, tolerance: float) -> int:
    if matrix.size == 0:
        return 0
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values[0] == 0:
        return 0
    return int(np.sum(singular_values > tolerance * singular_values[0]))


def log_uniform(rng: np.random.Generator, size: int, tolerances: Tolerances) -> np.ndarray:
    """``log t`` for ``t`` log-uniform in the sampling box."""
    return rng.uniform(np.log(tolerances.sample_low), np.log(tolerances.sample_high), size)


def evaluate(spec: ProblemSpec, a: np.ndarray, log_t: np.ndarray) -> TorusSample:
    y = np.exp(a.T @ log_t)
    return TorusSample(np.exp(log_t), y, generator_residuals(spec, y))


def sample_torus(
    spec: ProblemSpec,
    config: PointConfiguration,
    count: int,
    seed: int = 0,
    tolerances: Tolerances = Tolerances(),
) -> List[TorusSample]:
    """Images of ``count`` random points of the positive torus."""
    check_signs(spec)
    rng = np.random.default_rng(seed)
    a = as_array(config)
    samples = [evaluate(spec, a, log_uniform(rng, config.nu, tolerances)) for _ in range(count)]
    logger.debug(
        "%s torus samples, worst residual %.3g",
        count, max((s.max_residual for s in samples), default=0.0),
    )
    return samples


def jacobian(spec: ProblemSpec, y: np.ndarray) -> np.ndarray:
    """Jacobian of the generators with sign ``-`` at ``y``, each row scaled
    by the larger monomial."""
    rows = []
    for generator in minus_generators(spec):
        (lead, trail) = (np.array(generator.lead), np.array(generator.trail))
        lead_value = np.prod(y ** lead)
        trail_value = np.prod(y ** trail)
        row = (lead * lead_value - trail * trail_value) / y
        rows.append(row / max(lead_value, trail_value))
    return np.array(rows, dtype=float).reshape(len(rows), len(y))


def image_differential(a: np.ndarray, y: np.ndarray, columns: Sequence[int]) -> np.ndarray:
    """Differential of ``log t -> (y_j)_{j in columns}``."""
    columns = list(columns)
    return y[columns][:, None] * a[:, columns].T


@dataclass(frozen=True)
class JacobianReport:
    expected_rank: int
    expected_image_rank: int
    samples: int


def jacobian_rank_check(
    spec: ProblemSpec,
    config: PointConfiguration,
    samples: Sequence[TorusSample],
    image_dim: int,
    tolerances: Tolerances = Tolerances(),
) -> JacobianReport:
    """Checks at every sample that the Jacobian of the generators has the
    rank of their exponent matrix, and that the projection to the
    parameters has rank ``image_dim``."""
    minus = minus_generators(spec)
    expected = rank(IntMatrix.from_rows((g.difference for g in minus), len(spec.names)))
    a = as_array(config)
    for sample in samples:
        found = numeric_rank(jacobian(spec, sample.y), tolerances.rank)
        if found != expected:
            raise RankMismatch(
                f"Jacobian has rank {found} instead of {expected} at y={sample.y}", sample
            )
        found = numeric_rank(
            image_differential(a, sample.y, config.param_indices), tolerances.rank
        )
        if found != image_dim:
            raise RankMismatch(
                f"projection has rank {found} instead of {image_dim} at y={sample.y}", sample
            )
    return JacobianReport(expected, image_dim, len(samples))
