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

"""Fibers of the projection over the dense stratum of the parameter space:
transport between fibers by rescaling, and fiber counts."""

from __future__ import annotations

from dataclasses import dataclass
import itertools
import logging
import math
from typing import Optional, Sequence

import numpy as np

from ..ideal import Field, ProblemSpec
from ..lattice import PointConfiguration, kernel_basis, rank, snf
from .sampling import (
    Tolerances,
    VerificationError,
    as_array,
    check_signs,
    generator_residuals,
    log_uniform,
)


logger = logging.getLogger(__name__)


class NotInImage(VerificationError):
    pass


class Inconsistent(VerificationError):
    pass


class RankDeficient(VerificationError):
    pass


@dataclass(frozen=True, eq=False)
class TransportResult:
    source: np.ndarray
    target: np.ndarray
    scaling: np.ndarray
    """``x -> scaling * x`` maps the fiber over ``source`` to the fiber over
    ``target``."""

    max_residual: float
    samples: int


def _log_parameters(values: Sequence[float], m: int) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.shape != (m,):
        raise NotInImage(f"expected {m} parameter values, got {values.tolist()}")
    if not np.all(values > 0):
        raise NotInImage(f"{values.tolist()} is not in the positive torus")
    return np.log(values)


def _preimage(param_matrix: np.ndarray, log_c: np.ndarray, tolerances: Tolerances) -> np.ndarray:
    """Some ``log t`` with ``t^B == c``, where ``B`` is ``param_matrix``."""
    (log_t, *_) = np.linalg.lstsq(param_matrix.T, log_c, rcond=None)
    error = np.abs(param_matrix.T @ log_t - log_c).max(initial=0.0)
    if error > tolerances.residual * max(1.0, np.abs(log_c).max(initial=0.0)):
        raise NotInImage(f"{np.exp(log_c).tolist()} is not the image of a torus point")
    return log_t


def _null_space(matrix: np.ndarray, tolerances: Tolerances) -> np.ndarray:
    """Orthonormal basis (as columns) of the null space of ``matrix``."""
    (_, singular_values, vt) = np.linalg.svd(matrix)
    if singular_values.size and singular_values[0] > 0:
        kept = int(np.sum(singular_values > tolerances.rank * singular_values[0]))
    else:
        kept = 0
    return vt[kept:].T


def fiber_transport(
    spec: ProblemSpec,
    config: PointConfiguration,
    source: Sequence[float],
    target: Sequence[float],
    seed: int = 0,
    samples: int = 10,
    tolerances: Tolerances = Tolerances(),
) -> TransportResult:
    """Finds ``s`` with ``s^u == (source / target)^v`` for every relation
    ``(u, v)`` between the points, which makes ``x -> s * x`` send the
    fiber over ``source`` onto the fiber over ``target``; then checks it on
    ``samples`` points of the source fiber."""
    check_signs(spec)
    if spec.m == 0:
        raise NotInImage("there are no parameters to transport along")
    a = as_array(config)
    n = config.n_vars
    param_matrix = a[:, n:]
    log_source = _log_parameters(source, spec.m)
    log_target = _log_parameters(target, spec.m)
    log_t = _preimage(param_matrix, log_source, tolerances)
    _preimage(param_matrix, log_target, tolerances)

    relations = np.array(
        kernel_basis(config.matrix).matrix.entries, dtype=float
    ).reshape(-1, config.size)
    (u, v) = (relations[:, :n], relations[:, n:])
    rhs = v @ (log_source - log_target)
    (log_s, *_) = np.linalg.lstsq(u, rhs, rcond=None) if u.size else (np.zeros(n),)
    error = np.abs(u @ log_s - rhs).max(initial=0.0)
    if error > tolerances.residual * max(1.0, np.abs(rhs).max(initial=0.0)):
        raise Inconsistent(
            f"no rescaling maps the fiber over {list(source)} to the one over {list(target)}"
        )
    scaling = np.exp(log_s)

    rng = np.random.default_rng(seed)
    directions = _null_space(param_matrix.T, tolerances)
    worst = 0.0
    for _ in range(samples):
        offset = directions @ log_uniform(rng, directions.shape[1], tolerances)
        x = np.exp(a[:, :n].T @ (log_t + offset))
        moved = np.concatenate([scaling * x, np.exp(log_target)])
        worst = max(worst, float(generator_residuals(spec, moved).max(initial=0.0)))
    logger.debug("transport %s -> %s: s=%s, residual %.3g", source, target, scaling, worst)
    return TransportResult(
        np.exp(log_source), np.exp(log_target), scaling, worst, samples
    )


def _parameter_matrix(config: PointConfiguration):
    return config.matrix.columns(config.param_indices)


def fiber_count(spec: ProblemSpec, config: PointConfiguration) -> Optional[int]:
    """Number of points over a generic parameter value, when the projection
    is proper (``nu <= m``); ``None`` otherwise."""
    if config.nu > spec.m:
        return None
    params = _parameter_matrix(config)
    if rank(params) < config.nu:
        raise RankDeficient(
            "the parameter columns do not have full rank: fibers are not finite"
        )
    if spec.field is Field.NONNEGATIVE_REALS:
        return 1
    return math.prod(snf(params).invariant_factors)


def torus_roots(config: PointConfiguration, values: Sequence[complex]) -> np.ndarray:
    """Every ``t`` in the complex torus with ``t^b_j == values[j]`` for the
    parameter columns ``b_j``, one per row. The parameter columns must have
    full rank and ``values`` must be in their image."""
    params = _parameter_matrix(config)
    nu = config.nu
    form = snf(params)
    factors = form.invariant_factors
    assert len(factors) == nu, factors
    # t = exp(U^T w) turns the system into w_l * d_l == (W^T log c)_l
    log_values = np.log(np.asarray(values, dtype=complex))
    w_matrix = np.array(form.W.entries, dtype=float).reshape(form.W.shape)
    u_matrix = np.array(form.U.entries, dtype=float).reshape(form.U.shape)
    transformed = w_matrix.T @ log_values
    roots = []
    for branches in itertools.product(*(range(d) for d in factors)):
        w = np.array(
            [(transformed[l] + 2j * np.pi * k) / d for (l, (k, d)) in enumerate(zip(branches, factors))],
            dtype=complex,
        )
        roots.append(np.exp(u_matrix.T @ w))
    return np.array(roots, dtype=complex).reshape(len(roots), nu)
