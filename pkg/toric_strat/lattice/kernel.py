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

"""Integer kernels and the point configuration of a toric variety."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Iterable, Optional, Sequence, Tuple

from .matrix import IntMatrix
from .normal_forms import row_lattice_basis, snf


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointConfiguration:
    """The ν×(n+m) matrix A whose columns a_1, ..., a_{n+m} are the lattice
    points of the configuration; the last m columns (the parameters) form
    the sub-configuration B."""

    matrix: IntMatrix
    labels: Tuple[str, ...]
    n_vars: int

    def __post_init__(self):
        assert len(self.labels) == self.matrix.ncols, (self.labels, self.matrix.shape)
        assert 0 <= self.n_vars <= self.matrix.ncols

    @property
    def nu(self) -> int:
        return self.matrix.nrows

    @property
    def size(self) -> int:
        return self.matrix.ncols

    @property
    def param_indices(self) -> range:
        return range(self.n_vars, self.size)

    @property
    def points(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.matrix.column(j) for j in range(self.size))

    @property
    def param_points(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.matrix.column(j) for j in self.param_indices)

    def transformed(self, unimodular: IntMatrix) -> PointConfiguration:
        """The same configuration presented by ``unimodular @ A``."""
        return PointConfiguration(unimodular @ self.matrix, self.labels, self.n_vars)


def _default_labels(size: int) -> Tuple[str, ...]:
    return tuple(f"y{i + 1}" for i in range(size))


def kernel_basis(
    relations: IntMatrix,
    labels: Optional[Sequence[str]] = None,
    n_vars: Optional[int] = None,
) -> PointConfiguration:
    """Canonical basis (Hermite normal form) of ``{z : relations @ z == 0}``,
    as the rows of the matrix of a point configuration."""
    size = relations.ncols
    # U @ relations @ W == S; the columns of W past the rank of S span the
    # integer kernel of relations.
    form = snf(relations)
    relation_rank = len(form.invariant_factors)
    kernel_rows = [form.W.column(j) for j in range(relation_rank, size)]
    if kernel_rows:
        matrix = row_lattice_basis(IntMatrix.from_rows(kernel_rows, size))
    else:
        matrix = IntMatrix.zeros(0, size)
    assert (relations @ matrix.transpose()).is_zero()
    assert matrix.nrows + relation_rank == size
    logger.debug(
        "kernel of %sx%s matrix of rank %s has dimension %s",
        relations.nrows, size, relation_rank, matrix.nrows,
    )
    return PointConfiguration(
        matrix=matrix,
        labels=tuple(labels) if labels is not None else _default_labels(size),
        n_vars=size if n_vars is None else n_vars,
    )


def is_saturated_rowlattice(matrix: IntMatrix) -> bool:
    """Whether the lattice spanned by the rows equals its saturation, ie.
    whether every nonzero invariant factor is 1."""
    return all(factor == 1 for factor in snf(matrix).invariant_factors)


def subconfig_kernel(config: PointConfiguration, support: Iterable[int]) -> IntMatrix:
    """Canonical basis of the relations ``z`` supported on ``support`` with
    ``sum(z_j * a_j) == 0``."""
    support = sorted(set(support))
    assert all(0 <= j < config.size for j in support), support
    if not support:
        return IntMatrix.zeros(0, config.size)
    local = kernel_basis(config.matrix.columns(support)).matrix
    embedded = []
    for row in local.entries:
        full = [0] * config.size
        for (j, value) in zip(support, row):
            full[j] = value
        embedded.append(full)
    return IntMatrix.from_rows(embedded, config.size)
