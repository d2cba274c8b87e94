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

"""Hermite and Smith normal forms of integer matrices.

Smith forms, ranks and determinants come from sympy's ``DomainMatrix`` over
``ZZ``. The row Hermite form is computed here, because its unimodular
transform is needed and sympy only returns the form itself."""

from __future__ import annotations

import logging
from typing import List, NamedTuple, Tuple

from sympy.polys.matrices.normalforms import smith_normal_decomp

from .matrix import IntMatrix


logger = logging.getLogger(__name__)

_Rows = List[List[int]]


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Returns ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``.

    If ``a`` divides ``b``, ``y`` is 0, so that eliminating ``b`` with
    ``a`` leaves the row of ``a`` untouched (up to sign)."""
    if a != 0 and b % a == 0:
        return (abs(a), 1 if a > 0 else -1, 0)
    (old_r, r) = (a, b)
    (old_x, x) = (1, 0)
    (old_y, y) = (0, 1)
    while r != 0:
        q = old_r // r
        (old_r, r) = (r, old_r - q * r)
        (old_x, x) = (x, old_x - q * x)
        (old_y, y) = (y, old_y - q * y)
    if old_r < 0:
        (old_r, old_x, old_y) = (-old_r, -old_x, -old_y)
    return (old_r, old_x, old_y)


def _identity(size: int) -> _Rows:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def _combine_rows(rows: _Rows, i: int, j: int, x: int, y: int, u: int, v: int) -> None:
    # (row_i, row_j) <- (x*row_i + y*row_j, u*row_i + v*row_j)
    (row_i, row_j) = (rows[i], rows[j])
    rows[i] = [x * a + y * b for (a, b) in zip(row_i, row_j)]
    rows[j] = [u * a + v * b for (a, b) in zip(row_i, row_j)]


def _eliminate_rows(rows: _Rows, transform: _Rows, p: int, i: int, col: int) -> None:
    """Replaces rows[p][col] by the gcd of rows[p][col] and rows[i][col], and
    rows[i][col] by zero."""
    (a, b) = (rows[p][col], rows[i][col])
    (g, x, y) = extended_gcd(a, b)
    _combine_rows(rows, p, i, x, y, -b // g, a // g)
    _combine_rows(transform, p, i, x, y, -b // g, a // g)


def row_echelon(matrix: IntMatrix) -> Tuple[_Rows, _Rows, List[int]]:
    """Row Hermite normal form as mutable lists.

    Returns ``(H, U, pivots)`` where ``U @ matrix == H`` and ``pivots`` are
    the pivot columns of the nonzero rows of ``H``."""
    h = matrix.to_lists()
    nrows = matrix.nrows
    u = _identity(nrows)
    pivots = []
    p = 0
    for col in range(matrix.ncols):
        if p == nrows:
            break
        for i in range(p + 1, nrows):
            if h[i][col] != 0:
                _eliminate_rows(h, u, p, i, col)
        if h[p][col] == 0:
            # nothing at or below p in this column
            continue
        if h[p][col] < 0:
            h[p] = [-entry for entry in h[p]]
            u[p] = [-entry for entry in u[p]]
        for i in range(p):
            q = h[i][col] // h[p][col]
            if q:
                h[i] = [a - q * b for (a, b) in zip(h[i], h[p])]
                u[i] = [a - q * b for (a, b) in zip(u[i], u[p])]
        pivots.append(col)
        p += 1
    return (h, u, pivots)


def hnf(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form: returns ``(H, U)`` with ``U`` unimodular,
    ``U @ matrix == H``, positive pivots and entries above each pivot
    reduced into ``[0, pivot)``. Zero rows are kept at the bottom."""
    (h, u, _) = row_echelon(matrix)
    result = (
        IntMatrix.from_rows(h, matrix.ncols),
        IntMatrix.from_rows(u, matrix.nrows),
    )
    assert result[1] @ matrix == result[0]
    return result


def row_lattice_basis(matrix: IntMatrix) -> IntMatrix:
    """Nonzero rows of the Hermite normal form: the canonical basis of the
    lattice spanned by the rows."""
    (h, _, pivots) = row_echelon(matrix)
    return IntMatrix.from_rows(h[: len(pivots)], matrix.ncols)


def rank(matrix: IntMatrix) -> int:
    if 0 in matrix.shape:
        return 0
    return matrix.to_domain().rank()


def determinant(matrix: IntMatrix) -> int:
    if matrix.nrows != matrix.ncols:
        raise ValueError(f"determinant of non-square matrix {matrix.shape}")
    if matrix.nrows == 0:
        return 1
    return int(matrix.to_domain().det())


class SmithForm(NamedTuple):
    """``U @ M @ W == S`` with ``S`` diagonal and ``S[i][i]`` dividing
    ``S[i+1][i+1]``."""

    S: IntMatrix
    U: IntMatrix
    W: IntMatrix

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        diagonal = (self.S[i, i] for i in range(min(self.S.shape)))
        return tuple(d for d in diagonal if d != 0)


def snf(matrix: IntMatrix) -> SmithForm:
    (nrows, ncols) = matrix.shape
    if 0 in matrix.shape:
        return SmithForm(matrix, IntMatrix.identity(nrows), IntMatrix.identity(ncols))
    (s, u, w) = (
        IntMatrix.from_domain(part).to_lists()
        for part in smith_normal_decomp(matrix.to_domain())
    )
    for i in range(min(nrows, ncols)):
        if s[i][i] < 0:
            s[i] = [-entry for entry in s[i]]
            u[i] = [-entry for entry in u[i]]
    form = SmithForm(
        IntMatrix.from_rows(s, ncols),
        IntMatrix.from_rows(u, nrows),
        IntMatrix.from_rows(w, ncols),
    )
    assert form.U @ matrix @ form.W == form.S
    logger.debug("invariant factors of %sx%s matrix: %s", nrows, ncols, form.invariant_factors)
    return form
