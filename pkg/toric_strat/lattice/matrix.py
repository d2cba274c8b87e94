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

"""Dense matrices of arbitrary-precision integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix. Entries are Python ints, so there is no
    overflow; ``ncols`` is stored explicitly so that matrices with no rows
    still know their width."""

    entries: Tuple[Tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        assert self.ncols >= 0, self.ncols
        for row in self.entries:
            assert len(row) == self.ncols, (row, self.ncols)

    @classmethod
    def from_rows(
        cls, rows: Iterable[Sequence[int]], ncols: Optional[int] = None
    ) -> IntMatrix:
        rows = tuple(tuple(int(entry) for entry in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("cannot infer the width of a matrix with no rows")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(
            tuple(
                tuple(int(i == j) for j in range(size)) for i in range(size)
            ),
            size,
        )

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        (i, j) = index
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self, indices: Iterable[int]) -> IntMatrix:
        """Sub-matrix made of the given columns, in the given order."""
        indices = list(indices)
        return IntMatrix(
            tuple(tuple(row[j] for j in indices) for row in self.entries),
            len(indices),
        )

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            tuple(self.column(j) for j in range(self.ncols)), self.nrows
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        other_columns = [other.column(j) for j in range(other.ncols)]
        return IntMatrix(
            tuple(
                tuple(sum(a * b for (a, b) in zip(row, col)) for col in other_columns)
                for row in self.entries
            ),
            other.ncols,
        )

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix(
            [[ZZ(entry) for entry in row] for row in self.entries], self.shape, ZZ
        )

    @classmethod
    def from_domain(cls, matrix: DomainMatrix) -> IntMatrix:
        (_, ncols) = matrix.shape
        return cls.from_rows(matrix.to_list(), ncols)

    def is_zero(self) -> bool:
        return all(entry == 0 for row in self.entries for entry in row)

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def to_json(self) -> List[List[str]]:
        """Arrays of decimal strings, so that no JSON reader truncates
        large entries."""
        return [[str(entry) for entry in row] for row in self.entries]

    def __str__(self) -> str:
        if not self.entries:
            return f"[] (0x{self.ncols})"
        width = max(len(str(entry)) for row in self.entries for entry in row)
        return "\n".join(
            "[" + " ".join(str(entry).rjust(width) for entry in row) + "]"
            for row in self.entries
        )
