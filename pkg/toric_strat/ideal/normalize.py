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

"""Turns parsed polynomials into normalized binomial generators."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
import enum
import logging
from typing import Dict, List, Sequence, Tuple

from .syntax import IdealParseError, Polynomial, Term


logger = logging.getLogger(__name__)


class NotBinomial(IdealParseError):
    pass


class NonUnitCoefficient(IdealParseError):
    pass


class UndeclaredSymbol(IdealParseError):
    pass


class Sign(enum.Enum):
    MINUS = "-"
    PLUS = "+"


@dataclass(frozen=True)
class Generator:
    """The binomial ``y^lead - y^trail`` (or ``+``), exponents in
    coordinate order: variables first, then parameters."""

    lead: Tuple[int, ...]
    trail: Tuple[int, ...]
    sign: Sign

    def __post_init__(self):
        assert self.lead != self.trail, self
        assert all(a >= 0 for a in self.lead + self.trail), self

    @property
    def difference(self) -> Tuple[int, ...]:
        return tuple(a - b for (a, b) in zip(self.lead, self.trail))


def format_monomial(exponents: Sequence[int], names: Sequence[str]) -> str:
    factors = [
        name if exponent == 1 else f"{name}^{exponent}"
        for (name, exponent) in zip(names, exponents)
        if exponent
    ]
    return "*".join(factors) or "1"


def format_binomial(
    lead: Sequence[int], trail: Sequence[int], sign: Sign, names: Sequence[str]
) -> str:
    return f"{format_monomial(lead, names)} {sign.value} {format_monomial(trail, names)}"


def _exponents(term: Term, index: Dict[str, int], line: int) -> Tuple[int, ...]:
    counts: Counter = Counter()
    for power in term.powers:
        if power.name not in index:
            raise UndeclaredSymbol(f"line {line}: undeclared symbol {power.name!r}")
        counts[index[power.name]] += power.exponent
    return tuple(counts[i] for i in range(len(index)))


def normalize_polynomial(
    polynomial: Polynomial, index: Dict[str, int], line: int, log: List[str]
) -> Generator:
    """Normalizes a polynomial into a binomial with coefficients 1 and ±1
    and coprime monomials. ``index`` maps symbol names to coordinates;
    normalization events are appended to ``log``."""
    terms = list(polynomial.terms)
    if len(terms) != 2 or any(term.coefficient == 0 for term in terms):
        raise NotBinomial(f"line {line}: expected two monomials, got {len(terms)} terms")
    (lead, trail) = (_exponents(term, index, line) for term in terms)
    if lead == trail:
        raise NotBinomial(f"line {line}: both terms have the same monomial")

    (a, b) = (terms[0].coefficient, terms[1].coefficient)
    if abs(a) != abs(b):
        raise NonUnitCoefficient(
            f"line {line}: coefficients {a} and {b} do not reduce to ±1"
        )
    sign = Sign.MINUS if a * b < 0 else Sign.PLUS
    names = list(index)
    if abs(a) != 1 or a < 0:
        message = f"line {line}: divided by coefficient {a}"
        logger.debug(message)
        log.append(message)

    common = tuple(min(l, k) for (l, k) in zip(lead, trail))
    if any(common):
        lead = tuple(l - c for (l, c) in zip(lead, common))
        trail = tuple(k - c for (k, c) in zip(trail, common))
        message = f"line {line}: removed common factor {format_monomial(common, names)}"
        logger.debug(message)
        log.append(message)

    return Generator(lead, trail, sign)
