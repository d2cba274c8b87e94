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

"""Concrete syntax of problem files.

A document is a sequence of statements separated by newlines or ``;``;
``#`` starts a comment running to the end of the line. Each statement is
parsed on its own by a small Tatsu grammar::

    field: complex
    vars: x1 x2
    params: c
    gens: c*x2^2 - x1^2
"""

from __future__ import annotations

from dataclasses import dataclass
import enum
from typing import Iterator, List, Optional, Tuple, Union

import tatsu
from tatsu.exceptions import FailedParse


class IdealParseError(Exception):
    """Base class of every error raised while reading a problem file."""


class IdealSyntaxError(IdealParseError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            position = f"{line}:{column}" if column is not None else f"{line}"
            message = f"{position}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


GRAMMAR = r"""
@@grammar :: ToricInput
@@whitespace :: /[\t ]+/

start = @:statement $ ;

statement
    =
    | symbols
    | generators
    | field
    | continuation
    ;

symbols = kind:('vars' | 'params') ':' ~ names:{ name } ;

generators = 'gens' ':' ~ polynomials:','.{ polynomial } ;

field = 'field' ':' ~ value:('complex' | 'nonnegative-reals') ;

continuation = polynomials:','.{ polynomial }+ ;

polynomial = lead_sign:[ sign ] first:term rest:{ signed_term } ;

signed_term = sign:sign term:term ;

sign = '+' | '-' ;

term = factors:'*'.{ factor }+ ;

factor = coefficient | power ;

power = name:name [ '^' ~ exponent:exponent ] ;

name = /[A-Za-z_][A-Za-z0-9_]*/ ;

coefficient = /[0-9]+/ ;

exponent = /[1-9][0-9]*/ ;
"""


class SymbolKind(enum.Enum):
    VARS = "vars"
    PARAMS = "params"


@dataclass(frozen=True)
class Power:
    name: str
    exponent: int


@dataclass(frozen=True)
class Term:
    coefficient: int
    powers: Tuple[Power, ...]


@dataclass(frozen=True)
class Polynomial:
    terms: Tuple[Term, ...]


@dataclass(frozen=True)
class SymbolDeclaration:
    kind: SymbolKind
    names: Tuple[str, ...]


@dataclass(frozen=True)
class GeneratorsDeclaration:
    polynomials: Tuple[Polynomial, ...]


@dataclass(frozen=True)
class FieldDeclaration:
    value: str


@dataclass(frozen=True)
class Continuation:
    """Polynomials on a line of their own, after ``gens:``."""

    polynomials: Tuple[Polynomial, ...]


Statement = Union[SymbolDeclaration, GeneratorsDeclaration, FieldDeclaration, Continuation]


class Semantics:
    def symbols(self, ast):
        return SymbolDeclaration(SymbolKind(ast.kind), tuple(ast.names or ()))

    def generators(self, ast):
        return GeneratorsDeclaration(tuple(ast.polynomials or ()))

    def field(self, ast):
        return FieldDeclaration(ast.value)

    def continuation(self, ast):
        return Continuation(tuple(ast.polynomials))

    def polynomial(self, ast):
        first = ast.first
        if ast.lead_sign == "-":
            first = Term(-first.coefficient, first.powers)
        return Polynomial((first, *(ast.rest or ())))

    def signed_term(self, ast):
        term = ast.term
        if ast.sign == "-":
            term = Term(-term.coefficient, term.powers)
        return term

    def term(self, ast):
        coefficient = 1
        powers = []
        for factor in ast.factors:
            match factor:
                case int(value):
                    coefficient *= value
                case Power():
                    powers.append(factor)
                case _:
                    assert False, factor
        return Term(coefficient, tuple(powers))

    def power(self, ast):
        return Power(ast.name, ast.exponent or 1)

    def coefficient(self, ast):
        return int(ast)

    def exponent(self, ast):
        return int(ast)


_parser = tatsu.compile(GRAMMAR)


def _split(text: str) -> Iterator[Tuple[int, int, str]]:
    """Yields ``(line, column, source)`` for each nonblank statement, with
    1-based positions."""
    for (line_number, line) in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        column = 0
        for chunk in line.split(";"):
            stripped = chunk.strip()
            if stripped:
                yield (line_number, column + chunk.index(stripped) + 1, stripped)
            column += len(chunk) + 1


def parse_statement(source: str, line: int = 1, column: int = 1) -> Statement:
    try:
        return _parser.parse(source, semantics=Semantics(), rule_name="start")
    except FailedParse as e:
        offset = getattr(e, "pos", 0) or 0
        raise IdealSyntaxError(
            f"cannot parse {source!r}", line=line, column=column + offset
        ) from None


def parse_statements(text: str) -> List[Tuple[int, Statement]]:
    """Parses every statement of a document, returning them with their line
    numbers."""
    return [
        (line, parse_statement(source, line, column))
        for (line, column, source) in _split(text)
    ]
