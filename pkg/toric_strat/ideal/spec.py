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

"""Problem specifications: a parametric binomial ideal together with the
split of its coordinates into variables and parameters."""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
import enum
import hashlib
import importlib.resources
import json
import logging
from typing import Dict, List, Optional, Tuple

from ..lattice import IntMatrix
from .normalize import Generator, Sign, format_binomial, normalize_polynomial
from .syntax import (
    Continuation,
    FieldDeclaration,
    GeneratorsDeclaration,
    IdealParseError,
    IdealSyntaxError,
    Polynomial,
    Power,
    SymbolDeclaration,
    SymbolKind,
    Term,
    parse_statements,
)


logger = logging.getLogger(__name__)


class DuplicateSymbol(IdealParseError):
    pass


class Field(enum.Enum):
    COMPLEX = "complex"
    NONNEGATIVE_REALS = "nonnegative-reals"


@dataclass(frozen=True)
class ProblemSpec:
    vars: Tuple[str, ...]
    params: Tuple[str, ...]
    gens: Tuple[Generator, ...]
    field: Field = Field.COMPLEX
    normalization_log: Tuple[str, ...] = dataclass_field(default=(), compare=False)

    def __post_init__(self):
        assert self.vars, "at least one variable is required"
        assert len(set(self.names)) == len(self.names), self.names
        for generator in self.gens:
            assert len(generator.lead) == len(self.names), generator

    @property
    def names(self) -> Tuple[str, ...]:
        return self.vars + self.params

    @property
    def n(self) -> int:
        return len(self.vars)

    @property
    def m(self) -> int:
        return len(self.params)

    @property
    def r(self) -> int:
        return len(self.gens)

    def format_generator(self, generator: Generator) -> str:
        return format_binomial(generator.lead, generator.trail, generator.sign, self.names)


class _Section(enum.Enum):
    HEADER = enum.auto()
    GENS = enum.auto()


def _build(
    vars: Optional[List[str]],
    params: Optional[List[str]],
    polynomials: List[Tuple[int, Polynomial]],
    field: Field,
) -> ProblemSpec:
    if not vars:
        raise IdealSyntaxError("missing or empty 'vars' declaration")
    index: Dict[str, int] = {}
    for name in [*vars, *(params or [])]:
        if name in index:
            raise DuplicateSymbol(f"symbol {name!r} is declared twice")
        index[name] = len(index)
    log: List[str] = []
    gens = tuple(
        normalize_polynomial(polynomial, index, line, log)
        for (line, polynomial) in polynomials
    )
    spec = ProblemSpec(tuple(vars), tuple(params or ()), gens, field, tuple(log))
    logger.info(
        "parsed ideal with n=%s variables, m=%s parameters, r=%s generators",
        spec.n, spec.m, spec.r,
    )
    return spec


def parse_text(text: str) -> ProblemSpec:
    declared: Dict[SymbolKind, List[str]] = {}
    field: Optional[Field] = None
    polynomials: List[Tuple[int, Polynomial]] = []
    gens_declared = False
    section = _Section.HEADER

    for (line, statement) in parse_statements(text):
        match statement:
            case SymbolDeclaration(kind, names):
                if kind in declared:
                    raise DuplicateSymbol(f"line {line}: second '{kind.value}' declaration")
                declared[kind] = list(names)
                section = _Section.HEADER
            case FieldDeclaration(value):
                if field is not None:
                    raise IdealSyntaxError("second 'field' declaration", line=line)
                field = Field(value)
                section = _Section.HEADER
            case GeneratorsDeclaration(new_polynomials):
                if gens_declared:
                    raise IdealSyntaxError("second 'gens' declaration", line=line)
                gens_declared = True
                polynomials.extend((line, p) for p in new_polynomials)
                section = _Section.GENS
            case Continuation(new_polynomials):
                if section is not _Section.GENS:
                    raise IdealSyntaxError("polynomial outside of the 'gens' section", line=line)
                polynomials.extend((line, p) for p in new_polynomials)
            case _:
                assert False, statement

    return _build(
        declared.get(SymbolKind.VARS),
        declared.get(SymbolKind.PARAMS),
        polynomials,
        field or Field.COMPLEX,
    )


def _json_term(monomial, coefficient: int) -> Term:
    if not isinstance(monomial, dict):
        raise IdealSyntaxError(f"expected an object of exponents, got {monomial!r}")
    powers = []
    for (name, exponent) in monomial.items():
        if not isinstance(exponent, int) or exponent < 0:
            raise IdealSyntaxError(f"invalid exponent {exponent!r} for {name!r}")
        if exponent:
            powers.append(Power(name, exponent))
    return Term(coefficient, tuple(powers))


def parse_json(text: str) -> ProblemSpec:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise IdealSyntaxError(e.msg, line=e.lineno, column=e.colno) from None
    if not isinstance(document, dict):
        raise IdealSyntaxError("expected a JSON object")
    try:
        vars = list(document["vars"])
        params = list(document.get("params", []))
        field = Field(document.get("field", Field.COMPLEX.value))
        polynomials = []
        for (i, gen) in enumerate(document.get("gens", []), start=1):
            sign = Sign(gen.get("sign", "-"))
            trail_coefficient = -1 if sign is Sign.MINUS else 1
            polynomials.append(
                (
                    i,
                    Polynomial(
                        (
                            _json_term(gen["lead"], 1),
                            _json_term(gen["trail"], trail_coefficient),
                        )
                    ),
                )
            )
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise IdealSyntaxError(f"malformed JSON problem: {e}") from None
    if not all(isinstance(name, str) for name in vars + params):
        raise IdealSyntaxError("symbol names must be strings")
    return _build(vars, params, polynomials, field)


def parse_input(text: str) -> ProblemSpec:
    """Parses a problem file, in the text syntax or in its JSON form."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def exponent_matrix(spec: ProblemSpec) -> IntMatrix:
    """The r×(n+m) matrix whose rows are the exponent differences of the
    generators."""
    return IntMatrix.from_rows(
        (generator.difference for generator in spec.gens), len(spec.names)
    )


def render_spec(spec: ProblemSpec) -> str:
    lines = [
        f"field: {spec.field.value}",
        "vars: " + " ".join(spec.vars),
        "params: " + " ".join(spec.params),
        "gens:",
    ]
    lines.extend(spec.format_generator(generator) for generator in spec.gens)
    return "\n".join(line.rstrip() for line in lines) + "\n"


def spec_digest(spec: ProblemSpec) -> str:
    return hashlib.sha256(render_spec(spec).encode()).hexdigest()


BENCHMARKS = ("I1", "I2", "I3", "I4", "I5", "empty")


def load_benchmark(name: str) -> ProblemSpec:
    """One of the problems bundled with the package, see ``BENCHMARKS``."""
    if name not in BENCHMARKS:
        raise ValueError(f"unknown benchmark {name!r}")
    resource = importlib.resources.files("toric_strat") / "data" / f"{name}.toric"
    return parse_input(resource.read_text(encoding="utf-8"))
