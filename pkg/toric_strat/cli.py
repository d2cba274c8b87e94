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

"""Command-line front end.

``python -m toric_strat <command> <input>`` where ``<input>`` is a ``.toric``
file, a JSON document, ``-`` for stdin, or ``@NAME`` for a bundled benchmark.
"""

from __future__ import annotations

import argparse
import enum
import logging
import sys
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .export import lattice_to_dot, m2_script
from .ideal import IdealParseError, ProblemSpec, load_benchmark, parse_input
from .polyhedral import DegenerateInput
from .render import render_lattices, render_report, render_stratification, render_transport
from .stratifier import NotSaturated, Stratification, configuration, stratify
from .verifier import Tolerances, VerificationError, fiber_transport, run_verification

logger = logging.getLogger(__name__)


class ExitCode(enum.IntEnum):
    OK = 0
    PARSE = 2
    NOT_SATURATED = 3
    VERIFICATION = 4
    USAGE = 5


class Command(enum.Enum):
    STRATIFY = "stratify"
    FACES = "faces"
    VERIFY = "verify"
    TRANSPORT = "transport"
    EXPORT_M2 = "export-m2"
    EXPORT_DOT = "export-dot"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: Command
    input: str = "-"
    json_output: bool = False
    seed: int = 0
    force_saturate: bool = False
    tolerances: Tolerances = field(default_factory=Tolerances)
    threads: int = 1
    source: Optional[Tuple[float, ...]] = None
    target: Optional[Tuple[float, ...]] = None
    lattice: str = "polytope"
    output: str = "-"
    export_m2: Optional[str] = None
    export_dot: Optional[str] = None
    verbosity: int = 0


class RunResult(NamedTuple):
    status: ExitCode
    output: str
    message: str = ""


def read_input_file(filename: str) -> str:
    if filename == "-":
        return sys.stdin.read()
    else:
        with open(filename, "rt", encoding="utf-8") as fd:
            return fd.read()


def write_output_file(filename: str, s: str) -> None:
    if filename == "-":
        sys.stdout.write(s)
    else:
        with open(filename, "wt", encoding="utf-8", newline="\n") as fd:
            fd.write(s)


def _lattice(strat: Stratification, name: str):
    match name:
        case "polytope":
            return strat.polytope
        case "cone":
            return strat.cone
        case "parameter-cone":
            return strat.parameter_cone
        case _:
            raise UsageError(f"unknown lattice {name!r}")


def _transport(config: RunConfig, spec: ProblemSpec) -> RunResult:
    if config.source is None or config.target is None:
        raise UsageError("transport needs both --from and --to")
    result = fiber_transport(
        spec,
        configuration(spec, config.force_saturate),
        config.source,
        config.target,
        seed=config.seed,
        tolerances=config.tolerances,
    )
    output = render_transport(result, config.json_output)
    if result.max_residual > config.tolerances.residual:
        return RunResult(
            ExitCode.VERIFICATION,
            output,
            f"transported points leave the fiber (residual {result.max_residual:.3g})",
        )
    return RunResult(ExitCode.OK, output)


def _dispatch(config: RunConfig, spec: ProblemSpec) -> RunResult:
    match config.command:
        case Command.EXPORT_M2:
            return RunResult(ExitCode.OK, m2_script(spec))
        case Command.TRANSPORT:
            return _transport(config, spec)
    strat = stratify(spec, config.force_saturate, config.threads)
    if config.export_m2 is not None:
        write_output_file(config.export_m2, m2_script(spec))
    if config.export_dot is not None:
        write_output_file(config.export_dot, lattice_to_dot(_lattice(strat, config.lattice)))
    match config.command:
        case Command.STRATIFY:
            return RunResult(ExitCode.OK, render_stratification(strat, config.json_output))
        case Command.FACES:
            return RunResult(ExitCode.OK, render_lattices(strat, config.json_output))
        case Command.EXPORT_DOT:
            return RunResult(ExitCode.OK, lattice_to_dot(_lattice(strat, config.lattice)))
        case Command.VERIFY:
            report = run_verification(strat, config.seed, config.tolerances)
            output = render_report(report, config.json_output)
            if not report.passed:
                names = ", ".join(check.name for check in report.failures())
                return RunResult(ExitCode.VERIFICATION, output, f"failed checks: {names}")
            return RunResult(ExitCode.OK, output)
    raise AssertionError(config.command)


def load_document(config: RunConfig, document: str) -> ProblemSpec:
    if config.input.startswith("@"):
        try:
            return load_benchmark(config.input[1:])
        except ValueError as e:
            raise UsageError(str(e)) from None
    return parse_input(document)


def run(config: RunConfig, document: str) -> RunResult:
    """Runs one command on an input document. Errors of the pipeline are
    turned into exit statuses, never raised."""
    logger.info("%s %s", config.command.value, config.input)
    try:
        spec = load_document(config, document)
        return _dispatch(config, spec)
    except IdealParseError as e:
        return RunResult(ExitCode.PARSE, "", str(e))
    except NotSaturated as e:
        return RunResult(ExitCode.NOT_SATURATED, "", str(e))
    except VerificationError as e:
        return RunResult(ExitCode.VERIFICATION, "", str(e))
    except (UsageError, DegenerateInput, OSError) as e:
        return RunResult(ExitCode.USAGE, "", str(e))


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"error: {message}\n")


def _vector(text: str) -> Tuple[float, ...]:
    try:
        return tuple(float(entry) for entry in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed vector {text!r}") from None


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="toric-strat",
        description="Whitney stratification of the parameter projection of a toric variety.",
    )
    parser.add_argument("command", choices=[command.value for command in Command])
    parser.add_argument("input", help="input file, '-' for stdin or @NAME for a benchmark")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--output", "-o", default="-")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--force-saturate", action="store_true")
    parser.add_argument("--tol-residual", type=float, default=Tolerances.residual)
    parser.add_argument("--tol-rank", type=float, default=Tolerances.rank)
    parser.add_argument("--samples", type=int, default=Tolerances.samples)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--from", dest="source", type=_vector)
    parser.add_argument("--to", dest="target", type=_vector)
    parser.add_argument(
        "--lattice", choices=["polytope", "cone", "parameter-cone"], default="polytope"
    )
    parser.add_argument("--export-m2", metavar="PATH")
    parser.add_argument("--export-dot", metavar="PATH")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.threads < 1 or args.samples < 1:
        build_parser().error("--threads and --samples must be positive")
    return RunConfig(
        command=Command(args.command),
        input=args.input,
        json_output=args.format == "json",
        seed=args.seed,
        force_saturate=args.force_saturate,
        tolerances=Tolerances(residual=args.tol_residual, rank=args.tol_rank, samples=args.samples),
        threads=args.threads,
        source=args.source,
        target=args.target,
        lattice=args.lattice,
        output=args.output,
        export_m2=args.export_m2,
        export_dot=args.export_dot,
        verbosity=args.verbose,
    )


def main(argv: Optional[List[str]] = None) -> int:
    config = parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=[logging.WARNING, logging.INFO, logging.DEBUG][min(config.verbosity, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        document = "" if config.input.startswith("@") else read_input_file(config.input)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE
    result = run(config, document)
    if result.output:
        write_output_file(config.output, result.output)
    if result.message:
        print(f"error: {result.message}", file=sys.stderr)
    return int(result.status)
