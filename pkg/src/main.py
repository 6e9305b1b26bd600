import argparse
import asyncio
import sys
from enum import Enum
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel, ValidationError, field_validator

from src.chevalley import get_engine
from src.cohomology import GroupAutomorphism, build_sym4_model, h1_classes, structure_descriptor
from src.config import load_reference_values, settings
from src.errors import ChevkitError
from src.groupelems import a7_involution_survey, torus_involution_census
from src.lattices import get_lattice
from src.logger import logger, set_console_level
from src.verification import (
    require_odd_prime,
    require_odd_prime_power,
    run_report,
    theorem_decision,
    theorem_sweep,
    write_report,
)
from src.rootsystem import build_root_system

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class OutputFormat(str, Enum):
    PLAIN = "plain"
    JSON = "json"


class CliConfig(BaseModel):
    command: str
    p: int = settings.default_prime
    qs: List[int] = list(settings.default_qs)
    q: Optional[int] = None
    sweep: bool = False
    output: Optional[str] = None
    format: OutputFormat = OutputFormat.PLAIN
    verbosity: int = 0

    @field_validator("p")
    @classmethod
    def _odd_prime(cls, value: int) -> int:
        require_odd_prime(value)
        return value

    @field_validator("q")
    @classmethod
    def _odd_q(cls, value: Optional[int]) -> Optional[int]:
        if value is not None:
            require_odd_prime_power(value)
        return value

    @field_validator("qs")
    @classmethod
    def _odd_qs(cls, values: List[int]) -> List[int]:
        for q in values:
            require_odd_prime_power(q)
        return values


def _add_output_flags(parser: argparse.ArgumentParser, with_defaults: bool = True):
    # on subcommands the flags carry no default, so values given before the subcommand survive
    fmt, flag = (OutputFormat.PLAIN.value, False) if with_defaults else (argparse.SUPPRESS, argparse.SUPPRESS)
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=fmt)
    noise = parser.add_mutually_exclusive_group()
    noise.add_argument("--quiet", action="store_true", default=flag, help="only warnings and errors on the console")
    noise.add_argument("--verbose", action="store_true", default=flag, help="debug output on the console")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chevkit", description="Exact checks for the q mod 8 dichotomy in E7(q)")
    _add_output_flags(parser)
    common = argparse.ArgumentParser(add_help=False)
    _add_output_flags(common, with_defaults=False)
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser("info", parents=[common], help="root system, fundamental group and involution table")

    verify = subparsers.add_parser("verify", parents=[common], help="run every check")
    verify.add_argument("--prime", type=int, default=settings.default_prime)
    verify.add_argument("--q", type=int, nargs="+", dest="qs", default=list(settings.default_qs))
    verify.add_argument("--json", dest="output", help="write the report to this path")

    theorem = subparsers.add_parser("theorem", parents=[common], help="outer part of N_G'(E) for q")
    target = theorem.add_mutually_exclusive_group(required=True)
    target.add_argument("--q", type=int)
    target.add_argument("--sweep", action="store_true", help=f"every odd prime power below {settings.theorem_sweep_limit}")

    subparsers.add_parser("h1", parents=[common], help="twisted classes of Sym4 and their structure strings")

    census = subparsers.add_parser("census", parents=[common], help="fixed dimensions of the torus involutions")
    census.add_argument("--prime", type=int, default=settings.default_prime)

    subparsers.add_parser("survey", parents=[common], help="diagonal involutions of the A7 torus")
    return parser


def parse_config(parser: argparse.ArgumentParser, argv: Optional[List[str]]) -> CliConfig:
    args = parser.parse_args(argv)
    try:
        return CliConfig(
            command=args.command,
            p=getattr(args, "prime", settings.default_prime),
            qs=getattr(args, "qs", list(settings.default_qs)),
            q=getattr(args, "q", None),
            sweep=getattr(args, "sweep", False),
            output=getattr(args, "output", None),
            format=args.format,
            verbosity=-1 if args.quiet else (1 if args.verbose else 0),
        )
    except ValidationError as e:
        parser.error("; ".join(error["msg"].removeprefix("Value error, ") for error in e.errors()))
    except ChevkitError as e:
        parser.error(str(e))


def _table(rows: List[dict]) -> str:
    return pd.DataFrame(rows).to_string(index=False, na_rep="-")


def cmd_info(config: CliConfig) -> int:
    rs = build_root_system("E7")
    group = get_lattice().fundamental_group()
    table = load_reference_values().involution_table
    print(f"E7: {len(rs)} roots, {len(rs.positive_roots)} positive")
    print("Fundamental group: " + (" x ".join(f"Z/{d}" for d in group) or "trivial"))
    print("Involution classes:")
    print(_table([{"class": label, "fixed_dim": dim} for label, dim in table.items()]))
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    report = asyncio.run(run_report(config.p, config.qs))
    if config.output:
        write_report(report, config.output)

    if config.format == OutputFormat.JSON:
        print(report.model_dump_json(indent=2))
    else:
        print(f"GF({report.engine.p}^{report.engine.k}), convention {report.engine.sign_convention_id}")
        print(_table([{"check": c.name, "status": c.status.value} for c in report.checks]))
        print(", ".join(f"{key}: {value}" for key, value in report.summary.items()))

    if not report.all_passed:
        logger.error(f"Failing checks: {', '.join(report.failing())}")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _explain(q: int) -> str:
    family = "+-1" if q % 8 in (1, 7) else "+-3"
    return f"q = {q} = {q % 8} mod 8, in the {family} family"


def cmd_theorem(config: CliConfig) -> int:
    if config.sweep:
        decisions = theorem_sweep(settings.theorem_sweep_limit)
        if config.format == OutputFormat.JSON:
            print("[" + ", ".join(d.model_dump_json() for d in decisions) + "]")
        else:
            print(_table([
                {"q": d.q, "epsilon": d.epsilon, "y_in_derived": d.y_in_derived, "structure": d.structure, "agrees": d.agrees}
                for d in decisions
            ]))
        return EXIT_OK if all(d.agrees for d in decisions) else EXIT_CHECK_FAILED

    decision = theorem_decision(config.q)
    if config.format == OutputFormat.JSON:
        print(decision.model_dump_json(indent=2))
    else:
        print(f"{decision.structure}  ({_explain(config.q)})")
    return EXIT_OK if decision.agrees else EXIT_CHECK_FAILED


def cmd_h1(config: CliConfig) -> int:
    model = build_sym4_model()
    classes = h1_classes(model, GroupAutomorphism.identity(model))
    descriptors = [structure_descriptor(model, c) for c in classes]
    rows = [
        {"class": f"[{d.class_label}]", "size": len(c.members), "structure": d.descriptor, "recipe_agrees": d.recipe_agrees}
        for c, d in zip(classes, descriptors)
    ]
    if config.format == OutputFormat.JSON:
        print(pd.DataFrame(rows).to_json(orient="records", indent=2))
    else:
        print(_table(rows))
    return EXIT_OK if all(d.recipe_agrees for d in descriptors if d.derived_in_source) else EXIT_CHECK_FAILED


def cmd_census(config: CliConfig) -> int:
    report = torus_involution_census(get_engine(config.p), get_lattice())
    if config.format == OutputFormat.JSON:
        print(report.model_dump_json(indent=2))
        return EXIT_OK
    rows = [
        {"fixed_dim": dim, "class": report.labels[dim], "count": count, "sc_lift_orders": report.lift_orders[dim]}
        for dim, count in report.counts.items()
    ]
    print(_table(rows))
    print(f"total: {report.total}")
    return EXIT_OK


def cmd_survey(config: CliConfig) -> int:
    report = a7_involution_survey(get_lattice())
    if config.format == OutputFormat.JSON:
        print(report.model_dump_json(indent=2))
    else:
        print(_table([case.model_dump() for case in report.cases]))
        print(f"admissible: {report.admissible}, contradiction reproduced: {report.contradiction_reproduced}")
    return EXIT_OK if report.contradiction_reproduced else EXIT_CHECK_FAILED


COMMANDS = {
    "info": cmd_info,
    "verify": cmd_verify,
    "theorem": cmd_theorem,
    "h1": cmd_h1,
    "census": cmd_census,
    "survey": cmd_survey,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    config = parse_config(parser, argv)
    if config.verbosity < 0:
        set_console_level("WARNING")
    elif config.verbosity > 0:
        set_console_level("DEBUG")

    logger.debug(f"Dispatching {config.command} with {config.model_dump()}")
    try:
        return COMMANDS[config.command](config)
    except ChevkitError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Cancelled by user")
        sys.exit(130)
