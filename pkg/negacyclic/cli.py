"""
Command line front end.

    negacyclic analyze --p 5 --n 5 --gen "0;1;0;0" --gen "0;0;1;0"
    negacyclic distance --p 3 --n 9 --gen "0;0;0;(x+1)^4"
    negacyclic catalog --p 3 --n 9 --family uv-only --format csv
    negacyclic tables --p 5
    negacyclic verify --p 3 --n 3 --count 50

Reports go to stdout, diagnostics to stderr.
"""
import argparse
import csv
import json
import logging
import sys
from typing import IO, Any, Dict, List, NamedTuple, Optional, Sequence

from .__version__ import __version__
from .api import analysis_report
from .catalog import (
    Family,
    catalog_codes,
    catalog_entry,
    reproduce_tables,
    row_agreement,
    verify_suite,
    write_csv,
    write_json,
)
from .codes import NegacyclicCode
from .config import Settings
from .distance import distance_report
from .errors import NegacyclicError, NotApplicable
from .field import get_field
from .ring import ModulusKind, RPoly
from .tables import N as TABLE_LENGTH

__all__ = ["CommandSpec", "parse_generator", "build_parser", "run", "main"]

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text")

EXIT_OK = 0
EXIT_INTERNAL = 4


class CommandSpec(NamedTuple):
    command: str
    p: int
    n: int
    generators: List[str]
    format: str = "json"
    settings: Settings = Settings()
    family: str = "all"
    tables: Sequence[int] = (1, 2, 3)
    count: int = 20


def parse_generator(spec: str, p: int, n: int) -> RPoly:
    """
    Reads "f0;f1;f2;f3" into an element of R[x]/(x^n + 1).
    """
    return RPoly.parse(spec, get_field(p), ModulusKind.negacyclic(n))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    defaults = Settings()

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument(
        "--support-budget",
        type=_positive,
        default=defaults.support_budget,
        help="kernel tests allowed to the support oracle",
    )
    common.add_argument(
        "--enum-budget",
        type=_positive,
        default=defaults.enum_budget,
        help="codewords allowed to the enumeration oracle",
    )
    common.add_argument(
        "--divisor-budget", type=_positive, default=defaults.divisor_budget
    )
    common.add_argument(
        "--coefficient-budget",
        type=_positive,
        default=defaults.coefficient_budget,
        help="walk all coefficient choices up to this many, sample above it",
    )
    common.add_argument("--samples", type=int, default=defaults.samples)
    common.add_argument("--seed", type=int, default=defaults.seed)
    common.add_argument("-v", "--verbose", action="store_true")

    code = argparse.ArgumentParser(add_help=False)
    code.add_argument("--p", type=int, required=True)
    code.add_argument("--n", type=int, required=True)

    parser = argparse.ArgumentParser(
        prog="negacyclic",
        description="Negacyclic codes over F_p + uF_p + vF_p + uvF_p.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help in (
        ("analyze", "canonical form, rank, spanning set and distance"),
        ("distance", "oracle and closed form distance"),
    ):
        command = commands.add_parser(name, parents=[common, code], help=help)
        command.add_argument(
            "--gen",
            action="append",
            required=True,
            dest="generators",
            metavar="F0;F1;F2;F3",
            help="generator, repeatable",
        )

    catalog = commands.add_parser(
        "catalog", parents=[common, code], help="enumerate codes of a family"
    )
    catalog.add_argument("--family", choices=sorted(Family.registry), default="all")

    tables = commands.add_parser(
        "tables", parents=[common], help="check the printed p = 5 tables"
    )
    tables.add_argument("--p", type=int, default=5)
    tables.add_argument("--n", type=int, default=5)
    tables.add_argument(
        "--table", type=int, action="append", choices=(1, 2, 3), dest="tables"
    )

    verify = commands.add_parser(
        "verify", parents=[common, code], help="invariant suite on random codes"
    )
    verify.add_argument("--count", type=_positive, default=20)

    return parser


def command_spec(args: argparse.Namespace) -> CommandSpec:
    settings = Settings(
        support_budget=args.support_budget,
        enum_budget=args.enum_budget,
        divisor_budget=args.divisor_budget,
        coefficient_budget=args.coefficient_budget,
        samples=args.samples,
        seed=args.seed,
    )
    return CommandSpec(
        command=args.command,
        p=args.p,
        n=args.n,
        generators=getattr(args, "generators", None) or [],
        format=args.format,
        settings=settings,
        family=getattr(args, "family", "all"),
        tables=getattr(args, "tables", None) or (1, 2, 3),
        count=getattr(args, "count", 20),
    )


def _emit(records: List[Dict[str, Any]], fmt: str, stream: IO[str]) -> None:
    if fmt == "json":
        json.dump(records, stream, indent=2)
        stream.write("\n")
    elif fmt == "csv":
        fields = list(records[0]) if records else []
        writer = csv.DictWriter(stream, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
    else:
        for i, record in enumerate(records):
            if i:
                stream.write("\n")
            for key, value in record.items():
                stream.write(f"{key}: {value}\n")


def _analyze(spec: CommandSpec, stream: IO[str]) -> None:
    field = get_field(spec.p)
    generators = [parse_generator(g, spec.p, spec.n) for g in spec.generators]
    code = NegacyclicCode.from_generators(generators, field, spec.n)

    if spec.format == "csv":
        entry = catalog_entry(code, spec.settings, "cli")
        write_csv([entry.as_dict()], stream, _header(spec))
        return

    report = analysis_report(code, spec.settings)
    if spec.format == "json":
        json.dump(report, stream, indent=2)
        stream.write("\n")
    else:
        _emit([report], "text", stream)


def _distance(spec: CommandSpec, stream: IO[str]) -> None:
    field = get_field(spec.p)
    generators = [parse_generator(g, spec.p, spec.n) for g in spec.generators]
    code = NegacyclicCode.from_generators(generators, field, spec.n)
    report = distance_report(code, **spec.settings.distance_budgets)
    if spec.format == "json":
        json.dump(report.as_dict(), stream, indent=2)
        stream.write("\n")
    else:
        _emit([report.as_dict()], spec.format, stream)


def _header(spec: CommandSpec) -> Dict[str, Any]:
    header: Dict[str, Any] = {"p": spec.p, "n": spec.n, "seed": spec.settings.seed}
    if spec.command == "catalog":
        header["family"] = spec.family
    return header


def _catalog(spec: CommandSpec, stream: IO[str]) -> None:
    entries = catalog_codes(spec.p, spec.n, spec.family, spec.settings)
    records = [entry.as_dict() for entry in entries]
    if spec.format == "json":
        write_json(records, stream, _header(spec))
    elif spec.format == "csv":
        write_csv(records, stream, _header(spec))
    else:
        _emit(records, "text", stream)


def _tables(spec: CommandSpec, stream: IO[str]) -> None:
    if spec.n != TABLE_LENGTH:
        raise NotApplicable(
            f"Tables are printed for n = {TABLE_LENGTH}, got n = {spec.n}"
        )
    verdicts = reproduce_tables(spec.p, spec.settings, spec.tables)
    _emit([v.as_dict() for v in verdicts], spec.format, stream)
    logger.info("Row agreement %.1f%%", 100 * row_agreement(verdicts))


def _verify(spec: CommandSpec, stream: IO[str]) -> None:
    tally = verify_suite(spec.p, spec.n, spec.count, spec.settings)
    records = [
        {"check": name, "passed": passed, "checked": checked}
        for name, (passed, checked) in tally.items()
    ]
    _emit(records, spec.format, stream)


RUNNERS = {
    "analyze": _analyze,
    "distance": _distance,
    "catalog": _catalog,
    "tables": _tables,
    "verify": _verify,
}


def run(spec: CommandSpec, stream: Optional[IO[str]] = None) -> int:
    """
    Runs a command and returns its exit status. A mismatch against a printed
    table is a finding and keeps the status at zero.
    """
    stream = stream or sys.stdout
    try:
        RUNNERS[spec.command](spec, stream)
    except NegacyclicError as e:
        logger.error("%s: %s", e.__class__.__name__, e)
        return e.exit_code
    except Exception:
        logger.exception("Internal error in %r", spec.command)
        return EXIT_INTERNAL
    return EXIT_OK


def _configure_logging(verbose: bool) -> None:
    package = logging.getLogger("negacyclic")
    package.setLevel(logging.DEBUG if verbose else logging.WARNING)
    for handler in package.handlers:
        if isinstance(handler, logging.StreamHandler) and getattr(
            handler, "negacyclic_cli", False
        ):
            handler.setStream(sys.stderr)
            return

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    handler.negacyclic_cli = True  # type: ignore
    package.addHandler(handler)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        spec = command_spec(args)
    except ValueError as e:
        parser.error(str(e))
    return run(spec)


if __name__ == "__main__":  # pragma: nocover
    sys.exit(main())
