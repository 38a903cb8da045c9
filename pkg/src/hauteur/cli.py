"""Command-line interface for hauteur."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .compositum import (
    ExtensionMultiset,
    check_invariants,
    crude_bound,
    inertia_bound,
    inertia_factor,
    ramification_bound,
)
from .config import get_config, resolve_precision_bits
from .density import DensityQuery, natural_density
from .exceptions import InputError, NonPositiveBoundError, PrecisionError
from .heightbound import evaluate_scenario
from .heightoracle import AlgebraicNumber, is_root_of_unity, weil_height
from .krasner import LocalField, count_extensions, count_totally_ramified, profiles_frame
from .report import format_decimal, format_rational, render_report
from .reproduce import ROW_NAMES, run_reproduce, summary_line
from .scenario import load_packaged_scenario, load_scenario, packaged_scenarios

EXIT_OK = 0
EXIT_REPRODUCE_FAILED = 1
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NON_POSITIVE_BOUND = 3
EXIT_PRECISION_ERROR = 4

HEIGHT_DIGITS = 6


def _extension_triple(text: str) -> tuple[int, int, int]:
    """Parse an ``E,F,COUNT`` triple."""
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected E,F,COUNT, got {text!r}")
    try:
        e, f, count = (int(part) for part in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected integers in E,F,COUNT, got {text!r}") from exc
    return e, f, count


def build_parser() -> argparse.ArgumentParser:
    """Build the top-level CLI argument parser."""
    parser = argparse.ArgumentParser(
        prog="hauteur", description="Explicit Weil height lower bounds and their ingredients."
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log progress (-v info, -vv debug)"
    )
    subparsers = parser.add_subparsers(dest="command")

    krasner_parser = subparsers.add_parser("krasner", help="Count extensions of a p-adic field")
    krasner_parser.add_argument("-p", type=int, required=True, help="Residue characteristic")
    krasner_parser.add_argument(
        "-F", dest="abs_degree", type=int, default=1, help="Absolute degree [F : Q_p]"
    )
    mode = krasner_parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("-d", type=int, help="Degree of the extensions")
    mode.add_argument(
        "--profiles", type=int, metavar="DMAX", help="Table of all profiles with e * f <= DMAX"
    )
    krasner_parser.add_argument(
        "--totally-ramified", action="store_true", help="Count totally ramified extensions only"
    )

    bound_parser = subparsers.add_parser("bound", help="Evaluate a scenario file")
    bound_parser.add_argument(
        "scenario", type=str, help="Scenario JSON file, or the name of a packaged scenario"
    )

    compositum_parser = subparsers.add_parser(
        "compositum", help="Bounds for a compositum of local extensions"
    )
    compositum_parser.add_argument("-p", type=int, required=True, help="Residue characteristic")
    compositum_parser.add_argument(
        "--ext",
        dest="extensions",
        type=_extension_triple,
        action="append",
        required=True,
        metavar="E,F,COUNT",
        help="Ramification index, inertia degree and multiplicity (repeatable)",
    )
    compositum_parser.add_argument(
        "--galois", action="store_true", help="Every extension is Galois over the base field"
    )
    compositum_parser.add_argument(
        "--check",
        nargs=2,
        type=int,
        metavar=("E", "F"),
        default=None,
        help="Check claimed invariants of the compositum against the bounds",
    )

    reproduce_parser = subparsers.add_parser("reproduce", help="Replay the worked examples")
    reproduce_parser.add_argument(
        "--only", nargs="+", choices=list(ROW_NAMES), default=None, help="Rows to run"
    )
    reproduce_parser.add_argument(
        "--golden", type=Path, default=None, help="Alternative golden file"
    )

    height_parser = subparsers.add_parser("height", help="Weil height of an algebraic number")
    height_parser.add_argument(
        "polynomial", type=str, help='Minimal polynomial, e.g. "x^2 - x - 1"'
    )
    height_parser.add_argument(
        "--bits", type=int, default=None, help="Precision in bits (default: HAUTEUR_PRECISION_BITS)"
    )

    density_parser = subparsers.add_parser("density", help="Natural density of fields at p")
    density_parser.add_argument("-p", type=int, required=True, help="Odd prime")
    density_parser.add_argument("-n", type=int, required=True, help="Degree (2 to 5)")
    kind = density_parser.add_mutually_exclusive_group()
    kind.add_argument(
        "--inert", dest="kind", action="store_const", const="inert", help="p inert (default)"
    )
    kind.add_argument(
        "--totally-ramified",
        dest="kind",
        action="store_const",
        const="totally_ramified",
        help="p totally ramified",
    )
    density_parser.set_defaults(kind="inert")

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def cmd_krasner(args: argparse.Namespace) -> int:
    """Print a Krasner count or a profile table."""
    field = LocalField(args.p, args.abs_degree)
    if args.profiles is not None:
        if args.totally_ramified:
            raise InputError("--totally-ramified applies to -d counts, not to --profiles tables")
        print(profiles_frame(field, args.profiles).write_csv(), end="")
    elif args.totally_ramified:
        print(count_totally_ramified(field, args.d))
    else:
        print(count_extensions(field, args.d))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    """Print the bound report of a scenario."""
    path = Path(args.scenario)
    if path.exists() or args.scenario not in packaged_scenarios():
        scenario = load_scenario(path)
    else:
        scenario = load_packaged_scenario(args.scenario)
    print(render_report(evaluate_scenario(scenario)), end="")
    return EXIT_OK


def cmd_compositum(args: argparse.Namespace) -> int:
    """Print compositum bounds as JSON; non-zero exit iff a checked claim is inconsistent."""
    ms = ExtensionMultiset.from_triples(args.p, args.extensions, galois=args.galois)
    summary: dict[str, object] = {
        "e_bound": str(ramification_bound(ms)),
        "f_bound": str(inertia_bound(ms)),
        "f_bound_relation": "divides" if ms.galois else "at_most",
        "inertia_branch": inertia_factor(ms).branch,
        "crude_bound": str(crude_bound(ms)),
    }
    violations: list[str] = []
    if args.check is not None:
        violations = check_invariants(ms, *args.check)
        summary["violations"] = violations
    print(json.dumps(summary, indent=2, sort_keys=True))
    return EXIT_CHECK_FAILED if violations else EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    """Print the reproduce table; non-zero exit iff a row fails."""
    results = run_reproduce(only=args.only, golden_path=args.golden)
    for row in results.iter_rows(named=True):
        print(f"{row['row']:<16} {row['status']:<5} {row['detail']}")
    print(summary_line(results))
    failed = results.filter(results["status"] != "pass").height
    return EXIT_REPRODUCE_FAILED if failed else EXIT_OK


def cmd_height(args: argparse.Namespace) -> int:
    """Print the Weil height of a root of the given polynomial."""
    number = AlgebraicNumber.parse(args.polynomial)
    bits = resolve_precision_bits(args.bits)
    if is_root_of_unity(number):
        print("0")
        return EXIT_OK
    estimate = weil_height(number, bits)
    print(format_decimal(estimate.value, HEIGHT_DIGITS))
    return EXIT_OK


def cmd_density(args: argparse.Namespace) -> int:
    """Print an exact natural density."""
    print(format_rational(natural_density(DensityQuery(args.p, args.n, args.kind))))
    return EXIT_OK


_COMMANDS = {
    "krasner": cmd_krasner,
    "bound": cmd_bound,
    "compositum": cmd_compositum,
    "reproduce": cmd_reproduce,
    "height": cmd_height,
    "density": cmd_density,
}


def main(argv: list[str] | None = None) -> int:
    """Run CLI entrypoint."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    command = _COMMANDS.get(args.command)
    if command is None:
        parser.print_help()
        return EXIT_OK
    logging.getLogger(__name__).debug("Running %s with %s", args.command, get_config())
    try:
        return command(args)
    except NonPositiveBoundError as exc:
        print(f"[hauteur] Height bound is not positive: {exc}", file=sys.stderr)
        return EXIT_NON_POSITIVE_BOUND
    except PrecisionError as exc:
        achieved = f" (best error bound {exc.achieved:.3g})" if exc.achieved is not None else ""
        print(f"[hauteur] Precision failure: {exc}{achieved}", file=sys.stderr)
        return EXIT_PRECISION_ERROR
    except InputError as exc:
        print(f"[hauteur] Invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
