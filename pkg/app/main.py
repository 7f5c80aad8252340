"""
amoeba - command-line entry point.

Computes amoebas of sparse Laurent polynomials and the geometry around
them: Newton polytopes, complement components, spines, contours,
coamoebas, compactified amoebas and solidity scans.

Examples:
    python app/main.py info "z1+z2+1"
    python app/main.py components --fixture p2 --depth 9 --report p2.json
    python app/main.py draw --fixture p3 --alg naive --grid 500 --out p3.ppm
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from commands import HANDLERS
from corpus import fixture_names
from models import Algorithm, Command, OutputFormat, RunConfig
from storage import FileManager
from utils import Config, get_logger, setup_logger
from utils.validators import RunConfigValidator, parse_point, parse_resolution
from utils.exceptions import AmoebaError, BudgetExceeded
from utils.logger_config import set_level

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

logger = get_logger("amoeba.cli")


def _common_options(config: Config) -> argparse.ArgumentParser:
    """Options shared by every polynomial command."""
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("polynomial")
    source.add_argument("text", nargs="?", help="polynomial, e.g. \"z1^2 + 3i*z1*z2 - 1\"")
    source.add_argument("-p", "--poly", help="polynomial text")
    source.add_argument("--poly-file", type=Path, help="file holding the polynomial text")
    source.add_argument("--fixture", choices=fixture_names(), help="named fixture polynomial")

    common.add_argument("--domain", help="x:lo:hi,y:lo:hi (default: automatic)")
    common.add_argument("--grid", type=int, default=config.default_grid, help="naive sampling density")
    common.add_argument(
        "--res",
        type=parse_resolution,
        default=(config.default_resolution, config.default_resolution),
        help="image size WxH",
    )
    common.add_argument("--depth", type=int, default=config.default_depth, help="subdivision depth")
    common.add_argument("--samples", type=int, default=config.default_samples, help="fibers per axis (K)")
    common.add_argument("--seed", type=int, default=config.seed, help="random seed")
    common.add_argument("--threads", type=int, default=config.threads, help="worker count")
    common.add_argument("--out", type=Path, help="output artifact path")
    common.add_argument("--report", type=Path, help="JSON report path")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        help="artifact format",
    )
    return common


def build_parser(config: Optional[Config] = None) -> argparse.ArgumentParser:
    """Top-level parser with one subcommand per :class:`Command`."""
    config = config or Config()
    common = _common_options(config)
    parser = argparse.ArgumentParser(
        prog="amoeba",
        description="Amoebas of sparse Laurent polynomials.",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    commands.add_parser("info", parents=[common], help="Newton polytope and component bounds")

    draw = commands.add_parser("draw", parents=[common], help="picture of the amoeba")
    draw.add_argument(
        "--alg",
        choices=[a.value for a in Algorithm],
        default=Algorithm.GREEDY.value,
        help="depiction algorithm (default: greedy)",
    )

    components = commands.add_parser("components", parents=[common], help="complement components")
    components.add_argument(
        "--alg",
        choices=[Algorithm.DICHOTOMOUS.value],
        default=Algorithm.DICHOTOMOUS.value,
    )

    commands.add_parser("spine", parents=[common], help="spine from Ronkin coefficients")
    commands.add_parser("coamoeba", parents=[common], help="coamoeba picture")
    commands.add_parser("compactified", parents=[common], help="compactified amoeba picture")
    commands.add_parser("contour", parents=[common], help="contour picture")

    member = commands.add_parser("member", parents=[common], help="classify one log point")
    member.add_argument("--point", type=parse_point, required=True, help="x,y[,z]")

    scan = commands.add_parser("scan", parents=[common], help="solidity scan of a random family")
    scan.add_argument("--count", type=int, default=100, help="family size")
    scan.add_argument("--degree", type=int, default=6, help="simplex degree")
    scan.add_argument(
        "--rule",
        choices=["vertices-only", "random-hull", "full-simplex"],
        default="random-hull",
        help="support rule",
    )
    scan.add_argument("--phase", choices=["real", "uniform"], default="real", help="coefficient phases")
    scan.add_argument("--table", type=Path, help="CSV table path")
    scan.add_argument("--no-progress", action="store_true", help="hide the progress bar")
    return parser


def to_run_config(args: argparse.Namespace) -> RunConfig:
    """Convert parsed arguments to a :class:`RunConfig`."""
    command = Command(args.command)
    texts = [t for t in (args.text, args.poly) if t is not None]
    extra = {}
    if command is Command.SCAN:
        extra = {
            "count": args.count,
            "degree": args.degree,
            "rule": args.rule,
            "phase": args.phase,
            "table": args.table,
            "progress": not args.no_progress,
        }
    if len(texts) > 1:
        extra["duplicate_text"] = True
    return RunConfig(
        command=command,
        poly_text=texts[0] if texts else None,
        poly_file=args.poly_file,
        fixture=args.fixture,
        domain=args.domain,
        algorithm=Algorithm(args.alg) if getattr(args, "alg", None) else None,
        grid=args.grid,
        resolution=args.res,
        depth=args.depth,
        samples=args.samples,
        seed=args.seed,
        threads=args.threads,
        out=args.out,
        report=args.report,
        output_format=OutputFormat(args.output_format) if args.output_format else None,
        point=getattr(args, "point", None),
        extra=extra,
    )


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: ``sys.argv[1:]``)

    Returns:
        Exit code: 0 success, 1 unwritable output, 2 invalid input,
        3 cell budget exceeded
    """
    config = Config.reload()
    setup_logger("amoeba", log_file=config.log_file)
    set_level(config.log_level)

    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    run_config = to_run_config(args)
    if run_config.extra.get("duplicate_text"):
        print("error: give the polynomial either positionally or with --poly", file=sys.stderr)
        return EXIT_INVALID

    validation = RunConfigValidator(config).validate(run_config)
    if not validation.is_valid:
        print(f"error: {validation.message}", file=sys.stderr)
        return EXIT_INVALID

    handler = HANDLERS[run_config.command]
    try:
        output = handler(run_config, config, FileManager(config))
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (AmoebaError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"error: cannot write output: {e}", file=sys.stderr)
        return EXIT_IO

    print(output)
    return EXIT_OK


def main() -> None:
    """Console entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
