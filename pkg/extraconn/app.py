"""
extraconn – configuration, logging setup and the console entry point.
"""

import logging
import os
import sys
from pathlib import Path

from dotenv import load_dotenv

from .families import family_help
from .services.connectivity import DEFAULT_MAX_ORDER, METHOD_NAIVE, METHOD_PRUNED, METHODS
from .services.generators import DEFAULT_ENUMERATE_MAX_ORDER
from .services.mycielskian import DEFAULT_ITERATE_MAX_ORDER
from .services.report import FORMAT_HUMAN, FORMATS

# Load .env file from the project root (parent of this package directory)
# so settings are found regardless of the user's working directory.
_project_root = Path(__file__).resolve().parent.parent
load_dotenv(_project_root / ".env")

logger = logging.getLogger("extraconn")

ENV_PREFIX = "EXTRACONN_"
LOG_FORMAT = "%(asctime)s %(levelname)s: %(message)s"

# Exit status contract
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# Integer settings and their defaults; each can be overridden by EXTRACONN_<KEY>.
_INT_DEFAULTS = {
    "JOBS": 1,
    "NAIVE_MAX_ORDER": DEFAULT_MAX_ORDER[METHOD_NAIVE],
    "PRUNED_MAX_ORDER": DEFAULT_MAX_ORDER[METHOD_PRUNED],
    "ITERATE_MAX_ORDER": DEFAULT_ITERATE_MAX_ORDER,
    "ENUMERATE_MAX_ORDER": DEFAULT_ENUMERATE_MAX_ORDER,
}


def create_config(test_config=None):
    """Build the runtime configuration.

    Args:
        test_config: Optional mapping applied last (tests shrink budgets
              through it).

    Returns:
        Dict with upper-case keys: the integer budgets of ``_INT_DEFAULTS``
        plus ``LOG_LEVEL`` and ``LOG_FILE``.

    Raises:
        ValueError: an integer setting is not an integer, or JOBS < 1.
    """
    config = {}
    for key, default in _INT_DEFAULTS.items():
        raw = os.environ.get(ENV_PREFIX + key)
        if raw is None or raw.strip() == "":
            config[key] = default
            continue
        try:
            config[key] = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_PREFIX}{key} must be an integer, got {raw!r}") from None
    config["LOG_LEVEL"] = os.environ.get(ENV_PREFIX + "LOG_LEVEL", "WARNING").upper()
    config["LOG_FILE"] = os.environ.get(ENV_PREFIX + "LOG_FILE") or None

    if test_config:
        config.update(test_config)

    if config["JOBS"] < 1:
        raise ValueError(f"JOBS must be >= 1, got {config['JOBS']}")
    return config


def max_order_for(config, method):
    """Solver budget for *method* from the config."""
    return config[f"{method.upper()}_MAX_ORDER"]


def configure_logging(level="WARNING", log_file=None, quiet=False):
    """Attach console (and optional file) handlers to the package logger.

    Safe to call repeatedly; previously attached handlers are replaced.
    """
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    formatter = logging.Formatter(LOG_FORMAT)

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.ERROR if quiet else level)
    console.setFormatter(formatter)
    logger.addHandler(console)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.setLevel(level)
    logger.propagate = False


def build_parser():
    """The argparse parser for every subcommand."""
    import argparse

    parser = argparse.ArgumentParser(
        prog="extraconn",
        description="Mycielskian construction, exact g-extra connectivity and "
        "verification of the κ_{2g+1}(μ(G)) = 2κ_g(G)+1 identity.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="Graph families (--family name:params):\n"
        + family_help()
        + "\n\nExit status: 0 ok, 1 violation found, 2 usage/input error, 3 budget refusal.",
    )
    parser.add_argument(
        "--log-level",
        default=None,
        help="Logging level (default: EXTRACONN_LOG_LEVEL or WARNING)",
    )
    parser.add_argument("--log-file", default=None, help="Also write log records to this file")
    parser.add_argument(
        "--quiet", "-q", action="store_true", help="Only log errors to the console"
    )

    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("graph source (exactly one)")
    source = source.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--family",
        action="append",
        metavar="SPEC",
        help="Named family, e.g. cycle:6, hypercube:3, petersen (repeatable for batch/audit)",
    )
    source.add_argument("--graph6", metavar="STRING", help="graph6 literal")
    source.add_argument(
        "--edge-list", metavar="FILE", help="Edge-list file ('n m' header, 'u v' lines)"
    )
    source.add_argument("--graph6-file", metavar="FILE", help="graph6 file, '-' for stdin")
    source.add_argument(
        "--enumerate",
        metavar="N|A-B",
        help="All labeled connected graphs of order 1..N (or A..B); batch/audit only",
    )
    source.add_argument(
        "--random", metavar="N:P", help="Seeded G(n, p) sample(s), see --seed/--count"
    )
    common.add_argument("--seed", type=int, default=0, help="Seed for --random (default: 0)")
    common.add_argument(
        "--count", type=int, default=1, help="Number of --random samples for batch/audit"
    )
    common.add_argument("--format", choices=FORMATS, default=FORMAT_HUMAN, help="Output format")
    common.add_argument(
        "--output", "-o", default=None, help="Write the report here instead of stdout"
    )

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--method", choices=METHODS, default=METHOD_PRUNED, help="Search method")
    solver.add_argument(
        "--max-order", type=int, default=None, help="Override the per-graph solver budget"
    )
    solver.add_argument(
        "--skip-on-budget",
        action="store_true",
        help="Record over-budget instances as skipped instead of exiting with status 3",
    )
    jobs_help = "Worker processes (default: EXTRACONN_JOBS or 1)"

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common], help="Print a graph (graph6 + edge list)")
    mu = sub.add_parser("mu", parents=[common], help="Print μᵏ(G) with its label map")
    mu.add_argument(
        "--iterate",
        "-k",
        type=int,
        default=1,
        help="Number of Mycielskian steps, 0 prints G as given (default: 1)",
    )
    sub.add_parser("kappa", parents=[common], help="Print κ(G)")
    extra = sub.add_parser("extra", parents=[common, solver], help="Solve κ_g(G)")
    extra.add_argument("--g", type=int, required=True, help="Extra-connectivity order g >= 0")
    verify = sub.add_parser("verify", parents=[common, solver], help="Verify one graph")
    verify.add_argument(
        "--g",
        type=int,
        required=True,
        help="g = 0 checks κ(μ(G)); g >= 1 checks κ_{2g+1}(μ(G))",
    )
    batch = sub.add_parser("batch", parents=[common, solver], help="Verify a corpus")
    batch.add_argument("--g", type=int, nargs="+", required=True, help="One or more g values")
    batch.add_argument("--jobs", "-j", type=int, default=None, help=jobs_help)
    audit = sub.add_parser(
        "audit", parents=[common, solver], help="Monotonicity audit of κ_0..κ_gmax"
    )
    audit.add_argument("--g-max", type=int, required=True, help="Largest g to solve")
    audit.add_argument("--jobs", "-j", type=int, default=None, help=jobs_help)
    return parser


def main(argv=None):
    """CLI entry-point for the `extraconn` command."""
    from .commands import dispatch

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = create_config()
    except ValueError as exc:
        print(f"extraconn: {exc}", file=sys.stderr)
        return EXIT_USAGE

    level = (args.log_level or config["LOG_LEVEL"]).upper()
    if not isinstance(logging.getLevelName(level), int):
        print(f"extraconn: unknown log level {level!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        configure_logging(level, args.log_file or config["LOG_FILE"], quiet=args.quiet)
    except OSError as exc:
        print(f"extraconn: cannot open log file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return dispatch(args, config)


if __name__ == "__main__":
    sys.exit(main())
