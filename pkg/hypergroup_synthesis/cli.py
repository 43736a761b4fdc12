"""
Command-line entry point: parse flags, dispatch to a registered command, map
outcomes to exit codes.
"""

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .config import VALID_MODES, Config
from .core.exceptions import HGError
from .core.requests import RunConfig
from .registry import CommandResult, registry
from .utils.errors import exception_to_error_response, exit_code_for
from .utils.logger import logger
from .utils.reports import write_report

# Import API modules to register commands
from .api import algebra, synthesis, verification  # noqa: F401


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--spec", dest="spec_path", help="hypergroup spec JSON file")
    parent.add_argument("--box", type=int, help=f"elements {{0..N}}^d (default {Config.DEFAULT_BOX})")
    parent.add_argument("--mode", choices=VALID_MODES, default="exact")
    parent.add_argument("--tol", type=float, default=Config.FLOAT_TOLERANCE, help="relative tolerance in float mode")
    parent.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    parent.add_argument("--jobs", type=int, default=Config.JOBS)
    parent.add_argument("--out", help="write the JSON report here and print a summary")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypergroup-synthesis",
        description="Exact computations on discrete polynomial hypergroups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    parent = _common_flags()
    for command in registry:
        sub = commands.add_parser(command.name, help=command.help, parents=[parent])
        for argument in command.arguments:
            sub.add_argument(*argument.flags, **argument.options)
    return parser


def _emit(report: dict, summary: Optional[str], out: Optional[str]) -> None:
    text = write_report(report, out)
    if text is not None:
        sys.stdout.write(text)
    elif summary:
        print(summary)


def run(args: argparse.Namespace) -> int:
    out = args.out
    try:
        config = RunConfig(
            command=args.command,
            spec_path=args.spec_path,
            box=Config.DEFAULT_BOX if args.box is None else args.box,
            mode=args.mode,
            tolerance=args.tol,
            seed=args.seed,
            jobs=args.jobs,
            out=out,
        )
        logger.info("Running %s on %s", config.command, config.spec_path)
        result: CommandResult = registry.get(args.command).handler(config, args)
    except HGError as exc:
        code = exit_code_for(exc)
        logger.error("%s failed: %s", args.command, exc.message)
        _emit(exception_to_error_response(exc), f"{args.command}: {exc.message}", out)
        return int(code)
    _emit(result.report, result.summary, out)
    logger.info("%s finished with exit code %s", args.command, int(result.exit_code))
    return int(result.exit_code)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the command line."""
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
