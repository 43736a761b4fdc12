"""
Decomposition of an exponential polynomial over the moment functions of its variety.
"""

from argparse import Namespace

from ..config import ExitCode
from ..core.requests import RunConfig, SynthRequest
from ..core.synthesis import decomposition_report
from ..registry import CommandResult, arg, registry
from ..utils.logger import logger
from ..utils.rng import SplitMix64
from .inputs import load_function, load_hypergroup, parse_lambda


@registry.command(
    "synth",
    help="decompose a function into moment functions of its variety",
    arguments=[
        arg("--function", dest="function_path", required=True, help="JSON file with function terms"),
        arg("--lambda", dest="lambda_text", help="point of the decomposition when the seed has one"),
    ],
)
def synth(config: RunConfig, args: Namespace) -> CommandResult:
    request = SynthRequest(function_path=args.function_path, lambda_text=args.lambda_text)
    hypergroup = load_hypergroup(config)
    function = load_function(request.function_path, hypergroup, config.mode)
    point = parse_lambda(request.lambda_text, hypergroup, mode=config.mode)
    # without an explicit --box the variety picks its own sampling box
    box = getattr(args, "box", None)
    report = decomposition_report(function, point, box=box, rng=SplitMix64(config.seed))
    report["command"] = "synth"
    exact = report["residual"] == "0"
    if not report["unique"]:
        logger.warning("Decomposition is not unique; the point may be degenerate")
    summary = (
        f"synth: {len(report['atoms'])} moment atoms in a variety of dimension "
        f"{report['variety_dim']}, residual {report['residual']}"
    )
    return CommandResult(ExitCode.OK if exact else ExitCode.CHECK_FAILED, report, summary)
