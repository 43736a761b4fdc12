"""
Verification commands: axiom sweeps, functional equations and degrees.
"""

from argparse import Namespace
from typing import Optional

from ..config import VALID_EQUATION_KINDS, Config, ExitCode
from ..core.codec import function_to_json
from ..core.exceptions import HGValidationError
from ..core.functions import (
    HFunction,
    check_equation,
    exponential,
    moment_family,
    monomial_degree,
    sine,
)
from ..core.hypergroup import Hypergroup, verify_axioms
from ..core.requests import CheckEquationRequest, DegreeRequest, RunConfig
from ..core.scalars import scalar_to_json
from ..registry import CommandResult, arg, registry
from ..utils.logger import logger
from ..utils.rng import SplitMix64
from .inputs import load_function, load_hypergroup, parse_index, parse_lambda

LAMBDA_HELP = "point as comma-separated rationals, e.g. 1/2,3/4 (re:im for complex; decimals in float mode)"


def _point_json(point) -> list:
    return [scalar_to_json(value) for value in point]


def _single_point(f: HFunction, field: str) -> tuple:
    if len(f.points) != 1:
        raise HGValidationError(
            f"The function has terms at {len(f.points)} points; pass --{field}",
            field=field,
        )
    return f.points[0]


def _moment_member(hypergroup: Hypergroup, alpha: tuple, point: tuple) -> HFunction:
    return HFunction.build(hypergroup, [(1, alpha, point)])


@registry.command("verify", help="sweep the hypergroup axioms and the exponential law")
def verify(config: RunConfig, args: Namespace) -> CommandResult:
    hypergroup = load_hypergroup(config)
    axioms = verify_axioms(hypergroup, config.box, jobs=config.jobs)
    report = {"command": "verify", "axioms": axioms.to_dict(), "equations": []}
    passed = axioms.passed
    if passed:
        rng = SplitMix64(config.seed)
        law_box = min(config.box, Config.ASSOCIATIVITY_BOX)
        ones = (1,) * hypergroup.dimension
        for point in (ones, rng.point(hypergroup.dimension)):
            result = check_equation(
                "exponential",
                hypergroup,
                function=exponential(hypergroup, point),
                box=law_box,
                mode=config.mode,
                tolerance=config.tolerance,
                jobs=config.jobs,
            )
            report["equations"].append(dict(result.to_dict(), **{"lambda": _point_json(point)}))
            passed = passed and result.passed
    failed = [check["name"] for check in report["axioms"]["checks"] if not check["passed"]]
    if passed:
        summary = f"verify: all {len(report['axioms']['checks'])} axiom checks passed on box {config.box}"
    else:
        summary = f"verify: failed {', '.join(failed) or 'exponential law'} on box {config.box}"
    report["passed"] = passed
    return CommandResult(ExitCode.OK if passed else ExitCode.CHECK_FAILED, report, summary)


@registry.command(
    "check-eq",
    help="sweep a functional equation over the box",
    arguments=[
        arg("--kind", required=True, choices=VALID_EQUATION_KINDS),
        arg("--lambda", dest="lambda_text", help=LAMBDA_HELP),
        arg("--m-lambda", dest="m_lambda_text", help="point of the exponential, defaults to --lambda"),
        arg("--a", dest="a_text", help="sine direction, comma-separated rationals"),
        arg("--alpha", dest="alpha_text", help="multi-index, e.g. 2,2"),
        arg("--order", type=int, help="degree n for the degree check"),
        arg("--function", dest="function_path", help="JSON file with function terms"),
        arg("--trials", type=int, default=Config.DEGREE_TRIALS),
    ],
)
def check_eq(config: RunConfig, args: Namespace) -> CommandResult:
    request = CheckEquationRequest(
        kind=args.kind,
        lambda_text=args.lambda_text,
        m_lambda_text=args.m_lambda_text,
        a_text=args.a_text,
        alpha_text=args.alpha_text,
        order=args.order,
        function_path=args.function_path,
        trials=args.trials,
    )
    hypergroup = load_hypergroup(config)
    mode = config.mode
    point = parse_lambda(request.lambda_text, hypergroup, mode=mode)
    m_point = parse_lambda(request.m_lambda_text, hypergroup, "m-lambda", mode) or point
    function = load_function(request.function_path, hypergroup, mode) if request.function_path else None
    options = dict(box=config.box, mode=config.mode, tolerance=config.tolerance, jobs=config.jobs)
    inputs: dict = {"kind": request.kind}

    if request.kind == "exponential":
        function = function or exponential(hypergroup, point)
        result = check_equation("exponential", hypergroup, function=function, **options)
    elif request.kind == "sine":
        if function is None:
            function = sine(hypergroup, parse_lambda(request.a_text, hypergroup, "a", mode), point)
        m = exponential(hypergroup, m_point)
        inputs["m_lambda"] = _point_json(m_point)
        result = check_equation("sine", hypergroup, function=function, exponential=m, **options)
    elif request.kind == "moment":
        alpha = parse_index(request.alpha_text, hypergroup, "alpha")
        family = moment_family(hypergroup, point, alpha)
        inputs["alpha"] = list(alpha)
        result = check_equation("moment", hypergroup, family=family, **options)
    else:
        if function is None:
            alpha = parse_index(request.alpha_text, hypergroup, "alpha")
            function = _moment_member(hypergroup, alpha, point)
        m = exponential(hypergroup, m_point or _single_point(function, "m-lambda"))
        inputs["order"] = request.order
        result = check_equation(
            "degree",
            hypergroup,
            function=function,
            exponential=m,
            degree=request.order,
            trials=request.trials,
            rng=SplitMix64(config.seed),
            **options,
        )
    if function is not None:
        inputs["function"] = function_to_json(function)
    if point is not None:
        inputs["lambda"] = _point_json(point)
    report = {"command": "check-eq", "inputs": inputs, "result": result.to_dict()}
    verdict = "passed" if result.passed else "failed"
    summary = f"check-eq {request.kind}: {verdict} after {result.checked} comparisons on box {config.box}"
    logger.info(summary)
    return CommandResult(ExitCode.OK if result.passed else ExitCode.CHECK_FAILED, report, summary)


@registry.command(
    "degree",
    help="degree of an exponential monomial",
    arguments=[
        arg("--function", dest="function_path", help="JSON file with function terms"),
        arg("--alpha", dest="alpha_text", help="moment member multi-index, e.g. 1,1"),
        arg("--lambda", dest="lambda_text", help=LAMBDA_HELP),
        arg("--m-lambda", dest="m_lambda_text", help="point of the exponential"),
        arg("--n-max", dest="n_max", type=int),
        arg("--trials", type=int, default=Config.DEGREE_TRIALS),
    ],
)
def degree(config: RunConfig, args: Namespace) -> CommandResult:
    request = DegreeRequest(
        function_path=args.function_path,
        alpha_text=args.alpha_text,
        lambda_text=args.lambda_text,
        m_lambda_text=args.m_lambda_text,
        n_max=args.n_max,
        trials=args.trials,
    )
    hypergroup = load_hypergroup(config)
    point = parse_lambda(request.lambda_text, hypergroup, mode=config.mode)
    if request.function_path:
        function = load_function(request.function_path, hypergroup, config.mode)
    else:
        function = _moment_member(hypergroup, parse_index(request.alpha_text, hypergroup, "alpha"), point)
    m_point: Optional[tuple] = parse_lambda(request.m_lambda_text, hypergroup, "m-lambda", config.mode) or point
    if m_point is None:
        m_point = _single_point(function, "m-lambda")
    n_max = request.n_max if request.n_max is not None else max(function.order, 0)
    result = monomial_degree(
        function,
        exponential(hypergroup, m_point),
        box=config.box,
        n_max=n_max,
        trials=request.trials,
        rng=SplitMix64(config.seed),
    )
    report = {
        "command": "degree",
        "function": function_to_json(function),
        "m_lambda": _point_json(m_point),
        "n_max": n_max,
        "result": result.to_dict(),
    }
    found = result.degree is not None
    summary = f"degree: {result.degree if found else 'not found'} (certified={result.certified})"
    return CommandResult(ExitCode.OK if found else ExitCode.CHECK_FAILED, report, summary)
