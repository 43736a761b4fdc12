"""
Measure algebra commands: convolution of point masses and the Fourier transform.
"""

from argparse import Namespace

from ..config import ExitCode
from ..core.codec import (
    measure_from_json,
    measure_to_json,
    parse_element,
    poly_from_json,
    poly_to_json,
)
from ..core.exceptions import HGUsageError
from ..core.measures import fourier, inverse_fourier
from ..core.requests import ConvRequest, FourierRequest, RunConfig
from ..registry import CommandResult, arg, registry
from ..utils.reports import read_json
from .inputs import load_hypergroup


@registry.command(
    "conv",
    help="convolution of two point masses",
    arguments=[
        arg("--x", required=True, help="element, e.g. 3 or 1,1"),
        arg("--y", required=True, help="element, e.g. 4 or 1,1"),
    ],
)
def conv(config: RunConfig, args: Namespace) -> CommandResult:
    request = ConvRequest(x=args.x, y=args.y)
    hypergroup = load_hypergroup(config)
    x = parse_element(request.x, hypergroup.dimension, field="x")
    y = parse_element(request.y, hypergroup.dimension, field="y")
    measure = hypergroup.linearization(x, y)
    report = {
        "command": "conv",
        "x": list(x),
        "y": list(y),
        "measure": measure_to_json(measure),
    }
    summary = f"conv: {list(x)} * {list(y)} has {len(measure.support)} support points"
    return CommandResult(ExitCode.OK, report, summary)


@registry.command(
    "fourier",
    help="Fourier transform of a measure, or the inverse transform of a polynomial",
    arguments=[
        arg("--measure", dest="measure_path", help="JSON file with {point, re, im} entries"),
        arg("--poly", dest="poly_path", help="JSON file with {alpha, coeff} terms"),
    ],
)
def fourier_command(config: RunConfig, args: Namespace) -> CommandResult:
    request = FourierRequest(measure_path=args.measure_path, poly_path=args.poly_path)
    if config.mode != "exact":
        raise HGUsageError("The Fourier transform is exact-only", operation="fourier")
    hypergroup = load_hypergroup(config)
    if request.measure_path is not None:
        measure = measure_from_json(read_json(request.measure_path, field="measure"), hypergroup)
        poly = fourier(measure)
        report = {
            "command": "fourier",
            "direction": "forward",
            "measure": measure_to_json(measure),
            "poly": poly_to_json(poly),
        }
        summary = f"fourier: transform has {len(report['poly'])} terms of degree {poly.degree}"
    else:
        poly = poly_from_json(read_json(request.poly_path, field="poly"), hypergroup.dimension)
        measure = inverse_fourier(poly, hypergroup)
        report = {
            "command": "fourier",
            "direction": "inverse",
            "poly": poly_to_json(poly),
            "measure": measure_to_json(measure),
        }
        summary = f"fourier: inverse transform has {len(measure.support)} support points"
    return CommandResult(ExitCode.OK, report, summary)
