"""
Loading hypergroups, functions and points from command arguments.
"""

from typing import Optional

from ..core.codec import function_from_json, parse_element
from ..core.exceptions import HGValidationError
from ..core.functions import HFunction
from ..core.hypergroup import Hypergroup, hypergroup_from_spec
from ..core.requests import RunConfig
from ..core.scalars import parse_point_text
from ..utils.reports import read_json


def load_hypergroup(config: RunConfig) -> Hypergroup:
    return hypergroup_from_spec(read_json(config.spec_path, field="spec"))


def load_function(path: str, hypergroup: Hypergroup, mode: str = "exact") -> HFunction:
    return function_from_json(read_json(path, field="function"), hypergroup, allow_float=mode == "float")


def parse_lambda(
    text: Optional[str], hypergroup: Hypergroup, field: str = "lambda", mode: str = "exact"
) -> Optional[tuple]:
    """Decimal components are accepted in float mode only."""
    if text is None:
        return None
    point = parse_point_text(text, field, allow_float=mode == "float")
    if len(point) != hypergroup.dimension:
        raise HGValidationError(
            f"--{field} has {len(point)} components, expected {hypergroup.dimension}",
            field=field,
        )
    return point


def parse_index(text: str, hypergroup: Hypergroup, field: str) -> tuple[int, ...]:
    return parse_element(text, hypergroup.dimension, field=field)
