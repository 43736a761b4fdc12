"""
JSON forms of elements, measures, functions and polynomials.

Scalars are ``"p/q"`` strings or ``{"re": "p/q", "im": "p/q"}`` objects; complex
doubles from float mode are written as JSON numbers.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

from .exceptions import HGUsageError, HGValidationError
from .measures import Measure
from .polyring import MultiPoly, multi_index
from .scalars import parse_point, parse_scalar, real_imag, scalar_to_json

if TYPE_CHECKING:
    from .functions import Atom, HFunction
    from .hypergroup import Element, Hypergroup


def _fraction_text(value) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_element(value: Any, dimension: int, field: str = "element") -> "Element":
    """Accept ``"1,1"``, ``"3"``, ``[1, 1]`` or ``3``."""
    if isinstance(value, str):
        parts = [part.strip() for part in value.split(",")]
        try:
            entries = [int(part) for part in parts]
        except ValueError as exc:
            raise HGValidationError(f"Invalid element: {value!r}", field=field) from exc
    elif isinstance(value, int) and not isinstance(value, bool):
        entries = [value]
    elif isinstance(value, (list, tuple)):
        if any(isinstance(entry, bool) or not isinstance(entry, int) for entry in value):
            raise HGValidationError(f"Invalid element: {value!r}", field=field)
        entries = list(value)
    else:
        raise HGValidationError(f"Invalid element: {value!r}", field=field)
    if len(entries) != dimension or any(entry < 0 for entry in entries):
        raise HGValidationError(
            f"Element {entries} is not in N^{dimension}",
            {"dimension": dimension},
            field=field,
        )
    return tuple(entries)


# Measures

def measure_to_json(mu: Measure) -> list[dict[str, Any]]:
    entries = []
    for point, weight in mu.items():
        re, im = real_imag(weight)
        entries.append({"point": list(point), "re": _fraction_text(re), "im": _fraction_text(im)})
    return entries


def measure_from_json(data: Any, hypergroup: "Hypergroup") -> Measure:
    if not isinstance(data, list):
        raise HGValidationError("A measure is a list of {point, re, im} entries", field="measure")
    weights = []
    for index, entry in enumerate(data):
        if not isinstance(entry, dict) or "point" not in entry:
            raise HGValidationError(f"Measure entry {index} needs a 'point'", field="measure")
        point = parse_element(entry["point"], hypergroup.dimension, field=f"measure[{index}].point")
        weight = parse_scalar({"re": entry.get("re", 0), "im": entry.get("im", 0)}, f"measure[{index}]")
        weights.append((point, weight))
    return Measure.build(hypergroup, weights)


# Functions

def atom_to_json(atom: "Atom") -> dict[str, Any]:
    alpha, point = atom
    return {"alpha": list(alpha), "lambda": [scalar_to_json(value) for value in point]}


def function_to_json(f: "HFunction") -> list[dict[str, Any]]:
    return [
        {"coeff": scalar_to_json(coeff), "alpha": list(alpha), "lambda": [scalar_to_json(v) for v in point]}
        for coeff, alpha, point in f.terms()
    ]


def function_from_json(data: Any, hypergroup: "Hypergroup", allow_float: bool = False) -> "HFunction":
    """Accept a term list or ``{"terms": [...]}``; ``allow_float`` admits decimal scalars."""
    from .functions import HFunction

    if isinstance(data, dict):
        data = data.get("terms")
    if not isinstance(data, list):
        raise HGValidationError("A function is a list of {coeff, alpha, lambda} terms", field="function")
    terms = []
    for index, entry in enumerate(data):
        field = f"function[{index}]"
        if not isinstance(entry, dict):
            raise HGValidationError(f"Term {index} must be an object", field=field)
        missing = [key for key in ("coeff", "alpha", "lambda") if key not in entry]
        if missing:
            raise HGValidationError(f"Term {index} is missing {', '.join(missing)}", field=field)
        try:
            alpha = multi_index(entry["alpha"], hypergroup.dimension)
        except (HGUsageError, TypeError, ValueError) as exc:
            raise HGValidationError(f"Invalid alpha in term {index}", field=f"{field}.alpha") from exc
        point = parse_point(entry["lambda"], f"{field}.lambda", allow_float)
        if len(point) != hypergroup.dimension:
            raise HGValidationError(
                f"lambda in term {index} has length {len(point)}, expected {hypergroup.dimension}",
                field=f"{field}.lambda",
            )
        terms.append((parse_scalar(entry["coeff"], f"{field}.coeff", allow_float), alpha, point))
    return HFunction.build(hypergroup, terms)


# Polynomials

def poly_to_json(p: MultiPoly) -> list[dict[str, Any]]:
    return [{"alpha": list(alpha), "coeff": scalar_to_json(coeff)} for alpha, coeff in p.terms()]


def poly_from_json(data: Any, dimension: int) -> MultiPoly:
    if isinstance(data, dict):
        data = data.get("terms")
    if not isinstance(data, list):
        raise HGValidationError("A polynomial is a list of {alpha, coeff} terms", field="poly")
    terms = []
    for index, entry in enumerate(data):
        if not isinstance(entry, dict) or "alpha" not in entry or "coeff" not in entry:
            raise HGValidationError(f"Polynomial term {index} needs alpha and coeff", field="poly")
        try:
            alpha = multi_index(entry["alpha"], dimension)
        except (HGUsageError, TypeError, ValueError) as exc:
            raise HGValidationError(f"Invalid alpha in polynomial term {index}", field="poly") from exc
        terms.append((alpha, parse_scalar(entry["coeff"], f"poly[{index}].coeff")))
    return MultiPoly.from_terms(dimension, terms)
