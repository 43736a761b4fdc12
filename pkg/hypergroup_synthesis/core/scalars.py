"""
Scalars: rationals (``QQ``), Gaussian rationals (``QQ_I``) and complex doubles.

Real values are always stored as ``QQ`` elements, so equal values compare and
hash equally no matter how they were produced.  Containers (measures,
functions) carry their own domain and convert every scalar into it.

Complex doubles only enter through float mode, for evaluation at points that
are not rational.  Their domain is ``CC``; their values are Python ``complex``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Any, Iterable

from sympy.polys.domains import CC, QQ, QQ_I
from sympy.polys.polyerrors import CoercionFailed

from .exceptions import HGUsageError, HGValidationError

Scalar = Any
Domain = Any

EXACT_DOMAINS = (QQ, QQ_I)
FLOAT_DOMAIN = CC

_FLOAT_MARKERS = (".", "e", "E", "inf", "nan")


def is_gaussian(value: Scalar) -> bool:
    return QQ_I.of_type(value)


def is_float(value: Scalar) -> bool:
    return isinstance(value, (float, complex)) or CC.of_type(value)


def canonical(value: Scalar) -> Scalar:
    """Collapse a Gaussian rational with zero imaginary part onto ``QQ``."""
    if is_float(value):
        return complex(value)
    if is_gaussian(value):
        return value.x if not value.y else value
    return QQ.convert(value)


def domain_of(*values: Scalar) -> Domain:
    gaussian = False
    for value in values:
        if is_float(value):
            return FLOAT_DOMAIN
        if is_gaussian(value) and value.y:
            gaussian = True
    return QQ_I if gaussian else QQ


def unify(*domains: Domain) -> Domain:
    if any(domain == FLOAT_DOMAIN for domain in domains):
        return FLOAT_DOMAIN
    return QQ_I if any(domain == QQ_I for domain in domains) else QQ


def lift(value: Scalar, domain: Domain) -> Scalar:
    if domain == FLOAT_DOMAIN:
        return to_complex(value)
    if is_float(value):
        raise CoercionFailed(f"{value} is not exact")
    if domain == QQ and is_gaussian(value):
        if value.y:
            raise CoercionFailed(f"{value} is not real")
        return value.x
    return domain.convert(value)


def require_exact(domain: Domain, operation: str) -> None:
    if domain not in EXACT_DOMAINS:
        raise HGUsageError(
            f"{operation} is exact-only; float inputs are for evaluation sweeps",
            {"domain": str(domain)},
            operation=operation,
        )


def _parse_decimal(text: str, field: str) -> complex:
    try:
        value = float(text)
    except ValueError as exc:
        raise HGValidationError(f"Invalid number: {text!r}", field=field) from exc
    if not cmath.isfinite(value):
        raise HGValidationError(f"Non-finite number: {text!r}", field=field)
    return complex(value)


def _looks_decimal(text: str) -> bool:
    return any(marker in text for marker in _FLOAT_MARKERS)


def _parse_rational(text: Any, field: str, allow_float: bool = False) -> Scalar:
    if isinstance(text, bool):
        raise HGValidationError(f"Invalid rational: {text!r}", field=field)
    if isinstance(text, int):
        return QQ(text)
    if isinstance(text, Fraction):
        return QQ(text.numerator, text.denominator)
    if isinstance(text, float):
        if not allow_float:
            raise HGValidationError(
                f"Invalid rational: {text!r}", {"hint": "decimals need --mode float"}, field=field
            )
        return _parse_decimal(repr(text), field)
    if isinstance(text, str):
        text = text.strip()
        if allow_float and "/" not in text and _looks_decimal(text):
            return _parse_decimal(text, field)
        parts = text.split("/")
        try:
            if len(parts) == 1:
                return QQ(int(parts[0]))
            if len(parts) == 2:
                numerator, denominator = int(parts[0]), int(parts[1])
                if denominator == 0:
                    raise HGValidationError(f"Zero denominator in {text!r}", field=field)
                return QQ(numerator, denominator)
        except ValueError as exc:
            details = {"hint": "decimals need --mode float"} if _looks_decimal(text) else {}
            raise HGValidationError(f"Invalid rational: {text!r}", details, field=field) from exc
        raise HGValidationError(f"Invalid rational: {text!r}", field=field)
    if QQ.of_type(text):
        return text
    raise HGValidationError(f"Invalid rational: {text!r}", field=field)


def parse_scalar(value: Any, field: str = "scalar", allow_float: bool = False) -> Scalar:
    """
    Parse ``"p/q"``, an int, a ``Fraction`` or ``{"re": .., "im": ..}``.

    With ``allow_float`` a decimal (``"0.25"``, ``1e-3``) parses to a ``complex``.
    """
    if is_gaussian(value):
        return canonical(value)
    if isinstance(value, complex):
        if not allow_float:
            raise HGValidationError(f"Invalid rational: {value!r}", field=field)
        return value
    if isinstance(value, dict):
        unknown = set(value) - {"re", "im"}
        if unknown:
            raise HGValidationError(
                f"Unknown scalar keys: {', '.join(sorted(unknown))}", field=field
            )
        re = _parse_rational(value.get("re", 0), field, allow_float)
        im = _parse_rational(value.get("im", 0), field, allow_float)
        if is_float(re) or is_float(im):
            return complex(to_complex(re).real, to_complex(im).real)
        return canonical(QQ_I(re, im))
    return _parse_rational(value, field, allow_float)


def parse_point(values: Iterable[Any], field: str = "lambda", allow_float: bool = False) -> tuple:
    return tuple(parse_scalar(value, field, allow_float) for value in values)


def parse_point_text(text: str, field: str = "lambda", allow_float: bool = False) -> tuple:
    """Parse ``"1/2,3/4"``; a component may be ``re:im`` for a complex value."""
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise HGValidationError(f"Empty component in {text!r}", field=field)
        if ":" in part:
            re, im = part.split(":", 1)
            values.append(parse_scalar({"re": re, "im": im}, field, allow_float))
        else:
            values.append(parse_scalar(part, field, allow_float))
    return tuple(values)


def _rational_text(value: Scalar) -> str:
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def scalar_to_json(value: Scalar) -> Any:
    value = canonical(value)
    if is_float(value):
        return value.real if not value.imag else {"re": value.real, "im": value.imag}
    if is_gaussian(value):
        return {"re": _rational_text(value.x), "im": _rational_text(value.y)}
    return _rational_text(value)


def real_imag(value: Scalar) -> tuple[Fraction, Fraction]:
    value = canonical(value)
    if is_float(value):
        return Fraction(value.real), Fraction(value.imag)
    if is_gaussian(value):
        return (
            Fraction(int(value.x.numerator), int(value.x.denominator)),
            Fraction(int(value.y.numerator), int(value.y.denominator)),
        )
    return Fraction(int(value.numerator), int(value.denominator)), Fraction(0)


def sort_key(value: Scalar) -> tuple[Fraction, Fraction]:
    return real_imag(value)


def to_complex(value: Scalar) -> complex:
    if is_float(value) or isinstance(value, int):
        return complex(value)
    re, im = real_imag(value)
    return complex(float(re), float(im))


def is_nonnegative_real(value: Scalar) -> bool:
    value = canonical(value)
    if is_float(value):
        return not value.imag and value.real >= 0
    return not is_gaussian(value) and value >= 0


def relative_residual(lhs: complex, rhs: complex) -> float:
    scale = max(1.0, abs(lhs), abs(rhs))
    return abs(lhs - rhs) / scale


def close(lhs: complex, rhs: complex, tolerance: float) -> bool:
    if cmath.isnan(lhs) or cmath.isnan(rhs):
        return False
    return relative_residual(lhs, rhs) <= tolerance
