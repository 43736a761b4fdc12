from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from ..config import VALID_EQUATION_KINDS, VALID_MODES, Config
from .exceptions import HGValidationError


def _raise_validation(message: str, details: Optional[dict[str, Any]] = None, field: Optional[str] = None) -> None:
    raise HGValidationError(message=message, details=details or {}, field=field)


def _require(value: Any, field: str, kind: str) -> None:
    if value is None:
        _raise_validation(f"--{field} is required for {kind}", field=field)


@dataclass(slots=True)
class RunConfig:
    command: str
    spec_path: Optional[str] = None
    box: int = Config.DEFAULT_BOX
    mode: str = "exact"
    tolerance: float = Config.FLOAT_TOLERANCE
    seed: int = Config.DEFAULT_SEED
    jobs: int = Config.JOBS
    out: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.spec_path:
            _raise_validation("A hypergroup spec file is required", field="spec")
        if self.box < 1:
            _raise_validation(f"Box must be at least 1, got {self.box}", field="box")
        if self.mode not in VALID_MODES:
            _raise_validation(
                f"Invalid mode: {self.mode}",
                {"valid_modes": list(VALID_MODES)},
                field="mode",
            )
        if self.mode == "float" and not self.tolerance > 0:
            _raise_validation(f"Tolerance must be positive, got {self.tolerance}", field="tol")
        if self.jobs < 1:
            _raise_validation(f"jobs must be at least 1, got {self.jobs}", field="jobs")


@dataclass(slots=True)
class ConvRequest:
    x: str
    y: str

    def __post_init__(self) -> None:
        for name in ("x", "y"):
            if not getattr(self, name).strip():
                _raise_validation(f"--{name} cannot be empty", field=name)


@dataclass(slots=True)
class FourierRequest:
    measure_path: Optional[str] = None
    poly_path: Optional[str] = None

    def __post_init__(self) -> None:
        if (self.measure_path is None) == (self.poly_path is None):
            _raise_validation("Pass exactly one of --measure or --poly", field="measure")


@dataclass(slots=True)
class CheckEquationRequest:
    kind: str
    lambda_text: Optional[str] = None
    m_lambda_text: Optional[str] = None
    a_text: Optional[str] = None
    alpha_text: Optional[str] = None
    order: Optional[int] = None
    function_path: Optional[str] = None
    trials: int = Config.DEGREE_TRIALS

    def __post_init__(self) -> None:
        if self.kind not in VALID_EQUATION_KINDS:
            _raise_validation(
                f"Invalid equation kind: {self.kind}",
                {"valid_kinds": list(VALID_EQUATION_KINDS)},
                field="kind",
            )
        if self.kind == "exponential" and self.function_path is None:
            _require(self.lambda_text, "lambda", "exponential")
        if self.kind == "sine":
            if self.function_path is None:
                _require(self.lambda_text, "lambda", "sine")
                _require(self.a_text, "a", "sine")
            elif self.lambda_text is None and self.m_lambda_text is None:
                _raise_validation("--lambda or --m-lambda is required for sine", field="lambda")
        if self.kind == "moment":
            _require(self.lambda_text, "lambda", "moment")
            _require(self.alpha_text, "alpha", "moment")
        if self.kind == "degree":
            _require(self.order, "order", "degree")
            if self.function_path is None:
                _require(self.alpha_text, "alpha", "degree")
                _require(self.lambda_text, "lambda", "degree")
            if self.order is not None and self.order < 0:
                _raise_validation("--order must be nonnegative", field="order")
        if self.trials < 1:
            _raise_validation("--trials must be at least 1", field="trials")


@dataclass(slots=True)
class DegreeRequest:
    function_path: Optional[str] = None
    alpha_text: Optional[str] = None
    lambda_text: Optional[str] = None
    m_lambda_text: Optional[str] = None
    n_max: Optional[int] = None
    trials: int = Config.DEGREE_TRIALS

    def __post_init__(self) -> None:
        if self.function_path is None:
            _require(self.alpha_text, "alpha", "degree")
            _require(self.lambda_text, "lambda", "degree")
        if self.n_max is not None and self.n_max < 0:
            _raise_validation("--n-max must be nonnegative", field="n-max")
        if self.trials < 1:
            _raise_validation("--trials must be at least 1", field="trials")


@dataclass(slots=True)
class SynthRequest:
    function_path: str
    lambda_text: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.function_path:
            _raise_validation("--function is required", field="function")
