"""
Error handling utilities for the hypergroup synthesis toolkit.
"""

from typing import Any, Dict, Optional

from ..config import ErrorType, ExitCode
from ..core.exceptions import (
    HGError,
    HGInconclusiveError,
    HGRejectionError,
    HGUsageError,
    HGValidationError,
)
from ..core.scalars import scalar_to_json


def create_error_response(
    error_type: ErrorType,
    message: str,
    details: Optional[Dict] = None
) -> Dict:
    """
    Create a standardized error response.

    Args:
        error_type: The type of error that occurred.
        message: A human-readable message describing the error.
        details: Optional additional details about the error.

    Returns:
        A dictionary with the error information.
    """
    return {
        "error": {
            "type": error_type.value,
            "message": message,
            "details": details or {}
        }
    }


def exception_to_error_response(exc: HGError) -> dict[str, Any]:
    if isinstance(exc, HGValidationError):
        details = dict(exc.details)
        if exc.field is not None:
            details["field"] = exc.field
        return create_error_response(ErrorType.VALIDATION, exc.message, details)
    if isinstance(exc, HGUsageError):
        details = dict(exc.details)
        if exc.operation is not None:
            details["operation"] = exc.operation
        return create_error_response(ErrorType.USAGE, exc.message, details)
    if isinstance(exc, HGRejectionError):
        details = dict(exc.details)
        if exc.witness is not None:
            details["witness"] = [list(part) for part in exc.witness]
        if exc.value is not None:
            details["value"] = scalar_to_json(exc.value)
        return create_error_response(ErrorType.REJECTION, exc.message, details)
    if isinstance(exc, HGInconclusiveError):
        details = dict(exc.details)
        if exc.box is not None:
            details["box"] = exc.box
        return create_error_response(ErrorType.INCONCLUSIVE, exc.message, details)
    return create_error_response(ErrorType.USAGE, str(exc), {})


def exit_code_for(exc: HGError) -> ExitCode:
    if isinstance(exc, HGRejectionError):
        return ExitCode.CHECK_FAILED
    if isinstance(exc, HGInconclusiveError):
        return ExitCode.INCONCLUSIVE
    return ExitCode.USAGE
