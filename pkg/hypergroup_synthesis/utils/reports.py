"""
Reading JSON inputs and writing deterministic JSON reports.
"""

import json
from pathlib import Path
from typing import Any, Optional

from ..config import Config
from ..core.exceptions import HGValidationError


def read_json(path: str, field: str = "spec") -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise HGValidationError(f"Cannot read {path}: {exc.strerror}", {"path": path}, field=field) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise HGValidationError(
            f"Invalid JSON in {path}: {exc.msg}",
            {"path": path, "line": exc.lineno, "column": exc.colno},
            field=field,
        ) from exc


def dumps(report: Any) -> str:
    return json.dumps(report, sort_keys=True, indent=Config.JSON_INDENT) + "\n"


def write_report(report: Any, out: Optional[str]) -> Optional[str]:
    """Write the report to ``out``; without a path, return the text for stdout."""
    text = dumps(report)
    if out is None:
        return text
    Path(out).write_text(text, encoding="utf-8")
    return None
