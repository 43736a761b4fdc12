from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(eq=False)
class HGError(Exception):
    message: str
    details: dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        return self.message


@dataclass(eq=False)
class HGUsageError(HGError):
    operation: Optional[str] = None


@dataclass(eq=False)
class HGValidationError(HGError):
    field: Optional[str] = None


@dataclass(eq=False)
class HGRejectionError(HGError):
    witness: Optional[tuple] = None
    value: Any = None


@dataclass(eq=False)
class HGInconclusiveError(HGError):
    box: Optional[int] = None
