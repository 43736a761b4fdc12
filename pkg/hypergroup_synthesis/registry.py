"""
Central definition of the command registry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .config import ExitCode


@dataclass
class CommandResult:
    exit_code: ExitCode
    report: dict[str, Any]
    summary: str


@dataclass(frozen=True)
class Argument:
    flags: tuple[str, ...]
    options: dict[str, Any] = field(default_factory=dict)


def arg(*flags: str, **options: Any) -> Argument:
    return Argument(flags, options)


@dataclass
class Command:
    name: str
    handler: Callable[..., CommandResult]
    help: str
    arguments: list[Argument]


class CommandRegistry:
    def __init__(self, name: str) -> None:
        self.name = name
        self._commands: dict[str, Command] = {}

    def command(self, name: str, help: str = "", arguments: Optional[list[Argument]] = None):
        def register(handler: Callable[..., CommandResult]) -> Callable[..., CommandResult]:
            self._commands[name] = Command(name, handler, help, list(arguments or []))
            return handler

        return register

    def get(self, name: str) -> Command:
        return self._commands[name]

    def __iter__(self):
        return iter(self._commands.values())


# Create the registry instance
registry = CommandRegistry("hypergroup-synthesis")
