"""Exception types shared across the package."""

from __future__ import annotations


class DctcoError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(DctcoError):
    """An input violated a documented invariant.

    Carries ``field_path`` (dotted path into the offending document or
    argument, empty when the error is not tied to a field) and ``reason``.
    """

    def __init__(self, reason: str, field_path: str = "") -> None:
        self.reason = reason
        self.field_path = field_path
        message = f"{field_path}: {reason}" if field_path else reason
        super().__init__(message)


class ParseError(DctcoError):
    """A scenario document could not be parsed at all (malformed JSON)."""


class UnknownRoleError(DctcoError, KeyError):
    """A role name was not found in a report or scenario."""

    def __init__(self, role_name: str, known: tuple[str, ...] = ()) -> None:
        self.role_name = role_name
        self.known = known
        detail = f"unknown role {role_name!r}"
        if known:
            detail += f" (known roles: {', '.join(known)})"
        super().__init__(detail)

    def __str__(self) -> str:  # KeyError would repr() the message
        return self.args[0]


class UnknownScenarioError(DctcoError, KeyError):
    """A scenario name did not resolve to any loadable document."""

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"unknown scenario {name!r}")

    def __str__(self) -> str:
        return self.args[0]
