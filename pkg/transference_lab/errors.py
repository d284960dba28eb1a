"""Library-wide error types and their command-line rendering."""

from __future__ import annotations

from typing import Any


class LabError(Exception):
    """Base class for errors surfaced to library callers and the CLI."""

    exit_code: int = 2

    def __init__(
        self, message: str, *, exit_code: int | None = None, payload: dict[str, Any] | None = None
    ):
        super().__init__(message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.payload = payload or {}


class InputError(LabError):
    """Raised when an operation's precondition is violated by its input."""

    exit_code = 2


class FormatError(InputError):
    """Raised for malformed hypergraph, matrix, subset or curve text."""


class ContractViolationError(LabError):
    """Raised when an input falls outside a class the computation relies on."""

    exit_code = 2


DEFAULT_EXIT_MESSAGES: dict[int, str] = {
    1: "Result flagged unreliable.",
    2: "Input could not be processed.",
}


def error_payload(error: LabError) -> dict[str, Any]:
    """Render an error as a JSON-ready mapping for the error stream."""

    message = error.message or DEFAULT_EXIT_MESSAGES.get(error.exit_code, "Command failed.")
    response: dict[str, Any] = {"message": message, "exit_code": error.exit_code}
    payload = dict(error.payload)

    field_errors = _derive_field_errors(payload, default_message=message)
    payload.pop("errors", None)
    response.update(payload)
    if field_errors:
        response["field_errors"] = field_errors
    return response


def _derive_field_errors(
    payload: dict[str, Any],
    *,
    default_message: str | None = None,
) -> dict[str, list[str]]:
    """Translate payload fields into a flat field_errors mapping."""

    if not payload:
        return {}

    if isinstance(payload.get("errors"), dict):
        return _flatten_error_tree(payload["errors"])

    field = payload.get("field")
    if field and default_message:
        return {str(field): [default_message]}

    return {}


def _flatten_error_tree(errors: dict[str, Any]) -> dict[str, list[str]]:
    collected: dict[tuple[str, ...], list[str]] = {}

    def visit(node: Any, path: tuple[str, ...]) -> None:
        if isinstance(node, dict):
            for key, value in node.items():
                visit(value, path + (str(key),))
            return

        if isinstance(node, list):
            for item in node:
                visit(item, path)
            return

        if node is None:
            return

        message = node if isinstance(node, str) else str(node)
        key = path or ("non_field_errors",)
        collected.setdefault(key, []).append(message)

    visit(errors, tuple())

    flattened: dict[str, list[str]] = {}
    for path, messages in collected.items():
        key_str = ".".join(part for part in path if part) or "non_field_errors"
        flattened.setdefault(key_str, []).extend(messages)

    return flattened
