"""Matrix text format: ``rows <l> cols <k>`` followed by l rows of k integers."""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from transference_lab.errors import FormatError, InputError

from .model import IntegerMatrix


def dump_matrix(A: IntegerMatrix, *, comments: Iterable[str] = ()) -> str:
    lines = [f"rows {A.row_count} cols {A.column_count}"]
    lines.extend(f"# {comment}" for comment in comments)
    lines.extend(" ".join(str(value) for value in row) for row in A.rows)
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> IntegerMatrix:
    lines = [line.strip() for line in text.splitlines()]
    content = [line for line in lines if line and not line.startswith("#")]
    if not content:
        raise FormatError("Matrix text is empty.")

    header = content[0].split()
    if len(header) != 4 or header[0::2] != ["rows", "cols"]:
        raise FormatError(f"Malformed matrix header: {content[0]!r}")
    try:
        n_rows, n_cols = int(header[1]), int(header[3])
    except ValueError as exc:
        raise FormatError(f"Malformed matrix header: {content[0]!r}") from exc

    body = content[1:]
    if len(body) != n_rows:
        raise FormatError(f"Header announces {n_rows} rows, found {len(body)}.")
    rows = []
    for number, line in enumerate(body, start=1):
        try:
            row = tuple(int(token) for token in line.split())
        except ValueError as exc:
            raise FormatError(f"Matrix row {number} must contain integers.") from exc
        if len(row) != n_cols:
            raise FormatError(f"Matrix row {number} has {len(row)} entries, expected {n_cols}.")
        rows.append(row)
    try:
        return IntegerMatrix(tuple(rows))
    except InputError as exc:
        raise FormatError(exc.message) from exc


def read_matrix(path: str | Path) -> IntegerMatrix:
    return load_matrix(Path(path).read_text(encoding="utf-8"))


def write_matrix(A: IntegerMatrix, path: str | Path, *, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(dump_matrix(A, comments=comments), encoding="utf-8")
