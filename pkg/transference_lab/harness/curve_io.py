"""Threshold curves as CSV: ``# `` provenance lines, then a fixed header and one row per q."""

from __future__ import annotations

import csv
import io
import logging
from collections.abc import Iterable
from pathlib import Path
from typing import IO, Any

from transference_lab.errors import FormatError, InputError

from .trials import DEFAULT_UNDECIDED_TOLERANCE, CurveRow, ThresholdCurve

logger = logging.getLogger(__name__)

CURVE_HEADER = ("q", "trials", "successes", "undecided", "estimate", "ci_lo", "ci_hi")


def _format_float(value: float) -> str:
    return repr(float(value))


def curve_record(row: CurveRow) -> list[str]:
    return [
        _format_float(row.q),
        str(row.trials),
        str(row.successes),
        str(row.undecided),
        _format_float(row.estimate),
        _format_float(row.ci_lo),
        _format_float(row.ci_hi),
    ]


class CurveWriter:
    """Append-only CSV sink; every row is flushed as soon as it is written."""

    def __init__(self, stream: IO[str], comments: Iterable[str] = ()) -> None:
        self._stream = stream
        for comment in comments:
            stream.write(f"# {comment}\n")
        self._writer = csv.writer(stream, lineterminator="\n")
        self._writer.writerow(CURVE_HEADER)
        stream.flush()

    def write_row(self, row: CurveRow) -> None:
        self._writer.writerow(curve_record(row))
        self._stream.flush()


def dump_curve(curve: ThresholdCurve | Iterable[CurveRow], comments: Iterable[str] = ()) -> str:
    buffer = io.StringIO()
    writer = CurveWriter(buffer, comments)
    for row in getattr(curve, "rows", curve):
        writer.write_row(row)
    return buffer.getvalue()


def _parse_record(record: dict[str, Any], line: int, tolerance: float) -> CurveRow:
    try:
        trials = int(record["trials"])
        undecided = int(record["undecided"])
        return CurveRow(
            q=float(record["q"]),
            trials=trials,
            successes=int(record["successes"]),
            undecided=undecided,
            vacuous=0,
            estimate=float(record["estimate"]),
            ci_lo=float(record["ci_lo"]),
            ci_hi=float(record["ci_hi"]),
            unreliable=undecided > tolerance * trials,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(
            f"Malformed curve row on line {line}.", payload={"field": "curve"}
        ) from exc


def load_curve(text: str, *, tolerance: float = DEFAULT_UNDECIDED_TOLERANCE) -> ThresholdCurve:
    """Parse curve CSV; comment lines are skipped, the header must match exactly."""

    lines = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not lines:
        raise FormatError("Curve file has no header.", payload={"field": "curve"})
    reader = csv.reader(lines)
    header = tuple(next(reader))
    if header != CURVE_HEADER:
        raise FormatError(
            f"Curve header must be {','.join(CURVE_HEADER)}, got {','.join(header)}.",
            payload={"field": "curve"},
        )
    rows = []
    for line, values in enumerate(reader, start=2):
        if len(values) != len(CURVE_HEADER):
            raise FormatError(
                f"Curve row {line} has {len(values)} columns.", payload={"field": "curve"}
            )
        row = _parse_record(dict(zip(CURVE_HEADER, values, strict=True)), line, tolerance)
        if row.successes + row.undecided > row.trials:
            raise FormatError(
                f"Curve row {line} counts more outcomes than trials.", payload={"field": "curve"}
            )
        rows.append(row)
    return ThresholdCurve(rows=tuple(rows))


def read_curve(path: str | Path) -> ThresholdCurve:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"Cannot read curve {path}: {exc}", payload={"field": "curve"}) from exc
    curve = load_curve(text)
    logger.debug("Read %s curve rows from %s", len(curve.rows), path)
    return curve
