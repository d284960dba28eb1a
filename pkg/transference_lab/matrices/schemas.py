"""JSON forms of matrix exponents and classifications (columns are 1-based)."""

from __future__ import annotations

from marshmallow import Schema, fields

from transference_lab.rationals import format_rational
from transference_lab.schemas import RationalField


def _one_based(columns) -> list[int] | None:
    if columns is None:
        return None
    return [column + 1 for column in columns]


class MatrixClassificationSchema(Schema):
    irredundant = fields.Boolean(required=True)
    partition_regular = fields.Boolean(required=True)
    density_regular = fields.Boolean(required=True)
    column_blocks = fields.Function(
        lambda result: (
            None
            if result.column_blocks is None
            else [_one_based(block) for block in result.column_blocks]
        )
    )
    failing_pair = fields.Function(lambda result: _one_based(result.failing_pair))


class MatrixExponentSchema(Schema):
    m = RationalField(attribute="value", required=True)
    threshold_exponent = fields.Function(lambda result: format_rational(1 / result.value))
    W = fields.Function(lambda result: _one_based(result.W))
    Wbar = fields.Function(lambda result: _one_based(result.Wbar))
    rank = fields.Integer(required=True)
    warnings = fields.List(fields.String(), required=True)
