"""Shared marshmallow fields and the provenance envelope of every output."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from marshmallow import Schema, ValidationError, fields

from transference_lab.errors import InputError
from transference_lab.rationals import format_rational, to_fraction


class RationalField(fields.Field):
    """Exact rational carried as ``"p/q"`` text (integers and ``"p/q"`` accepted on load)."""

    def _serialize(self, value: Fraction | int | None, attr: str | None, obj: Any, **kwargs):
        if value is None:
            return None
        return format_rational(value)

    def _deserialize(self, value: Any, attr: str | None, data: Any, **kwargs) -> Fraction:
        if isinstance(value, float):
            raise ValidationError("Rationals must be given exactly, as an integer or 'p/q'.")
        try:
            return to_fraction(value, field=attr or "value")
        except InputError as exc:
            raise ValidationError(exc.message) from exc


class ProvenanceSchema(Schema):
    tool = fields.String(required=True)
    version = fields.String(required=True)
    schema_version = fields.Integer(required=True)
    command = fields.String(required=True)
    seed = fields.Integer(allow_none=True)
    config = fields.Dict(keys=fields.String(), required=True)


class SubsetSchema(Schema):
    """A vertex subset with indices and the matching domain labels."""

    size = fields.Integer(required=True)
    indices = fields.List(fields.Integer(), required=True)
    labels = fields.List(fields.Raw(), required=True)


def dump_json(document: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""

    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
