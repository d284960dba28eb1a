"""Serialized forms of density reports and probe rows."""

from __future__ import annotations

from marshmallow import Schema, fields

from transference_lab.rationals import format_rational
from transference_lab.schemas import RationalField


class TuranDensitySchema(Schema):
    value = fields.Method("dump_value")
    provenance = fields.String(required=True)
    chromatic_number = fields.Integer(allow_none=True)

    def dump_value(self, obj) -> str:
        return format_rational(obj.value) if obj.known else "unknown"


class DensityReportSchema(Schema):
    m = RationalField(required=True)
    threshold_exponent = RationalField(required=True)
    witness = fields.Function(lambda report: list(report.witness.members))
    witness_edges = fields.Integer(required=True)
    turan = fields.Nested(TuranDensitySchema, required=True)


class InducedEdgeProbeSchema(Schema):
    m = fields.Integer(required=True)
    count = fields.Integer(required=True)
    witness = fields.Function(lambda probe: " ".join(str(v) for v in probe.witness.members))
    exact = fields.Boolean(required=True)
