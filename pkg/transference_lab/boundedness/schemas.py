"""Serialized forms of boundedness diagnostics."""

from __future__ import annotations

from marshmallow import Schema, fields


class BoundednessRowSchema(Schema):
    n = fields.Integer(required=True)
    i = fields.Integer(required=True)
    q = fields.Float(required=True)
    mu = fields.Float(required=True)
    bound_ratio = fields.Float(required=True)


class KMinSchema(Schema):
    n = fields.Integer(required=True)
    i = fields.Integer(required=True)
    k_min = fields.Float(required=True)


class BoundednessReportSchema(Schema):
    rows = fields.List(fields.Nested(BoundednessRowSchema), required=True)
    k_min = fields.Method("dump_k_min")
    overall_k_min = fields.Float(required=True)

    def dump_k_min(self, report) -> list[dict]:
        entries = [
            {"n": n, "i": i, "k_min": value} for (n, i), value in sorted(report.k_min.items())
        ]
        return KMinSchema(many=True).dump(entries)


class MonteCarloEstimateSchema(Schema):
    estimate = fields.Float(required=True)
    standard_error = fields.Float(required=True)
    trials = fields.Integer(required=True)


class PruneResultSchema(Schema):
    ok = fields.Boolean(required=True)
    deleted = fields.Function(lambda result: list(result.deleted.members))
    deleted_count = fields.Function(lambda result: result.deleted.cardinality)
    sampled_count = fields.Function(lambda result: result.sampled.cardinality)
    deletion_budget = fields.Integer(required=True)
    initial_sum = fields.Integer(required=True)
    achieved_sum = fields.Integer(required=True)
    bound = fields.Float(required=True)
