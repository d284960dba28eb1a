"""Serialized forms of solver results."""

from __future__ import annotations

from marshmallow import Schema, fields


class SolveResultSchema(Schema):
    alpha = fields.Integer(required=True)
    node_count = fields.Integer(required=True)
    exact = fields.Boolean(required=True)
    lower = fields.Integer(required=True)
    upper = fields.Integer(required=True)


class DecisionResultSchema(Schema):
    verdict = fields.Function(lambda result: result.verdict.value)
    size = fields.Integer(required=True)
    target = fields.Integer(required=True)
    lower = fields.Integer(required=True)
    upper = fields.Integer(required=True)
    node_count = fields.Integer(required=True)
    vacuous = fields.Boolean(required=True)
