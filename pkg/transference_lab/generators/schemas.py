"""Marshmallow schemas for configuration family descriptions."""

from __future__ import annotations

from typing import Any

from marshmallow import Schema, ValidationError, fields, post_dump, post_load, pre_dump
from marshmallow.validate import OneOf, Range

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph
from transference_lab.matrices import IntegerMatrix

from .copies import named_pattern
from .spec import ConfigSpec, FamilyVariant


class PatternField(fields.Field):
    """A pattern hypergraph given by name (``"K3"``) or as an explicit edge list."""

    def _serialize(self, value: UniformHypergraph | None, attr: str | None, obj: Any, **kwargs):
        if value is None:
            return None
        return {
            "uniformity": value.uniformity,
            "vertices": value.vertex_count,
            "edges": [list(edge) for edge in value.edges],
        }

    def _deserialize(self, value: Any, attr: str | None, data: Any, **kwargs) -> UniformHypergraph:
        try:
            if isinstance(value, str):
                return named_pattern(value)
            if isinstance(value, dict):
                return UniformHypergraph(
                    int(value["uniformity"]),
                    int(value["vertices"]),
                    tuple(tuple(edge) for edge in value.get("edges", [])),
                )
        except (InputError, KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"Invalid pattern: {exc}") from exc
        raise ValidationError("Pattern must be a name or an object with uniformity/vertices/edges.")


class ConfigSpecSchema(Schema):
    family = fields.String(
        required=True, validate=OneOf([variant.value for variant in FamilyVariant])
    )
    n = fields.Integer(required=True, strict=True, validate=Range(min=1))
    k = fields.Integer(load_default=None, strict=True, validate=Range(min=3))
    dimension = fields.Integer(load_default=None, strict=True, validate=Range(min=1))
    points = fields.List(fields.List(fields.Integer(strict=True)), load_default=None)
    matrix = fields.List(fields.List(fields.Integer(strict=True)), load_default=None)
    pattern = PatternField(load_default=None)

    @pre_dump
    def spec_to_mapping(self, spec: ConfigSpec, **kwargs) -> dict[str, Any]:
        return {
            "family": spec.variant.value,
            "n": spec.n,
            "k": spec.k,
            "dimension": spec.dimension,
            "points": [list(point) for point in spec.points] if spec.points else None,
            "matrix": spec.matrix.as_lists() if spec.matrix is not None else None,
            "pattern": spec.pattern,
        }

    @post_dump
    def drop_unset(self, data: dict[str, Any], **kwargs) -> dict[str, Any]:
        return {key: value for key, value in data.items() if value is not None}

    @post_load
    def make_spec(self, data: dict[str, Any], **kwargs) -> ConfigSpec:
        try:
            matrix = IntegerMatrix.of(data["matrix"]) if data.get("matrix") else None
            points = tuple(tuple(point) for point in data["points"]) if data.get("points") else None
            return ConfigSpec(
                FamilyVariant(data["family"]),
                data["n"],
                k=data.get("k"),
                dimension=data.get("dimension"),
                points=points,
                matrix=matrix,
                pattern=data.get("pattern"),
            )
        except InputError as exc:
            field = str(exc.payload.get("field", "_schema"))
            raise ValidationError(exc.message, field_name=field) from exc
