"""Marshmallow schemas for manifests, curve rows, crossing estimates and moment reports."""

from __future__ import annotations

from typing import Any

from marshmallow import (
    Schema,
    ValidationError,
    fields,
    post_dump,
    post_load,
    pre_dump,
    validates_schema,
)
from marshmallow.validate import Equal, Length, OneOf, Range

from transference_lab.errors import InputError
from transference_lab.generators.schemas import ConfigSpecSchema
from transference_lab.schemas import RationalField

from .manifest import (
    MANIFEST_SCHEMA_VERSION,
    ExperimentManifest,
    OutputPaths,
    QSchedule,
    ScheduleKind,
)


class QScheduleSchema(Schema):
    kind = fields.String(required=True, validate=OneOf([kind.value for kind in ScheduleKind]))
    values = fields.List(
        fields.Float(allow_nan=False, validate=Range(min=0, min_inclusive=False)),
        required=True,
        validate=Length(min=1),
    )

    @pre_dump
    def schedule_to_mapping(self, schedule: QSchedule, **kwargs) -> dict[str, Any]:
        return {"kind": schedule.kind.value, "values": list(schedule.values)}

    @validates_schema
    def validate_probabilities(self, data: dict[str, Any], **kwargs) -> None:
        if data.get("kind") == ScheduleKind.EXPLICIT.value and any(v > 1 for v in data["values"]):
            raise ValidationError("Explicit q values must lie in (0, 1].", field_name="values")

    @post_load
    def make_schedule(self, data: dict[str, Any], **kwargs) -> QSchedule:
        return QSchedule(ScheduleKind(data["kind"]), tuple(data["values"]))


class OutputPathsSchema(Schema):
    curve = fields.String(load_default=None, allow_none=True)
    report = fields.String(load_default=None, allow_none=True)

    @post_dump
    def drop_unset(self, data: dict[str, Any], **kwargs) -> dict[str, Any]:
        return {key: value for key, value in data.items() if value is not None}

    @post_load
    def make_paths(self, data: dict[str, Any], **kwargs) -> OutputPaths:
        return OutputPaths(curve=data.get("curve"), report=data.get("report"))


class ExperimentManifestSchema(Schema):
    """The manifest JSON document; ``family`` carries the ConfigSpec including ``n``."""

    schema_version = fields.Integer(
        load_default=MANIFEST_SCHEMA_VERSION, validate=Equal(MANIFEST_SCHEMA_VERSION)
    )
    family = fields.Nested(ConfigSpecSchema, required=True, attribute="spec")
    epsilon = RationalField(required=True)
    schedule = fields.Nested(QScheduleSchema, required=True)
    trials = fields.Integer(required=True, strict=True, validate=Range(min=1))
    seed = fields.Integer(required=True, strict=True, validate=Range(min=0))
    budget = fields.Integer(load_default=None, strict=True, validate=Range(min=1))
    turan_density = RationalField(load_default=None, allow_none=True)
    outputs = fields.Nested(OutputPathsSchema, load_default=None)

    @pre_dump
    def add_version(self, manifest: ExperimentManifest, **kwargs) -> dict[str, Any]:
        return {
            "schema_version": MANIFEST_SCHEMA_VERSION,
            "spec": manifest.spec,
            "epsilon": manifest.epsilon,
            "schedule": manifest.schedule,
            "trials": manifest.trials,
            "seed": manifest.seed,
            "budget": manifest.budget,
            "turan_density": manifest.turan_density,
            "outputs": manifest.outputs,
        }

    @post_dump
    def drop_unset(self, data: dict[str, Any], **kwargs) -> dict[str, Any]:
        return {key: value for key, value in data.items() if value is not None}

    @post_load
    def make_manifest(self, data: dict[str, Any], **kwargs) -> ExperimentManifest:
        options: dict[str, Any] = {}
        if data.get("budget") is not None:
            options["budget"] = data["budget"]
        try:
            return ExperimentManifest(
                spec=data["spec"],
                epsilon=data["epsilon"],
                schedule=data["schedule"],
                trials=data["trials"],
                seed=data["seed"],
                turan_density=data.get("turan_density"),
                outputs=data.get("outputs") or OutputPaths(),
                **options,
            )
        except InputError as exc:
            field = str(exc.payload.get("field", "_schema"))
            raise ValidationError(exc.message, field_name=field) from exc


class CurveRowSchema(Schema):
    q = fields.Float(required=True)
    trials = fields.Integer(required=True)
    successes = fields.Integer(required=True)
    failures = fields.Integer(required=True)
    undecided = fields.Integer(required=True)
    vacuous = fields.Integer(required=True)
    estimate = fields.Float(required=True)
    ci_lo = fields.Float(required=True)
    ci_hi = fields.Float(required=True)
    unreliable = fields.Boolean(required=True)


class CrossingEstimateSchema(Schema):
    q_star = fields.Method("dump_q_star")
    method = fields.Function(lambda estimate: estimate.method.value)
    slope = fields.Float(allow_none=True)
    midpoint_log_q = fields.Float(allow_none=True)
    rows_used = fields.Integer(required=True)

    def dump_q_star(self, estimate) -> float | str:
        return "none" if estimate.q_star is None else estimate.q_star


class ThresholdCurveSchema(Schema):
    rows = fields.List(fields.Nested(CurveRowSchema), required=True)
    crossing = fields.Nested(CrossingEstimateSchema, allow_none=True)
    unreliable = fields.Boolean(required=True)


class EdgeMomentsSchema(Schema):
    q = fields.Float(required=True)
    expected_vertices = fields.Float(required=True)
    mean = fields.Float(required=True)
    variance = fields.Float(required=True)
    pair_counts = fields.List(fields.Integer(), required=True)


class MomentCheckSchema(Schema):
    expected = fields.Float(required=True)
    empirical_mean = fields.Float(required=True)
    empirical_sd = fields.Float(required=True)
    z_score = fields.Float(required=True)


class MomentValidationSchema(Schema):
    q = fields.Float(required=True)
    trials = fields.Integer(required=True)
    vertices = fields.Nested(MomentCheckSchema, required=True)
    edges = fields.Nested(MomentCheckSchema, required=True)
    within_four_sd = fields.Boolean(required=True)
