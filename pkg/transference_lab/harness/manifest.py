"""Experiment manifests: what to sample, at which q, how often and from which seed."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

from marshmallow import ValidationError

from transference_lab.density import turan_density_reference
from transference_lab.errors import FormatError, InputError
from transference_lab.generators import ConfigSpec, FamilyVariant
from transference_lab.rationals import RationalLike
from transference_lab.schemas import dump_json
from transference_lab.solver import DEFAULT_NODE_BUDGET
from transference_lab.validation import validate_epsilon, validate_positive_int

logger = logging.getLogger(__name__)

MANIFEST_SCHEMA_VERSION = 1


class ScheduleKind(str, Enum):
    EXPLICIT = "explicit"
    C_GRID = "c_grid"


@dataclass(frozen=True)
class QSchedule:
    """Either literal q values or multipliers C of p_n = n^(-theta)."""

    kind: ScheduleKind
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ScheduleKind(self.kind))
        object.__setattr__(self, "values", tuple(float(value) for value in self.values))
        if any(not value > 0 for value in self.values):
            raise InputError(
                "Schedule values must be positive.", payload={"field": "schedule.values"}
            )

    @classmethod
    def explicit(cls, values: Any) -> QSchedule:
        return cls(ScheduleKind.EXPLICIT, tuple(values))

    @classmethod
    def c_grid(cls, multipliers: Any) -> QSchedule:
        return cls(ScheduleKind.C_GRID, tuple(multipliers))

    def probabilities(self, spec: ConfigSpec) -> tuple[float, ...]:
        if self.kind is ScheduleKind.EXPLICIT:
            resolved = self.values
        else:
            p_n = spec.threshold_probability()
            resolved = tuple(multiplier * p_n for multiplier in self.values)
        for value in resolved:
            if not 0 < value <= 1:
                raise InputError(
                    f"Scheduled q = {value!r} lies outside (0, 1].",
                    payload={"field": "schedule.values"},
                )
        return resolved


@dataclass(frozen=True)
class OutputPaths:
    curve: str | None = None
    report: str | None = None


@dataclass(frozen=True)
class ExperimentManifest:
    spec: ConfigSpec
    epsilon: Fraction
    schedule: QSchedule
    trials: int
    seed: int
    budget: int = DEFAULT_NODE_BUDGET
    turan_density: Fraction | None = None
    outputs: OutputPaths = field(default_factory=OutputPaths)

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilon", validate_epsilon(self.epsilon))
        validate_positive_int(self.trials, field="trials")
        validate_positive_int(self.seed, field="seed", minimum=0)
        validate_positive_int(self.budget, field="budget")
        if self.turan_density is not None:
            density = Fraction(self.turan_density)
            if not 0 <= density < 1:
                raise InputError(
                    f"turan_density must lie in [0, 1), got {density}.",
                    payload={"field": "turan_density"},
                )
            object.__setattr__(self, "turan_density", density)

    @property
    def turan_variant(self) -> bool:
        return self.spec.variant is FamilyVariant.FCOPIES

    @property
    def q_values(self) -> tuple[float, ...]:
        return self.schedule.probabilities(self.spec)

    def resolved_turan_density(self) -> Fraction:
        """The override when given, else the reference pi(F); unknown densities are refused."""

        if self.turan_density is not None:
            return self.turan_density
        reference = turan_density_reference(self.spec.require_pattern())
        if reference.value is None:
            raise InputError(
                "Turan density of the pattern is unknown; set turan_density in the manifest.",
                payload={"field": "turan_density"},
            )
        return reference.value

    def with_overrides(
        self,
        *,
        trials: int | None = None,
        seed: int | None = None,
        budget: int | None = None,
        epsilon: RationalLike | None = None,
        turan_density: RationalLike | None = None,
    ) -> ExperimentManifest:
        return ExperimentManifest(
            spec=self.spec,
            epsilon=Fraction(epsilon) if epsilon is not None else self.epsilon,
            schedule=self.schedule,
            trials=self.trials if trials is None else trials,
            seed=self.seed if seed is None else seed,
            budget=self.budget if budget is None else budget,
            turan_density=(
                self.turan_density if turan_density is None else Fraction(turan_density)
            ),
            outputs=self.outputs,
        )


def manifest_to_dict(manifest: ExperimentManifest) -> dict[str, Any]:
    from .schemas import ExperimentManifestSchema

    return ExperimentManifestSchema().dump(manifest)


def dump_manifest(manifest: ExperimentManifest) -> str:
    return dump_json(manifest_to_dict(manifest))


def manifest_from_dict(document: Any) -> ExperimentManifest:
    from .schemas import ExperimentManifestSchema

    try:
        return ExperimentManifestSchema().load(document)
    except ValidationError as exc:
        raise InputError(
            "Manifest failed validation.", payload={"errors": exc.normalized_messages()}
        ) from exc


def load_manifest(text: str) -> ExperimentManifest:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(
            f"Manifest is not valid JSON: {exc.msg} (line {exc.lineno}).",
            payload={"field": "manifest"},
        ) from exc
    return manifest_from_dict(document)


def read_manifest(path: str | Path) -> ExperimentManifest:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(
            f"Cannot read manifest {path}: {exc}", payload={"field": "manifest"}
        ) from exc
    manifest = load_manifest(text)
    logger.debug("Loaded manifest %s for family %s", path, manifest.spec.variant.value)
    return manifest


def write_manifest(manifest: ExperimentManifest, path: str | Path) -> None:
    Path(path).write_text(dump_manifest(manifest), encoding="utf-8")
