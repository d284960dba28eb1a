"""Seeded sampling, threshold sweeps, crossing estimates and moment demonstrations."""

from .crossing import CrossingEstimate, CrossingMethod, estimate_crossing
from .curve_io import CURVE_HEADER, CurveWriter, dump_curve, load_curve, read_curve
from .manifest import (
    MANIFEST_SCHEMA_VERSION,
    ExperimentManifest,
    OutputPaths,
    QSchedule,
    ScheduleKind,
    dump_manifest,
    load_manifest,
    manifest_from_dict,
    manifest_to_dict,
    read_manifest,
    write_manifest,
)
from .moments import (
    EdgeMoments,
    MomentCheck,
    MomentValidation,
    chebyshev_upper,
    deletion_free_subset,
    expected_counts,
    pair_intersection_counts,
    surviving_edge_moments,
    validate_first_moments,
)
from .sampling import sample_subset
from .trials import (
    DEFAULT_UNDECIDED_TOLERANCE,
    CurveRow,
    ThresholdCurve,
    run_trials,
    summarize_row,
    sweep,
    wilson_interval,
)

__all__ = [
    "CrossingEstimate",
    "CrossingMethod",
    "estimate_crossing",
    "CURVE_HEADER",
    "CurveWriter",
    "dump_curve",
    "load_curve",
    "read_curve",
    "MANIFEST_SCHEMA_VERSION",
    "ExperimentManifest",
    "OutputPaths",
    "QSchedule",
    "ScheduleKind",
    "dump_manifest",
    "load_manifest",
    "manifest_from_dict",
    "manifest_to_dict",
    "read_manifest",
    "write_manifest",
    "EdgeMoments",
    "MomentCheck",
    "MomentValidation",
    "chebyshev_upper",
    "deletion_free_subset",
    "expected_counts",
    "pair_intersection_counts",
    "surviving_edge_moments",
    "validate_first_moments",
    "sample_subset",
    "DEFAULT_UNDECIDED_TOLERANCE",
    "CurveRow",
    "ThresholdCurve",
    "run_trials",
    "summarize_row",
    "sweep",
    "wilson_interval",
]
