"""``sweep``, ``crossing`` and ``moments``."""

from __future__ import annotations

import logging
import sys
from contextlib import ExitStack
from pathlib import Path
from typing import Any

import click

from transference_lab.errors import InputError
from transference_lab.harness import (
    CurveWriter,
    chebyshev_upper,
    deletion_free_subset,
    estimate_crossing,
    expected_counts,
    manifest_to_dict,
    read_curve,
    read_manifest,
    surviving_edge_moments,
    sweep as run_sweep,
    validate_first_moments,
)
from transference_lab.harness.schemas import (
    CrossingEstimateSchema,
    EdgeMomentsSchema,
    MomentValidationSchema,
    ThresholdCurveSchema,
)
from transference_lab.hypergraphs import read_hypergraph
from transference_lab.rationals import format_rational, parse_rational

from .common import (
    EXIT_OK,
    EXIT_UNRELIABLE,
    budget_option,
    emit_json,
    hypergraph_option,
    jobs_option,
    lab_from,
    load_subset_option,
    output_option,
    provenance,
    provenance_comments,
    seed_option,
    subset_option,
    subset_payload,
)

logger = logging.getLogger(__name__)


def _manifest_relative(manifest_path: str, target: str | None) -> str | None:
    if target is None:
        return None
    path = Path(target)
    return str(path if path.is_absolute() else Path(manifest_path).parent / path)


@click.command("sweep")
@click.option(
    "--manifest",
    "manifest_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Experiment manifest JSON.",
)
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Override trials per q.")
@seed_option
@budget_option
@click.option("--epsilon", default=None, help="Override epsilon, e.g. 1/2.")
@click.option("--alpha", "density", default=None, help="Override pi(F) for the Turan variant.")
@jobs_option
@output_option("Curve CSV to write (default: the manifest's curve path, else stdout).")
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Also write the curve and crossing estimate as JSON.",
)
@click.pass_context
def sweep(
    ctx: click.Context,
    manifest_path: str,
    trials: int | None,
    seed: int | None,
    budget: int | None,
    epsilon: str | None,
    density: str | None,
    jobs: int | None,
    output: str | None,
    report_path: str | None,
) -> int:
    """Estimate the success probability at every scheduled q and write the threshold curve."""

    lab = lab_from(ctx)
    manifest = read_manifest(manifest_path).with_overrides(
        trials=trials,
        seed=seed,
        budget=budget,
        epsilon=parse_rational(epsilon, field="epsilon") if epsilon is not None else None,
        turan_density=parse_rational(density, field="alpha") if density is not None else None,
    )
    curve_path = output or _manifest_relative(manifest_path, manifest.outputs.curve)
    report_path = report_path or _manifest_relative(manifest_path, manifest.outputs.report)

    config: dict[str, Any] = {
        key: value for key, value in manifest_to_dict(manifest).items() if key != "outputs"
    }
    if manifest.turan_variant:
        config["turan_density"] = format_rational(manifest.resolved_turan_density())
    header = provenance(lab, "sweep", config, manifest.seed)

    with ExitStack() as stack:
        if curve_path is None:
            stream = sys.stdout
        else:
            try:
                stream = stack.enter_context(open(curve_path, "w", encoding="utf-8", newline=""))
            except OSError as exc:
                raise InputError(
                    f"Cannot write {curve_path}: {exc}", payload={"field": "output"}
                ) from exc
        writer = CurveWriter(stream, provenance_comments(header))
        curve = run_sweep(
            manifest,
            jobs=jobs or lab.jobs,
            tolerance=lab["UNDECIDED_TOLERANCE"],
            on_row=writer.write_row,
        )

    if report_path is not None:
        emit_json(header, ThresholdCurveSchema().dump(curve), report_path)
    if curve.unreliable:
        logger.warning("Sweep finished with rows over the undecided tolerance")
        return EXIT_UNRELIABLE
    return EXIT_OK


@click.command("crossing")
@click.option(
    "--curve",
    "curve_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Curve CSV written by sweep.",
)
@output_option()
@click.pass_context
def crossing(ctx: click.Context, curve_path: str, output: str | None) -> int:
    """q where the fitted success probability crosses 1/2, or "none"."""

    lab = lab_from(ctx)
    curve = read_curve(curve_path)
    estimate = estimate_crossing(curve)
    emit_json(
        provenance(lab, "crossing", {"curve": curve_path}),
        CrossingEstimateSchema().dump(estimate),
        output,
    )
    return EXIT_OK


@click.command("moments")
@hypergraph_option
@click.option("--q", "q", type=click.FloatRange(0.0, 1.0), required=True)
@click.option(
    "--slack",
    type=click.FloatRange(0.0, min_open=True),
    default=0.5,
    show_default=True,
    help="Relative excess for the Chebyshev bound on surviving edges.",
)
@click.option(
    "--trials",
    type=click.IntRange(min=0),
    default=None,
    help="Sampled trials for the empirical check (profile default; 0 skips it).",
)
@subset_option
@seed_option
@jobs_option
@output_option()
@click.pass_context
def moments(
    ctx: click.Context,
    hypergraph_path: str,
    q: float,
    slack: float,
    trials: int | None,
    subset_path: str | None,
    seed: int | None,
    jobs: int | None,
    output: str | None,
) -> int:
    """Expected counts, edge-count variance and a deletion-method edge-free subset."""

    lab = lab_from(ctx)
    H = read_hypergraph(hypergraph_path)
    X = load_subset_option(H, subset_path)
    trials = lab["MONTECARLO_TRIALS"] if trials is None else trials
    seed = lab.seed if seed is None else seed

    vertices, edges = expected_counts(H, q)
    document: dict[str, Any] = {
        "expected_counts": {"vertices": vertices, "edges": edges},
        "moments": EdgeMomentsSchema().dump(surviving_edge_moments(H, q)),
        "chebyshev": {"slack": slack, "upper": chebyshev_upper(H, q, slack)},
        "deletion": subset_payload(H, deletion_free_subset(H, X)),
        "validation": None,
    }
    config: dict[str, Any] = {
        "hypergraph": hypergraph_path,
        "q": q,
        "slack": slack,
        "trials": trials,
        "subset": subset_path,
    }
    code = EXIT_OK
    if trials > 0:
        validation = validate_first_moments(H, q, trials, seed, jobs=jobs or lab.jobs)
        document["validation"] = MomentValidationSchema().dump(validation)
        if not validation.within_four_sd:
            logger.warning("Sampled counts drift more than four standard errors from the means")
            code = EXIT_UNRELIABLE
    emit_json(provenance(lab, "moments", config, seed if trials > 0 else None), document, output)
    return code
