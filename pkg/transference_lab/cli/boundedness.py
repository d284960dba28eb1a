"""``mu``, ``bounded`` and ``prune``."""

from __future__ import annotations

import click

from transference_lab.boundedness import (
    QGrid,
    bound_ratio,
    certify_boundedness,
    mu_exact,
    mu_montecarlo,
    prune_check,
)
from transference_lab.boundedness.schemas import BoundednessReportSchema, PruneResultSchema
from transference_lab.errors import InputError
from transference_lab.hypergraphs import read_hypergraph

from .common import (
    build_spec,
    csv_text,
    emit_json,
    family_options,
    hypergraph_option,
    jobs_option,
    lab_from,
    output_option,
    provenance,
    seed_option,
    spec_config,
    write_output,
)

MU_COLUMNS = ("n", "i", "q", "mu", "bound_ratio")


@click.command("mu")
@hypergraph_option
@click.option("--i", "level", type=click.IntRange(min=1), required=True, help="Level i.")
@click.option("--q", "q", type=click.FloatRange(0.0, 1.0), required=True, help="Probability q.")
@click.option(
    "--trials",
    type=click.IntRange(min=1),
    default=None,
    help="Estimate by sampling with this many trials instead of exactly.",
)
@seed_option
@jobs_option
@output_option()
@click.pass_context
def mu(
    ctx: click.Context,
    hypergraph_path: str,
    level: int,
    q: float,
    trials: int | None,
    seed: int | None,
    jobs: int | None,
    output: str | None,
) -> int:
    """mu_i(H, q) = E[sum_v deg_i(v, V_q)^2] as one CSV row (n = |V|)."""

    lab = lab_from(ctx)
    H = read_hypergraph(hypergraph_path)
    if H.edge_count == 0:
        raise InputError("empty configuration family", payload={"field": "hypergraph"})
    config = {"hypergraph": hypergraph_path, "i": level, "q": q}
    columns: tuple[str, ...] = MU_COLUMNS
    if trials is None:
        value = mu_exact(H, level, q)
        extra: tuple = ()
        used_seed = None
    else:
        used_seed = lab.seed if seed is None else seed
        estimate = mu_montecarlo(H, level, q, trials, used_seed, jobs=jobs or lab.jobs)
        value = estimate.estimate
        columns += ("standard_error", "trials")
        extra = (estimate.standard_error, estimate.trials)
        config["trials"] = trials
    ratio = bound_ratio(value, q, level, H.vertex_count, H.edge_count) if q > 0 else 0.0
    header = provenance(lab, "mu", config, used_seed)
    row = (H.vertex_count, level, q, value, ratio) + extra
    write_output(csv_text(header, columns, [row]), output)
    return 0


@click.command("bounded")
@family_options(multiple_n=True)
@click.option("--i", "levels", type=click.IntRange(min=1), multiple=True, required=True)
@click.option("--grid-points", type=click.IntRange(min=1), default=20, show_default=True)
@click.option(
    "--q-upper", type=click.FloatRange(0.0, 1.0, min_open=True), default=1.0, show_default=True
)
@click.option(
    "--q", "explicit_q", type=float, multiple=True, help="Explicit grid value (repeatable)."
)
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON instead of CSV.")
@output_option()
@click.pass_context
def bounded(
    ctx: click.Context,
    family: str,
    n: tuple[int, ...],
    k: int | None,
    dimension: int | None,
    points: tuple[str, ...],
    matrix: str | None,
    pattern: str | None,
    levels: tuple[int, ...],
    grid_points: int,
    q_upper: float,
    explicit_q: tuple[float, ...],
    as_json: bool,
    output: str | None,
) -> int:
    """mu_i on a q grid from p_n upwards and the K each point needs, per n."""

    lab = lab_from(ctx)
    spec = build_spec(
        family, n[0], k=k, dimension=dimension, points=points, matrix=matrix, pattern=pattern
    )
    grid = QGrid(points=grid_points, upper=q_upper, explicit=explicit_q or None)
    report = certify_boundedness(spec, n, levels, grid)

    config = {
        "family": spec_config(spec),
        "n": list(n),
        "i": list(levels),
        "grid": (
            {"explicit": list(explicit_q)}
            if explicit_q
            else {"points": grid_points, "upper": q_upper}
        ),
    }
    header = provenance(lab, "bounded", config)
    if as_json:
        emit_json(header, BoundednessReportSchema().dump(report), output)
    else:
        rows = ((row.n, row.i, row.q, row.mu, row.bound_ratio) for row in report.rows)
        write_output(csv_text(header, MU_COLUMNS, rows), output)
    return 0


@click.command("prune")
@hypergraph_option
@click.option("--q", "q", type=click.FloatRange(0.0, 1.0), required=True)
@click.option("--i", "level", type=click.IntRange(min=1), required=True)
@click.option("--eta", type=click.FloatRange(0.0, min_open=True), required=True)
@click.option("--K", "K", type=click.FloatRange(0.0), required=True)
@click.option("--trial", type=click.IntRange(min=0), default=0, show_default=True)
@seed_option
@output_option()
@click.pass_context
def prune(
    ctx: click.Context,
    hypergraph_path: str,
    q: float,
    level: int,
    eta: float,
    K: float,
    trial: int,
    seed: int | None,
    output: str | None,
) -> int:
    """Greedy deletion of at most eta q |V| sampled vertices against the mu bound."""

    lab = lab_from(ctx)
    H = read_hypergraph(hypergraph_path)
    seed = lab.seed if seed is None else seed
    result = prune_check(H, q, level, eta, K, seed, trial=trial)
    config = {"hypergraph": hypergraph_path, "q": q, "i": level, "eta": eta, "K": K, "trial": trial}
    emit_json(provenance(lab, "prune", config, seed), PruneResultSchema().dump(result), output)
    return 0
