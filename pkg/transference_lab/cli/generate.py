"""``gen``, ``mparam`` and ``dense-probe``."""

from __future__ import annotations

from typing import Any

import click

from transference_lab.density import m_of_hypergraph, min_induced_edges, supersaturation_profile
from transference_lab.density.schemas import DensityReportSchema
from transference_lab.errors import InputError
from transference_lab.generators import build_hypergraph
from transference_lab.hypergraphs import dump_hypergraph, read_hypergraph
from transference_lab.matrices import classify_matrix, m_of_matrix, read_matrix
from transference_lab.matrices.schemas import MatrixClassificationSchema, MatrixExponentSchema

from .common import (
    build_spec,
    csv_text,
    emit_json,
    family_options,
    hypergraph_option,
    lab_from,
    output_option,
    provenance,
    provenance_comments,
    resolve_pattern,
    seed_option,
    spec_config,
    write_output,
)


@click.command("gen")
@family_options()
@output_option("Hypergraph text file to write (default: stdout).")
@click.pass_context
def gen(
    ctx: click.Context,
    family: str,
    n: int,
    k: int | None,
    dimension: int | None,
    points: tuple[str, ...],
    matrix: str | None,
    pattern: str | None,
    output: str | None,
) -> int:
    """Generate the configuration hypergraph of a family."""

    lab = lab_from(ctx)
    spec = build_spec(
        family, n, k=k, dimension=dimension, points=points, matrix=matrix, pattern=pattern
    )
    H = build_hypergraph(spec)
    header = provenance(lab, "gen", spec_config(spec))
    write_output(dump_hypergraph(H, comments=provenance_comments(header)), output)
    return 0


@click.command("mparam")
@click.option("--matrix", "matrix_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--hypergraph", "hypergraph_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--pattern", default=None, help="Pattern name or hypergraph file.")
@output_option()
@click.pass_context
def mparam(
    ctx: click.Context,
    matrix_path: str | None,
    hypergraph_path: str | None,
    pattern: str | None,
    output: str | None,
) -> int:
    """m(A) with classification for a matrix, or m(F) for a pattern hypergraph."""

    chosen = [value for value in (matrix_path, hypergraph_path, pattern) if value]
    if len(chosen) != 1:
        raise InputError(
            "Give exactly one of --matrix, --hypergraph or --pattern.",
            payload={"field": "mparam"},
        )
    lab = lab_from(ctx)

    result: dict[str, Any]
    if matrix_path:
        A = read_matrix(matrix_path)
        classification = MatrixClassificationSchema().dump(classify_matrix(A))
        result = {**MatrixExponentSchema().dump(m_of_matrix(A)), **classification}
        config: dict[str, Any] = {"matrix": A.as_lists()}
    else:
        F = read_hypergraph(hypergraph_path) if hypergraph_path else resolve_pattern(pattern or "")
        result = DensityReportSchema().dump(m_of_hypergraph(F))
        config = {
            "pattern": {
                "uniformity": F.uniformity,
                "vertices": F.vertex_count,
                "edges": [list(edge) for edge in F.edges],
            }
        }
    emit_json(provenance(lab, "mparam", config), result, output)
    return 0


@click.command("dense-probe")
@hypergraph_option
@click.option("--m", "sizes", type=click.IntRange(min=0), multiple=True, help="Subset size.")
@click.option(
    "--fraction",
    "fractions",
    type=click.FloatRange(0.0, 1.0),
    multiple=True,
    help="Subset size as a fraction of |V| (reports min e(H[U]) / e(H)).",
)
@click.option("--exact-limit", type=click.IntRange(min=0), default=None)
@click.option("--iterations", type=click.IntRange(min=0), default=None)
@seed_option
@output_option()
@click.pass_context
def dense_probe(
    ctx: click.Context,
    hypergraph_path: str,
    sizes: tuple[int, ...],
    fractions: tuple[float, ...],
    exact_limit: int | None,
    iterations: int | None,
    seed: int | None,
    output: str | None,
) -> int:
    """Fewest edges induced by a subset of the given size, as CSV."""

    if bool(sizes) == bool(fractions):
        raise InputError("Give --m or --fraction (not both).", payload={"field": "m"})
    lab = lab_from(ctx)
    H = read_hypergraph(hypergraph_path)
    seed = lab.seed if seed is None else seed
    limit = lab["EXACT_PROBE_VERTEX_LIMIT"] if exact_limit is None else exact_limit
    steps = lab["LOCAL_SEARCH_ITERATIONS"] if iterations is None else iterations
    config = {
        "hypergraph": hypergraph_path,
        "m": list(sizes),
        "fractions": list(fractions),
        "exact_limit": limit,
        "iterations": steps,
    }
    header = provenance(lab, "dense-probe", config, seed)

    if fractions:
        rows = supersaturation_profile(
            H, fractions, exact_limit=limit, iterations=steps, seed=seed
        )
        text = csv_text(
            header,
            ("fraction", "m", "count", "ratio", "exact"),
            ((row.fraction, row.m, row.count, row.ratio, row.exact) for row in rows),
        )
    else:
        probes = [
            min_induced_edges(H, m, exact_limit=limit, iterations=steps, seed=seed)
            for m in sizes
        ]
        text = csv_text(
            header,
            ("m", "count", "witness", "exact"),
            (
                (probe.m, probe.count, " ".join(map(str, probe.witness.members)), probe.exact)
                for probe in probes
            ),
        )
    write_output(text, output)
    return 0
