"""``alpha``, ``turan`` and ``arrow``."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import click

from transference_lab.density import turan_density_reference
from transference_lab.density.schemas import TuranDensitySchema
from transference_lab.errors import FormatError, InputError
from transference_lab.hypergraphs import VertexSubset, induced_subhypergraph, read_hypergraph
from transference_lab.rationals import format_rational, parse_rational
from transference_lab.solver import (
    Verdict,
    alpha_exact,
    arrow_decide,
    copy_hypergraph,
    host_subset,
    turan_decide,
    turan_ex,
)
from transference_lab.solver.schemas import DecisionResultSchema, SolveResultSchema

from .common import (
    EXIT_OK,
    EXIT_UNRELIABLE,
    budget_option,
    emit_json,
    hypergraph_option,
    json_label,
    lab_from,
    load_subset_option,
    output_option,
    provenance,
    resolve_pattern,
    subset_option,
    subset_payload,
)


def read_host_edges(path: str) -> list[tuple[int, ...]]:
    """One host edge per line as whitespace-separated 1-based vertices; ``#`` starts a comment."""

    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc}", payload={"field": "host"}) from exc
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            edges.append(tuple(int(token) for token in line.split()))
        except ValueError as exc:
            raise FormatError(
                f"{path}:{number}: host edge must be integers, got {line!r}.",
                payload={"field": "host"},
            ) from exc
    return edges


@click.command("alpha")
@hypergraph_option
@subset_option
@budget_option
@output_option()
@click.pass_context
def alpha(
    ctx: click.Context,
    hypergraph_path: str,
    subset_path: str | None,
    budget: int | None,
    output: str | None,
) -> int:
    """Largest edge-free vertex set of H (or of H[X] with --subset)."""

    lab = lab_from(ctx)
    H = read_hypergraph(hypergraph_path)
    X = load_subset_option(H, subset_path)
    budget = lab.budget if budget is None else budget

    result = alpha_exact(induced_subhypergraph(H, X), budget)
    witness = VertexSubset(H.vertex_count, tuple(X.members[i] for i in result.witness.members))
    document = SolveResultSchema().dump(result)
    document["witness"] = subset_payload(H, witness)

    config = {"hypergraph": hypergraph_path, "subset": subset_path, "budget": budget}
    emit_json(provenance(lab, "alpha", config), document, output)
    return EXIT_OK if result.exact else EXIT_UNRELIABLE


@click.command("turan")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Vertices of K_n.")
@click.option("--F", "pattern", required=True, help="Forbidden pattern: name or hypergraph file.")
@click.option(
    "--dimension",
    type=click.IntRange(min=2),
    default=None,
    help="Edge size of the host (default: uniformity of F).",
)
@click.option(
    "--host",
    "host_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Host edges, one per line, 1-based (default: all of K_n).",
)
@click.option("--epsilon", default=None, help="Also decide ex <= (pi + eps) e(G), e.g. 1/10.")
@click.option("--alpha", "density", default=None, help="Override pi(F), e.g. 1/2.")
@budget_option
@output_option()
@click.pass_context
def turan(
    ctx: click.Context,
    n: int,
    pattern: str,
    dimension: int | None,
    host_path: str | None,
    epsilon: str | None,
    density: str | None,
    budget: int | None,
    output: str | None,
) -> int:
    """ex(G, F): the most edges of the host G spanning no copy of F."""

    lab = lab_from(ctx)
    F = resolve_pattern(pattern)
    dimension = F.uniformity if dimension is None else dimension
    budget = lab.budget if budget is None else budget
    host = host_subset(n, dimension, read_host_edges(host_path)) if host_path else None

    result = turan_ex(n, dimension, F, host, budget)
    H = copy_hypergraph(n, dimension, F)
    reference = turan_density_reference(F)
    document: dict[str, Any] = {
        **SolveResultSchema().dump(result),
        "host_edges": H.vertex_count if host is None else host.cardinality,
        "witness_edges": [json_label(H.label_of(rank)) for rank in result.witness.members],
        "turan_density": TuranDensitySchema().dump(reference),
    }
    config: dict[str, Any] = {
        "n": n,
        "dimension": dimension,
        "F": {
            "uniformity": F.uniformity,
            "vertices": F.vertex_count,
            "edges": [list(edge) for edge in F.edges],
        },
        "host": host_path,
        "budget": budget,
    }

    code = EXIT_OK if result.exact else EXIT_UNRELIABLE
    if epsilon is not None:
        if density is not None:
            pi = parse_rational(density, field="alpha")
        elif reference.known:
            pi = reference.value
        else:
            raise InputError(
                "pi(F) is not known for this pattern; pass --alpha.",
                payload={"field": "alpha"},
            )
        eps = parse_rational(epsilon, field="epsilon")
        X = H.full_subset() if host is None else host
        decision = turan_decide(H, X, pi, eps, budget)
        document["decision"] = {
            **DecisionResultSchema().dump(decision),
            "pi": format_rational(pi),
            "epsilon": format_rational(eps),
        }
        config.update({"epsilon": format_rational(eps), "alpha": format_rational(pi)})
        if decision.verdict is Verdict.UNDECIDED:
            code = EXIT_UNRELIABLE

    emit_json(provenance(lab, "turan", config), document, output)
    return code


@click.command("arrow")
@hypergraph_option
@subset_option
@click.option("--epsilon", required=True, help="Density in (0, 1], e.g. 1/2.")
@budget_option
@output_option()
@click.pass_context
def arrow(
    ctx: click.Context,
    hypergraph_path: str,
    subset_path: str | None,
    epsilon: str,
    budget: int | None,
    output: str | None,
) -> int:
    """Whether every subset of X with at least eps |X| vertices spans an edge."""

    lab = lab_from(ctx)
    H = read_hypergraph(hypergraph_path)
    X = load_subset_option(H, subset_path)
    budget = lab.budget if budget is None else budget
    eps = parse_rational(epsilon, field="epsilon")

    decision = arrow_decide(H, X, eps, budget)
    config = {
        "hypergraph": hypergraph_path,
        "subset": subset_path,
        "epsilon": format_rational(eps),
        "budget": budget,
    }
    emit_json(provenance(lab, "arrow", config), DecisionResultSchema().dump(decision), output)
    return EXIT_OK if decision.decided else EXIT_UNRELIABLE
