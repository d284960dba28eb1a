"""Shared options, provenance and output plumbing for the subcommands."""

from __future__ import annotations

import json
import logging
from collections.abc import Callable, Iterable, Mapping, Sequence
from pathlib import Path
from typing import Any, TypeVar

import click

from transference_lab import LabContext
from transference_lab.errors import InputError
from transference_lab.generators import ConfigSpec, FamilyVariant, named_pattern
from transference_lab.generators.schemas import ConfigSpecSchema
from transference_lab.hypergraphs import (
    UniformHypergraph,
    VertexSubset,
    read_hypergraph,
    read_subset,
)
from transference_lab.matrices import read_matrix
from transference_lab.schemas import ProvenanceSchema, SubsetSchema, dump_json

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

EXIT_OK = 0
EXIT_UNRELIABLE = 1


def lab_from(ctx: click.Context) -> LabContext:
    lab = ctx.find_object(LabContext)
    if lab is None:
        raise click.UsageError("Lab context is not initialised.")
    return lab


def provenance(
    lab: LabContext, command: str, config: Mapping[str, Any], seed: int | None = None
) -> dict[str, Any]:
    """Tool, version, schema version, subcommand, seed and the resolved configuration."""

    return ProvenanceSchema().dump(
        {
            "tool": lab["APP_NAME"],
            "version": lab["TOOL_VERSION"],
            "schema_version": lab["SCHEMA_VERSION"],
            "command": command,
            "seed": seed,
            "config": dict(config),
        }
    )


def provenance_comments(header: Mapping[str, Any]) -> list[str]:
    """The provenance header as ``#`` comment bodies for text and CSV outputs."""

    lines = [
        f"tool {header['tool']} {header['version']}",
        f"schema_version {header['schema_version']}",
        f"command {header['command']}",
    ]
    if header.get("seed") is not None:
        lines.append(f"seed {header['seed']}")
    lines.append("config " + json.dumps(header["config"], sort_keys=True, separators=(",", ":")))
    return lines


def write_output(text: str, output: str | None) -> None:
    """Write to ``output`` when given, else to stdout."""

    if output is None:
        click.echo(text, nl=False)
        return
    try:
        Path(output).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"Cannot write {output}: {exc}", payload={"field": "output"}) from exc
    logger.info("Wrote %s", output)


def emit_json(
    header: Mapping[str, Any], result: Mapping[str, Any], output: str | None = None
) -> None:
    write_output(dump_json({"provenance": dict(header), "result": dict(result)}), output)


def csv_text(
    header: Mapping[str, Any], columns: Sequence[str], rows: Iterable[Sequence[Any]]
) -> str:
    lines = [f"# {comment}" for comment in provenance_comments(header)]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_csv_cell(value) for value in row))
    return "\n".join(lines) + "\n"


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def load_subset_option(H: UniformHypergraph, path: str | None) -> VertexSubset:
    return H.full_subset() if path is None else read_subset(path, H.vertex_count)


def resolve_pattern(value: str) -> UniformHypergraph:
    """A pattern name (``K3``, ``C4``, ``edge-3``, ...) or a hypergraph text file."""

    candidate = Path(value)
    if candidate.is_file():
        return read_hypergraph(candidate)
    return named_pattern(value)


def parse_point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(token) for token in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise InputError(
            f"Point {text!r} must be comma-separated integers.", payload={"field": "points"}
        ) from exc


def build_spec(
    family: str,
    n: int,
    *,
    k: int | None,
    dimension: int | None,
    points: Sequence[str],
    matrix: str | None,
    pattern: str | None,
) -> ConfigSpec:
    variant = FamilyVariant(family)
    return ConfigSpec(
        variant,
        n,
        k=k,
        dimension=dimension,
        points=tuple(parse_point(point) for point in points) if points else None,
        matrix=read_matrix(matrix) if matrix else None,
        pattern=resolve_pattern(pattern) if pattern else None,
    )


def spec_config(spec: ConfigSpec) -> dict[str, Any]:
    return ConfigSpecSchema().dump(spec)


def family_options(*, multiple_n: bool = False) -> Callable[[F], F]:
    """--family, --n and the variant-specific options shared by gen and bounded."""

    def decorator(func: F) -> F:
        options = [
            click.option(
                "--family",
                required=True,
                type=click.Choice([variant.value for variant in FamilyVariant]),
                help="Configuration family.",
            ),
            click.option(
                "--n",
                "n",
                required=True,
                type=int,
                multiple=multiple_n,
                help="Ground-set size" + (" (repeatable)." if multiple_n else "."),
            ),
            click.option("--k", type=int, default=None, help="Progression length (ap)."),
            click.option(
                "--dimension",
                type=int,
                default=None,
                help="Grid dimension (homothetic) or edge size of K_n (fcopies).",
            ),
            click.option(
                "--point",
                "points",
                multiple=True,
                help="Point of the homothetic configuration, e.g. 0 or 0,1 (repeatable).",
            ),
            click.option(
                "--matrix",
                type=click.Path(exists=True, dir_okay=False),
                default=None,
                help="Matrix text file (linear).",
            ),
            click.option(
                "--pattern",
                default=None,
                help="Pattern name or hypergraph file (fcopies).",
            ),
        ]
        for option in reversed(options):
            func = option(func)
        return func

    return decorator


def output_option(help_text: str = "Write to this file instead of stdout.") -> Callable[[F], F]:
    return click.option(
        "-o", "--output", type=click.Path(dir_okay=False), default=None, help=help_text
    )


def seed_option(func: F) -> F:
    return click.option(
        "--seed", type=click.IntRange(min=0), default=None, help="Master seed (profile default)."
    )(func)


def budget_option(func: F) -> F:
    return click.option(
        "--budget",
        type=click.IntRange(min=1),
        default=None,
        help="Solver node budget (profile default).",
    )(func)


def jobs_option(func: F) -> F:
    return click.option(
        "--jobs",
        type=click.IntRange(min=1),
        default=None,
        help="Worker processes; results do not depend on it.",
    )(func)


def hypergraph_option(func: F) -> F:
    return click.option(
        "--hypergraph",
        "hypergraph_path",
        required=True,
        type=click.Path(exists=True, dir_okay=False),
        help="Hypergraph text file.",
    )(func)


def subset_option(func: F) -> F:
    return click.option(
        "--subset",
        "subset_path",
        type=click.Path(exists=True, dir_okay=False),
        default=None,
        help="File of 0-based vertex indices (default: all vertices).",
    )(func)


def json_label(label: Any) -> Any:
    return list(label) if isinstance(label, tuple) else label


def subset_payload(H: UniformHypergraph, subset: VertexSubset) -> dict[str, Any]:
    return SubsetSchema().dump(
        {
            "size": subset.cardinality,
            "indices": list(subset.members),
            "labels": [json_label(H.label_of(index)) for index in subset.members],
        }
    )
