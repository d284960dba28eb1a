"""Plain-text formats for hypergraphs and vertex subsets.

Hypergraph::

    k <k> n <vertex_count> m <edge_count>
    # label <i> <label>
    <v1> <v2> ... <vk>

Line 1 is always the header. Other ``#`` lines are comments; only
``# label`` lines are interpreted. Tuple labels are written comma-joined.
"""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from transference_lab.errors import FormatError

from .model import Label, UniformHypergraph, VertexSubset


def format_label(label: Label) -> str:
    if isinstance(label, tuple):
        return ",".join(str(part) for part in label)
    text = str(label)
    if not text or any(char.isspace() for char in text):
        raise FormatError(f"Label {label!r} cannot be written on one token.")
    return text


def parse_label(token: str) -> Label:
    if "," in token:
        try:
            return tuple(int(part) for part in token.split(","))
        except ValueError as exc:
            raise FormatError(f"Malformed tuple label {token!r}.") from exc
    try:
        return int(token)
    except ValueError:
        return token


def dump_hypergraph(H: UniformHypergraph, *, comments: Iterable[str] = ()) -> str:
    """Serialize H; ``comments`` become ``#`` lines right after the header."""

    lines = [f"k {H.uniformity} n {H.vertex_count} m {H.edge_count}"]
    lines.extend(f"# {comment}" for comment in comments)
    if H.labels is not None:
        lines.extend(
            f"# label {index} {format_label(label)}" for index, label in enumerate(H.labels)
        )
    lines.extend(" ".join(str(vertex) for vertex in edge) for edge in H.edges)
    return "\n".join(lines) + "\n"


def load_hypergraph(text: str) -> UniformHypergraph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("Hypergraph text is empty.")

    header = lines[0].split()
    if len(header) != 6 or header[0::2] != ["k", "n", "m"]:
        raise FormatError(f"Malformed hypergraph header: {lines[0]!r}")
    try:
        k, n, m = (int(header[1]), int(header[3]), int(header[5]))
    except ValueError as exc:
        raise FormatError(f"Malformed hypergraph header: {lines[0]!r}") from exc

    labels: dict[int, Label] = {}
    edges: list[tuple[int, ...]] = []
    for number, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and parts[0] == "label":
                try:
                    labels[int(parts[1])] = parse_label(parts[2])
                except ValueError as exc:
                    raise FormatError(f"Line {number}: malformed label line.") from exc
            continue
        try:
            edge = tuple(int(token) for token in line.split())
        except ValueError as exc:
            raise FormatError(f"Line {number}: edge must be integers: {line!r}") from exc
        if len(edge) != k:
            raise FormatError(f"Line {number}: expected {k} vertices, got {len(edge)}.")
        edges.append(edge)

    if len(edges) != m:
        raise FormatError(f"Header announces {m} edges, found {len(edges)}.")

    label_tuple: tuple[Label, ...] | None = None
    if labels:
        if sorted(labels) != list(range(n)):
            raise FormatError("Label lines must cover every vertex exactly once.")
        label_tuple = tuple(labels[index] for index in range(n))

    hypergraph = UniformHypergraph(k, n, tuple(edges), label_tuple)
    if hypergraph.edge_count != m:
        raise FormatError("Hypergraph text contains duplicate edges.")
    return hypergraph


def read_hypergraph(path: str | Path) -> UniformHypergraph:
    return load_hypergraph(Path(path).read_text(encoding="utf-8"))


def write_hypergraph(
    H: UniformHypergraph, path: str | Path, *, comments: Iterable[str] = ()
) -> None:
    Path(path).write_text(dump_hypergraph(H, comments=comments), encoding="utf-8")


def load_subset(text: str, universe: int) -> VertexSubset:
    """Whitespace-separated vertex indices; ``#`` starts a comment line."""

    members: list[int] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            members.extend(int(token) for token in line.split())
        except ValueError as exc:
            raise FormatError(f"Line {number}: subset entries must be integers.") from exc
    return VertexSubset(universe, tuple(members))


def read_subset(path: str | Path, universe: int) -> VertexSubset:
    return load_subset(Path(path).read_text(encoding="utf-8"), universe)
