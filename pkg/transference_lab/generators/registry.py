"""Registry mapping family variants to configuration-hypergraph builders."""

from __future__ import annotations

from collections.abc import Callable, Iterable

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph

from .spec import ConfigSpec, FamilyVariant

FamilyBuilder = Callable[[ConfigSpec], UniformHypergraph]

_FAMILY_BUILDERS: dict[str, FamilyBuilder] = {}


def _default_builders() -> Iterable[tuple[str, FamilyBuilder]]:
    from .arithmetic import gen_ap, gen_homothetic
    from .copies import gen_fcopies
    from .linear import gen_linear, gen_schur

    def ap_builder(spec: ConfigSpec) -> UniformHypergraph:
        return gen_ap(spec.n, int(spec.k or 0))

    def homothetic_builder(spec: ConfigSpec) -> UniformHypergraph:
        return gen_homothetic(spec.n, int(spec.dimension or 1), spec.points or ())

    def linear_builder(spec: ConfigSpec) -> UniformHypergraph:
        return gen_linear(spec.linear_matrix, spec.n)

    def schur_builder(spec: ConfigSpec) -> UniformHypergraph:
        return gen_schur(spec.n)

    def fcopies_builder(spec: ConfigSpec) -> UniformHypergraph:
        pattern = spec.require_pattern()
        return gen_fcopies(spec.n, int(spec.dimension or pattern.uniformity), pattern)

    return [
        (FamilyVariant.AP.value, ap_builder),
        (FamilyVariant.HOMOTHETIC.value, homothetic_builder),
        (FamilyVariant.LINEAR.value, linear_builder),
        (FamilyVariant.SCHUR.value, schur_builder),
        (FamilyVariant.FCOPIES.value, fcopies_builder),
    ]


def register_family(name: str, builder: FamilyBuilder) -> None:
    """Register a builder under the given family name."""

    if not name:
        raise ValueError("Family name cannot be empty.")
    _FAMILY_BUILDERS[name.lower()] = builder


def unregister_family(name: str) -> None:
    """Remove a family builder; primarily for testing."""

    _FAMILY_BUILDERS.pop(name.lower(), None)


def list_families() -> list[str]:
    return sorted(_FAMILY_BUILDERS.keys())


def get_builder(name: str) -> FamilyBuilder:
    family = name.lower()
    try:
        return _FAMILY_BUILDERS[family]
    except KeyError as exc:
        available = ", ".join(list_families()) or "none registered"
        raise InputError(
            f"Unknown family '{family}'. Available families: {available}",
            payload={"field": "family"},
        ) from exc


def build_hypergraph(spec: ConfigSpec) -> UniformHypergraph:
    """Configuration hypergraph of ``spec`` through the registered builder."""

    return get_builder(spec.variant.value)(spec)


def reset_registry(default_builders: Iterable[tuple[str, FamilyBuilder]] | None = None) -> None:
    """Reset the family registry; useful for tests."""

    _FAMILY_BUILDERS.clear()
    for name, builder in default_builders or _default_builders():
        register_family(name, builder)


reset_registry()
