"""Exact rational computations for finite Lie-Rinehart algebras."""

from ._lrcw import (
    bianchi,
    chern_weil_classes,
    chern_weil_form,
    cocycle_class,
    cohomology_dims,
    congruent,
    curvature,
    fixture_names,
    global_invariant_dims,
    invariants_dims,
    validate,
    verify_classifying_map,
)

__all__ = [
    "bianchi",
    "chern_weil_classes",
    "chern_weil_form",
    "cocycle_class",
    "cohomology_dims",
    "congruent",
    "curvature",
    "fixture_names",
    "global_invariant_dims",
    "invariants_dims",
    "validate",
    "verify_classifying_map",
]
