"""Exact computations in the five Cameron categories FA, OA, CA, BA, SA."""

from .core import (
    ALL_CATEGORIES,
    AutomorphismGroup,
    Category,
    Factorization,
    Morphism,
    automorphism_group,
    check_retraction_property,
    compose,
    cyclic_degeneracy,
    degeneracy_map,
    enumerate_hom,
    face_map,
    factorize,
    identity,
    is_morphism,
)

__all__ = [
    "ALL_CATEGORIES",
    "AutomorphismGroup",
    "Category",
    "Factorization",
    "Morphism",
    "automorphism_group",
    "check_retraction_property",
    "compose",
    "cyclic_degeneracy",
    "degeneracy_map",
    "enumerate_hom",
    "face_map",
    "factorize",
    "identity",
    "is_morphism",
]
