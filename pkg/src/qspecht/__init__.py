"""Exact Specht modules of the Hecke algebra H_n(q) and their behaviour at roots of unity."""

from .scalar import (
    GENERIC,
    CyclotomicScalar,
    LaurentScalar,
    ScalarDomain,
    cyclotomic_polynomial,
    root_of_unity,
    specialize,
)
from .combinat import (
    BoundaryStrip,
    Partition,
    Permutation,
    Tableau,
    boundary_strips,
    enumerate_standard,
    hook_count,
    precedes,
    reduced_word,
    superstandard,
    word_of_tableau,
)
from .linalg import Matrix, kernel, mat_mul, rank, specialize_matrix
from .specht import (
    ColumnElement,
    GarnirElement,
    SpechtVector,
    TableauVector,
    annihilator_matrix,
    apply_generator,
    apply_word,
    character_trace,
    column_elements,
    defining_relation_checks,
    garnir_element,
    garnir_elements,
    garnir_relation_terms,
    generator_matrix,
    straighten,
    verify_annihilators,
)
from .roots import (
    DecompositionReport,
    TwoRowTableauView,
    analyze,
    enumerate_p_root_standard,
    find_submodule_generators,
    irreducible_dimension,
    is_p_regular,
    is_p_root_standard,
    is_s_strip_standard,
    strip_criterion_equivalence,
    submodule_dimension,
)

__all__ = [
    "GENERIC",
    "BoundaryStrip",
    "ColumnElement",
    "CyclotomicScalar",
    "DecompositionReport",
    "GarnirElement",
    "LaurentScalar",
    "Matrix",
    "Partition",
    "Permutation",
    "ScalarDomain",
    "SpechtVector",
    "Tableau",
    "TableauVector",
    "TwoRowTableauView",
    "analyze",
    "annihilator_matrix",
    "apply_generator",
    "apply_word",
    "boundary_strips",
    "character_trace",
    "column_elements",
    "cyclotomic_polynomial",
    "defining_relation_checks",
    "enumerate_p_root_standard",
    "enumerate_standard",
    "find_submodule_generators",
    "garnir_element",
    "garnir_elements",
    "garnir_relation_terms",
    "generator_matrix",
    "hook_count",
    "irreducible_dimension",
    "is_p_regular",
    "is_p_root_standard",
    "is_s_strip_standard",
    "kernel",
    "mat_mul",
    "precedes",
    "rank",
    "reduced_word",
    "root_of_unity",
    "specialize",
    "specialize_matrix",
    "straighten",
    "strip_criterion_equivalence",
    "submodule_dimension",
    "superstandard",
    "verify_annihilators",
    "word_of_tableau",
]
