"""Knot groups of braided surfaces and tools for finitely presented groups."""

from .abelian import AbelianInvariants, abelianization, relation_matrix, smith_diagonal
from .coset import CosetResult, coset_enumerate, default_coset_cap
from .homs import count_homs_to_symmetric
from .presentation import (
    GroupPresentation,
    NotDeltaSquaredWarning,
    bidisk_presentation,
    canonical_relator,
    cyclic_reduce,
    is_wirtinger,
    projective_presentation,
    wirtinger_form,
)
from .tietze import BudgetExceededWarning, tietze_simplify
from .wirtinger import simple_relations, wirtinger_to_bands

__all__ = [
    "AbelianInvariants",
    "BudgetExceededWarning",
    "CosetResult",
    "GroupPresentation",
    "NotDeltaSquaredWarning",
    "abelianization",
    "bidisk_presentation",
    "canonical_relator",
    "coset_enumerate",
    "count_homs_to_symmetric",
    "cyclic_reduce",
    "default_coset_cap",
    "is_wirtinger",
    "projective_presentation",
    "relation_matrix",
    "simple_relations",
    "smith_diagonal",
    "tietze_simplify",
    "wirtinger_form",
    "wirtinger_to_bands",
]
