"""Commutator subgroups of twin groups and other right-angled Coxeter groups.

Reidemeister-Schreier presentations for kernels of the exponent-parity map,
Tietze simplification, abelian invariants, and chordality tests.
"""

__version__ = "0.1.0"

from .abelian import AbelianInvariants, IntMatrix, abelian_invariants, relation_matrix, smith_normal_form
from .errors import SchreierError
from .graphs import commutator_free, has_induced_square, is_chordal, structure_report
from .presentation import CommutationGraph, Presentation, as_racg, cartographical_group, twin_group
from .racg import RacgContext, is_identity, normal_form, tits_matrix
from .rschreier import derived_subgroup_presentation, mod2_coset_table, rewrite, schreier_generators
from .tietze import SimplificationBudget, eliminate, remove_redundant, simplify
from .twin import (
    BetaSymbol,
    beta_normal_form,
    beta_word,
    minimal_presentation,
    theorem1_presentation,
    verify_paper_claims,
)

__all__ = [
    "AbelianInvariants", "IntMatrix", "abelian_invariants", "relation_matrix", "smith_normal_form",
    "SchreierError", "commutator_free", "has_induced_square", "is_chordal", "structure_report",
    "CommutationGraph", "Presentation", "as_racg", "cartographical_group", "twin_group",
    "RacgContext", "is_identity", "normal_form", "tits_matrix",
    "derived_subgroup_presentation", "mod2_coset_table", "rewrite", "schreier_generators",
    "SimplificationBudget", "eliminate", "remove_redundant", "simplify",
    "BetaSymbol", "beta_normal_form", "beta_word", "minimal_presentation", "theorem1_presentation",
    "verify_paper_claims",
]
