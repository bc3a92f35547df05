"""Grundy-value engine for dragon-king Nim and its variants.

Two heaps with a capped simultaneous removal, the same game with a one-time
pass move, capped-side restrictions, and three- and n-heap generalizations;
each closed-form evaluation is paired with an independent brute-force
Sprague-Grundy oracle and a sweep that checks one against the other.
"""

from .errors import (DimensionMismatchError, NoClosedFormError, NoMoveError,
                     RegionError, TheoremCounterexampleError,
                     UnsupportedVariantError)
from .games import (MoveSet, Outcome, PassPosition, Position, RuleSet, Variant,
                    generalized_ryuo, generalized_ryuo_move_set, legal_moves,
                    legal_moves_pass, literal_restricted_side_move_set,
                    modified_three_dim, move_set, n_dim, pass_ryuo,
                    queen_move_set, restricted_hv, restricted_side,
                    rook_move_set, satisfies_necessary_condition, three_dim)
from .grundy import (GrundyTable, Mismatch, VerificationReport,
                     brute_force_table, droppable_offsets, grundy_brute_force,
                     grundy_closed_form, grundy_custom_moveset,
                     has_closed_form, mex, moveset_table,
                     necessary_condition_witness, nim_sum, verify_equivalence,
                     verify_moveset_equivalence)
from .pass_play import (PassOutcomeTable, classify_pass,
                        outcome_backward_induction, pass_grundy_table,
                        verify_pass_theorem)
from .strategy import (MoveRecommendation, best_moves, engine_move, outcome,
                       p_position_table, three_dim_is_p)
from .tables import TableDocument, build_table, parse_csv

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatchError", "NoClosedFormError", "NoMoveError",
    "RegionError", "TheoremCounterexampleError", "UnsupportedVariantError",
    "MoveSet", "Outcome", "PassPosition", "Position", "RuleSet", "Variant",
    "generalized_ryuo", "generalized_ryuo_move_set", "legal_moves",
    "legal_moves_pass", "literal_restricted_side_move_set",
    "modified_three_dim", "move_set", "n_dim", "pass_ryuo", "queen_move_set",
    "restricted_hv", "restricted_side", "rook_move_set",
    "satisfies_necessary_condition", "three_dim",
    "GrundyTable", "Mismatch", "VerificationReport", "brute_force_table",
    "droppable_offsets", "grundy_brute_force", "grundy_closed_form",
    "grundy_custom_moveset", "has_closed_form", "mex", "moveset_table",
    "necessary_condition_witness", "nim_sum", "verify_equivalence",
    "verify_moveset_equivalence",
    "PassOutcomeTable", "classify_pass", "outcome_backward_induction",
    "pass_grundy_table", "verify_pass_theorem",
    "MoveRecommendation", "best_moves", "engine_move", "outcome",
    "p_position_table", "three_dim_is_p",
    "TableDocument", "build_table", "parse_csv",
]
