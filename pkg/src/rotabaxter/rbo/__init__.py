"""Monomial Rota-Baxter operators: families, coefficient machinery, verification."""

from .coeffs import (R1Table, alpha_sum_formula, extend_row, fibonacci, r1_alpha_row,
                     r1_extend)
from .families import (Case1, Case1R0, Case5Const, Custom, Fibonacci, FromAveraging, R1General,
                       R1Q0EqQ1, R1Q0EqQ2, R1Q0Run, R1Q1EqQ2, RBFamily, Splitting, VieillardBaron,
                       build_rbo, case2_rule, family_from_json, family_to_json, negate_rule,
                       r1_family_for)
from .sseq import SSequence, s_closed_form, s_identities_check, s_recurrence, s_transform
from .verify import rb_check, splitting_criterion_check, table_json

__all__ = [
    "R1Table", "alpha_sum_formula", "extend_row", "fibonacci", "r1_alpha_row", "r1_extend",
    "Case1", "Case1R0", "Case5Const", "Custom", "Fibonacci", "FromAveraging", "R1General",
    "R1Q0EqQ1", "R1Q0EqQ2", "R1Q0Run", "R1Q1EqQ2", "RBFamily", "Splitting", "VieillardBaron",
    "build_rbo", "case2_rule", "family_from_json", "family_to_json", "negate_rule",
    "r1_family_for", "SSequence", "s_closed_form", "s_identities_check", "s_recurrence",
    "s_transform", "rb_check", "splitting_criterion_check", "table_json",
]
