"""Positive definite integral ternary quadratic forms."""

from .bijections import NormalizationError, lehman_case, normalize_at_p, phi_chain, phi_p, phi_p_inv, watson_lambda4
from .forms import FormError, TernaryForm
from .genus import (
    BudgetExceeded,
    GenusKey,
    enumeration_budget,
    genus_enumerate,
    genus_of,
    order_genus_key,
    s0_genus_key,
)
from .local import FormInvariants, aniso_primes, hasse_symbol, invariants
from .reduction import aut_count, automorphisms, equivalent, reduce
from .reps import rep_number, rep_numbers, restricted_rep_number

__all__ = [
    "TernaryForm",
    "FormError",
    "FormInvariants",
    "invariants",
    "hasse_symbol",
    "aniso_primes",
    "rep_number",
    "rep_numbers",
    "restricted_rep_number",
    "aut_count",
    "automorphisms",
    "equivalent",
    "reduce",
    "GenusKey",
    "BudgetExceeded",
    "enumeration_budget",
    "genus_of",
    "genus_enumerate",
    "s0_genus_key",
    "order_genus_key",
    "NormalizationError",
    "lehman_case",
    "normalize_at_p",
    "phi_p",
    "phi_p_inv",
    "phi_chain",
    "watson_lambda4",
]
