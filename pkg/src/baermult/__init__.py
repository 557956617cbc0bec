"""Polynilpotent multipliers (Baer invariants) of f.g. abelian groups and
nilpotent products of cyclic groups, with brute-force cross-checks."""

from .engine import (
    HypothesisError,
    MultiplierReport,
    Verdict,
    is_extremal,
    multiplier,
    multiplier_abelian_nilpotent,
    multiplier_abelian_polynilpotent,
    multiplier_multiproduct_polynilpotent,
    multiplier_product_c_nilpotent,
    multiplier_product_polynilpotent,
)
from .exponents import ClassRow, beta, d_exponent, e_exponent, f_exponent, g_exponent, h_value, mobius, nested_tail, u_value, witt
from .groups import AbelianStructure, GroupSpec, PPowerOrder, Theorem, check_hypotheses, order_of, parse_group, render_group
from .hall import BasicCommutator, count_containing, hall_basis, nested_hall_count

__version__ = "0.1.0"
