"""Intersecting families of signed sets: constructions, exact search and bound checkers."""

from .core import (ParameterError, Params, SetFamily, SignedFamily, SignedSet, SizeError, binom,
                   c_size, construct_C, construct_E, construct_P, e_size, generate_V,
                   is_intersecting, lift_P, min_pair_product, p_size, parse_set_family,
                   parse_signed_family, format_set_family, format_signed_family, scalar_product)
from .report import BoundReport
from .search import SearchResult, build_conflict_graph, m_exact, max_independent_set
from .shifting import ShiftPair, fully_shift, is_shifted, shift_family

__version__ = "0.1.0"

__all__ = [
    "ParameterError", "SizeError", "Params", "SignedSet", "SignedFamily", "SetFamily",
    "binom", "scalar_product", "min_pair_product", "is_intersecting", "generate_V",
    "construct_E", "construct_P", "construct_C", "lift_P", "e_size", "p_size", "c_size",
    "format_signed_family", "format_set_family", "parse_signed_family", "parse_set_family",
    "BoundReport", "SearchResult", "build_conflict_graph", "max_independent_set", "m_exact",
    "ShiftPair", "shift_family", "fully_shift", "is_shifted",
]
