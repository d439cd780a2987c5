"""Generating functions of chi_y genera of Hilbert schemes and their coefficients."""

from .hodge import K3, ChiYPolynomial, HodgeDiamond, chi_y, gottsche_series, specialize_xy
from .products import (
    a,
    a_row,
    colored_partitions,
    f_series,
    g_series,
    p_colored,
    sum_rule_check,
)

__all__ = [
    "g_series", "f_series", "a", "a_row", "p_colored", "colored_partitions",
    "sum_rule_check", "chi_y", "ChiYPolynomial", "HodgeDiamond", "K3",
    "gottsche_series", "specialize_xy",
]
