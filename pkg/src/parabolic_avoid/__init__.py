"""Permutations avoiding cosets of maximal parabolic subgroups of S_k."""

from .asympt import AsymptoticEstimate, growth_estimate, il_bound, max_laguerre_root
from .counting import M_closed, M_direct, corollary11, f_fast, f_sequence, g_oracle, sum_oracle
from .gfengine import RationalGF, SeriesPrefix, bdpp_coefficients, gf_coefficients, main_theorem_gf, sqrt_series
from .permcore import (
    AvoidanceClass,
    PatternSet,
    Permutation,
    avoids_all,
    enumerate_avoiders,
    iter_avoiders,
    occurs,
    parabolic_coset,
)
from .polyalg import ExactPoly, laguerre_poly, rook_poly

__version__ = "0.1.0"

__all__ = [
    "AsymptoticEstimate",
    "AvoidanceClass",
    "ExactPoly",
    "M_closed",
    "M_direct",
    "PatternSet",
    "Permutation",
    "RationalGF",
    "SeriesPrefix",
    "avoids_all",
    "bdpp_coefficients",
    "corollary11",
    "enumerate_avoiders",
    "f_fast",
    "f_sequence",
    "g_oracle",
    "gf_coefficients",
    "growth_estimate",
    "il_bound",
    "iter_avoiders",
    "laguerre_poly",
    "main_theorem_gf",
    "max_laguerre_root",
    "occurs",
    "parabolic_coset",
    "rook_poly",
    "sqrt_series",
    "sum_oracle",
]
