"""First extensions between simple and (proper) standard objects in type A
category O and its S-subcategories, computed from combinatorics of S_n."""

from .bruhat_base import BigrassCoord, bigrassmannians, bm, bm_st, coord_of, element_of, join, join_irreducibles
from .cells import penultimate_cell, phi, rsk, shape, small_cell, w_st
from .ext_o import GradedExtAnswer, SocleEntry, Status, ext1_simple_to_verma, ext1_singular, m_degree, socle_coker_verma
from .ext_s import SCategoryContext, ext1_simple_to_proper_standard, ext1_simple_to_standard, socle_coker_proper_standard
from .parabolic import ParabolicSubset, is_special, x_long, x_short
from .symmetric_group import Permutation, bruhat_leq, longest_element, parse_permutation, simple_reflection

__all__ = [
    "BigrassCoord", "bigrassmannians", "bm", "bm_st", "coord_of", "element_of", "join",
    "join_irreducibles", "penultimate_cell", "phi", "rsk", "shape", "small_cell", "w_st",
    "GradedExtAnswer", "SocleEntry", "Status", "ext1_simple_to_verma", "ext1_singular",
    "m_degree", "socle_coker_verma", "SCategoryContext", "ext1_simple_to_proper_standard",
    "ext1_simple_to_standard", "socle_coker_proper_standard", "ParabolicSubset",
    "is_special", "x_long", "x_short", "Permutation", "bruhat_leq", "longest_element",
    "parse_permutation", "simple_reflection",
]

__version__ = "0.1.0"
