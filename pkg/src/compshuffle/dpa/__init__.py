"""The Dyck path algebra and its action on V_k = Sym[X] (x) Q(q,t)[y_1..y_k]."""

from .basis import BasisDecomposition, basis_element, basis_shapes, decompose
from .operators import (
    T,
    T_inv,
    commutator_minus_plus,
    corner_op,
    d_minus,
    d_plus,
    d_plus_star,
    delta_op,
    t_op,
    y_mul,
    z_op,
)
from .velem import LevelError, VElem
from .words import Gen, apply_word, corner_word, parse_word, path_word, word_str

__all__ = [
    "VElem",
    "LevelError",
    "T",
    "T_inv",
    "t_op",
    "delta_op",
    "d_plus",
    "d_minus",
    "d_plus_star",
    "y_mul",
    "z_op",
    "commutator_minus_plus",
    "corner_op",
    "Gen",
    "apply_word",
    "parse_word",
    "path_word",
    "corner_word",
    "word_str",
    "BasisDecomposition",
    "basis_element",
    "basis_shapes",
    "decompose",
]
