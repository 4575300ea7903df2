"""Exact computer algebra for the compositional shuffle theorem: Dyck path
statistics, characteristic functions, the Dyck path algebra acting on
V_k = Sym[X] (x) Q(q,t)[y_1..y_k], the involution N, and the identity
nabla C_alpha(1) = D_alpha."""

from .charfn import chi, chi_partial, chi_weighted, chi_zero, dalpha_bruteforce
from .dpa import VElem, apply_word, d_minus, d_plus, d_plus_star
from .dyck import DyckPath, bounce, enumerate_paths, parse_path, touch_prime, zeta
from .qtring import QtScalar, parse_scalar, q, t
from .shuffle import (
    ShuffleReport,
    d_alpha_brute,
    d_alpha_operator,
    n_alpha,
    n_involution,
    nabla_c,
    verify_shuffle,
    y_alpha,
)
from .symfn import B, C, SymFunc
from .symfn.macdonald import macdonald_H, nabla

__version__ = "0.1.0"

__all__ = [
    "QtScalar",
    "parse_scalar",
    "q",
    "t",
    "SymFunc",
    "B",
    "C",
    "macdonald_H",
    "nabla",
    "DyckPath",
    "parse_path",
    "enumerate_paths",
    "zeta",
    "bounce",
    "touch_prime",
    "chi",
    "chi_weighted",
    "chi_zero",
    "chi_partial",
    "dalpha_bruteforce",
    "VElem",
    "apply_word",
    "d_plus",
    "d_minus",
    "d_plus_star",
    "n_alpha",
    "y_alpha",
    "d_alpha_operator",
    "d_alpha_brute",
    "nabla_c",
    "n_involution",
    "verify_shuffle",
    "ShuffleReport",
]
