"""Symmetric functions over Q(q,t) and the operators acting on them."""

from .bases import BASES, kostka, transition
from .operators import (
    B,
    C,
    B_seq,
    C_seq,
    D1,
    D1star,
    basis_convert,
    creation_op,
    creation_op_reference,
    degree_one_ops,
    e1mul,
    hall_inner,
    omega,
    omega_ops,
)
from .plethysm import Alphabet, AuxExpansion, TruncationError, h_n, plethysm, plethysm_sym, plethystic_exp
from .symfunc import SymFunc

__all__ = [
    "BASES",
    "kostka",
    "transition",
    "SymFunc",
    "Alphabet",
    "AuxExpansion",
    "TruncationError",
    "h_n",
    "plethysm",
    "plethysm_sym",
    "plethystic_exp",
    "B",
    "C",
    "B_seq",
    "C_seq",
    "D1",
    "D1star",
    "e1mul",
    "basis_convert",
    "creation_op",
    "creation_op_reference",
    "degree_one_ops",
    "hall_inner",
    "omega",
    "omega_ops",
]
