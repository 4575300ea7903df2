"""Linear operators on Sym[X]: creation operators B_r and C_r, omega, the Hall
pairing, and the degree-one operators D_1, D_1^* and multiplication by e_1.

All shift operators have the shape

    F  |->  F[X + A z^{-1}] Exp[eps z X] |_{z^r}

for a constant alphabet A.  On h_lambda this is a finite sum because
h_m[X + A/z] = sum_j h_j[X] h_{m-j}[A] z^{j-m}, so the operators are computed
in the h basis by that closed form, one basis element at a time, and cached.
The generic plethysm route is kept as ``*_reference`` for cross-checking.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from ..qtring import ONE, QtScalar, as_scalar, q, t
from ..shapes import sort_partition
from .plethysm import Alphabet, h_n, plethysm, plethysm_sym, plethystic_exp
from .symfunc import SymFunc


@lru_cache(maxsize=None)
def h_of_constant(m: int, a: QtScalar) -> QtScalar:
    """h_m[a] for a constant alphabet a in Q(q,t)."""
    if m == 0:
        return ONE
    return plethysm_sym(h_n(m), Alphabet.const(a)).coefficient(())


@lru_cache(maxsize=None)
def _h_or_e(n: int, sign: int) -> SymFunc:
    """h_n[sign * X] in the h basis."""
    if n < 0:
        return SymFunc.zero("h")
    if sign > 0:
        return SymFunc.elem("h", (n,))
    return SymFunc.elem("e", (n,)).to("h").scale((-1) ** n)


# (alphabet constant, exp sign, prefactor as a function of r)
_SHIFTS = {
    "B": (ONE - q, -1),
    "C": (ONE / q - 1, +1),
    "D1": ((ONE - q) * (ONE - t), -1),
    "D1star": (-(ONE - ONE / q) * (ONE - ONE / t), +1),
}


def _prefactor(kind: str, r: int) -> QtScalar:
    if kind == "C":
        return -(q ** (1 - r))
    return ONE


@lru_cache(maxsize=None)
def _shift_on_h(kind: str, r: int, la: tuple) -> SymFunc:
    a, sign = _SHIFTS[kind]
    out = SymFunc.zero("h")
    for js in iproduct(*(range(p + 1) for p in la)):
        coeff = ONE
        s = 0
        for p, j in zip(la, js):
            coeff = coeff * h_of_constant(p - j, a)
            s += p - j
            if not coeff:
                break
        if not coeff or r + s < 0:
            continue
        tail = _h_or_e(r + s, sign)
        if not tail:
            continue
        base = SymFunc.elem("h", sort_partition(js))
        out = out + base.product(tail).scale(coeff)
    return out.scale(_prefactor(kind, r))


def _apply_shift(kind: str, r: int, F: SymFunc) -> SymFunc:
    Fh = F.to("h")
    out = SymFunc.zero("h")
    for la, c in Fh.coeffs.items():
        out = out + _shift_on_h(kind, r, la).scale(c)
    return out


def creation_op(kind: str, r: int, F: SymFunc) -> SymFunc:
    """B_r F or C_r F (see module docstring); result is in the h basis."""
    if kind not in ("B", "C"):
        raise ValueError(f"unknown creation operator {kind!r}")
    return _apply_shift(kind, r, F)


def B(r: int, F: SymFunc) -> SymFunc:
    return _apply_shift("B", r, F)


def C(r: int, F: SymFunc) -> SymFunc:
    return _apply_shift("C", r, F)


def B_seq(alpha, F: SymFunc | None = None) -> SymFunc:
    """B_{a_1} ... B_{a_l} F, rightmost first."""
    F = SymFunc.one("h") if F is None else F
    for r in reversed(tuple(alpha)):
        F = B(r, F)
    return F


def C_seq(alpha, F: SymFunc | None = None) -> SymFunc:
    """C_{a_1} ... C_{a_l} F, rightmost first."""
    F = SymFunc.one("h") if F is None else F
    for r in reversed(tuple(alpha)):
        F = C(r, F)
    return F


def _shift_reference(alphabet_coeff, exp_sign: int, r: int, F: SymFunc, pre=ONE) -> SymFunc:
    z_inv = Alphabet.var("z", -1)
    shifted = plethysm(F, Alphabet.X() + z_inv * alphabet_coeff)
    window = F.max_degree + r + 1
    series = plethystic_exp(Alphabet.X() * Alphabet.var("z") * exp_sign, window)
    prod = shifted * series
    key = (("z", r),) if r else ()
    return prod.terms.get(key, SymFunc.zero("p")).to("h").scale(pre)


def creation_op_reference(kind: str, r: int, F: SymFunc) -> SymFunc:
    """The same operator through generic plethysm and a truncated Exp."""
    a, sign = _SHIFTS[kind]
    return _shift_reference(a, sign, r, F, _prefactor(kind, r))


# -- omega ------------------------------------------------------------------


def omega(F: SymFunc) -> SymFunc:
    """F[-X]."""
    Fp = F.to("p")
    return SymFunc._raw({la: (c if len(la) % 2 == 0 else -c) for la, c in Fp.coeffs.items()}, "p").to(F.basis)


def omega_ops(F: SymFunc, which: str) -> SymFunc:
    if which == "omega":
        return omega(F)
    if which == "bar":
        return F.bar()
    if which == "omega_bar":
        return omega(F).bar()
    raise ValueError(f"unknown operator {which!r}")


# -- Hall pairing -----------------------------------------------------------


def hall_inner(F: SymFunc, G: SymFunc) -> QtScalar:
    """<F, G> with <h_lambda, m_mu> = delta; bilinear over Q(q,t)."""
    Fh, Gm = F.to("h"), G.to("m")
    total = as_scalar(0)
    for la, c in Fh.coeffs.items():
        d = Gm.coeffs.get(la)
        if d is not None:
            total = total + c * d
    return total


# -- degree one operators ---------------------------------------------------


def D1(F: SymFunc) -> SymFunc:
    """F[X + (1-q)(1-t)/u] Exp[-uX] |_{u^1}."""
    return _apply_shift("D1", 1, F)


def D1star(F: SymFunc) -> SymFunc:
    """F[X - (1-1/q)(1-1/t)/u] Exp[uX] |_{u^1}."""
    return _apply_shift("D1star", 1, F)


def e1mul(F: SymFunc) -> SymFunc:
    return F.to("h").product(SymFunc.elem("h", (1,)))


def degree_one_ops(F: SymFunc, which: str) -> SymFunc:
    ops = {"D1": D1, "D1star": D1star, "e1mul": e1mul}
    if which not in ops:
        raise ValueError(f"unknown operator {which!r}")
    return ops[which](F)


def basis_convert(F: SymFunc, target: str) -> SymFunc:
    return F.to(target)
