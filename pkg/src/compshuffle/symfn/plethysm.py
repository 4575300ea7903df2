"""Plethystic substitution F[A] for alphabets built from X, q, t and auxiliary
generators (y_1, y_2, ..., z, u).

Every letter is a lambda-ring generator: p_n raises q, t and each auxiliary
variable to the n-th power and sends X to p_n[X].  Rational constants are
fixed by p_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..qtring import ONE, QtScalar, as_scalar
from ..shapes import partitions, z_lambda
from .symfunc import SymFunc


class TruncationError(ValueError):
    """A substitution would produce terms beyond the requested degree bound."""


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        d[name] = d.get(name, 0) + e
    return tuple(sorted((k, v) for k, v in d.items() if v))


def _mono_pow(a: tuple, n: int) -> tuple:
    return tuple((k, v * n) for k, v in a)


@dataclass(frozen=True)
class AlphabetTerm:
    """coeff * (X if has_x) * prod(aux_i^e_i)."""

    coeff: QtScalar
    has_x: bool = False
    aux: tuple = ()


class Alphabet:
    """A finite formal sum of alphabet terms."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged: dict = {}
        for term in terms:
            key = (term.has_x, term.aux)
            merged[key] = merged.get(key, 0) + term.coeff
        self.terms = tuple(
            AlphabetTerm(as_scalar(c), hx, aux) for (hx, aux), c in sorted(merged.items(), key=str) if c
        )

    @classmethod
    def X(cls) -> "Alphabet":
        return cls([AlphabetTerm(ONE, True)])

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Alphabet":
        return cls([AlphabetTerm(ONE, False, ((name, exp),))])

    @classmethod
    def const(cls, c) -> "Alphabet":
        return cls([AlphabetTerm(as_scalar(c))])

    def __add__(self, other):
        if not isinstance(other, Alphabet):
            other = Alphabet.const(other)
        return Alphabet(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return Alphabet([AlphabetTerm(-t.coeff, t.has_x, t.aux) for t in self.terms])

    def __sub__(self, other):
        if not isinstance(other, Alphabet):
            other = Alphabet.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Alphabet):
            out = []
            for a in self.terms:
                for b in other.terms:
                    if a.has_x and b.has_x:
                        raise ValueError("alphabets are linear in X")
                    out.append(AlphabetTerm(a.coeff * b.coeff, a.has_x or b.has_x, _mono_mul(a.aux, b.aux)))
            return Alphabet(out)
        c = as_scalar(other)
        return Alphabet([AlphabetTerm(t.coeff * c, t.has_x, t.aux) for t in self.terms])

    __rmul__ = __mul__

    def power_sum(self, n: int) -> "AuxExpansion":
        """p_n[A] as an expansion in p_n[X] and auxiliary monomials."""
        out: dict = {}
        for term in self.terms:
            key = _mono_pow(term.aux, n)
            f = SymFunc._raw({(n,) if term.has_x else (): term.coeff.adams(n)}, "p")
            out[key] = out[key] + f if key in out else f
        return AuxExpansion(out)

    def __repr__(self):
        return " + ".join(f"({t.coeff})" + ("*X" if t.has_x else "") + "".join(f"*{k}^{e}" for k, e in t.aux) for t in self.terms) or "0"


class AuxExpansion:
    """A finite sum  sum_m  m * F_m  with m an auxiliary Laurent monomial and
    F_m a symmetric function in X."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @staticmethod
    def key(**exps) -> tuple:
        return tuple(sorted((k, v) for k, v in exps.items() if v))

    def coefficient(self, **exps) -> SymFunc:
        return self.terms.get(self.key(**exps), SymFunc.zero("p"))

    def __add__(self, other: "AuxExpansion") -> "AuxExpansion":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return AuxExpansion(out)

    def scale(self, c) -> "AuxExpansion":
        return AuxExpansion({k: v.scale(c) for k, v in self.terms.items()})

    def __mul__(self, other: "AuxExpansion") -> "AuxExpansion":
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _mono_mul(k1, k2)
                prod = v1.product(v2)
                out[k] = out[k] + prod if k in out else prod
        return AuxExpansion(out)

    def max_x_degree(self) -> int:
        return max((v.max_degree for v in self.terms.values()), default=0)

    def __repr__(self):
        return "{" + ", ".join(f"{k}: {v}" for k, v in self.terms.items()) + "}"


def plethysm(F: SymFunc, A: Alphabet, max_degree: int | None = None) -> AuxExpansion:
    """F[A]; the coefficients of F are left untouched.

    ``max_degree`` bounds the X-degree of the result; exceeding it raises
    TruncationError.
    """
    Fp = F.to("p")
    cache: dict = {}
    total = AuxExpansion()
    for la, c in Fp.coeffs.items():
        term = AuxExpansion({(): SymFunc.one("p")})
        for part in la:
            pn = cache.get(part)
            if pn is None:
                pn = cache[part] = A.power_sum(part)
            term = term * pn
        total = total + term.scale(c)
    if max_degree is not None and total.max_x_degree() > max_degree:
        raise TruncationError(f"substitution reaches X-degree {total.max_x_degree()} > {max_degree}")
    return total


def plethysm_sym(F: SymFunc, A: Alphabet) -> SymFunc:
    """F[A] for an alphabet without auxiliary variables."""
    res = plethysm(F, A)
    extra = [k for k in res.terms if k]
    if extra:
        raise ValueError(f"alphabet has auxiliary variables {extra}")
    return res.terms.get((), SymFunc.zero("p"))


def h_n(n: int) -> SymFunc:
    """h_n in the power-sum basis: sum_lambda p_lambda / z_lambda."""
    return SymFunc({la: as_scalar(1) / z_lambda(la) for la in partitions(n)}, "p")


def plethystic_exp(A: Alphabet, max_degree: int) -> AuxExpansion:
    """sum_{n <= max_degree} h_n[A]."""
    total = AuxExpansion({(): SymFunc.one("p")})
    for n in range(1, max_degree + 1):
        total = total + plethysm(h_n(n), A)
    return total
