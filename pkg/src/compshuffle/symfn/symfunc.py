"""Bounded-degree symmetric functions with coefficients in Q(q, t)."""

from __future__ import annotations

from ..qtring import ONE, ZERO, QtScalar, as_scalar
from ..shapes import is_partition, sort_partition
from .bases import BASES, transition


def shape_key(la):
    return (sum(la), tuple(-p for p in la))


class SymFunc:
    """A symmetric function stored sparsely in one of the bases m, e, h, p, s.

    ``coeffs`` maps partitions to nonzero QtScalars.  Values are immutable;
    all operations return new objects.  Equality compares abstract elements,
    converting bases when needed.
    """

    __slots__ = ("basis", "coeffs")

    def __init__(self, coeffs=None, basis: str = "m"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        if coeffs:
            for la, c in coeffs.items():
                c = as_scalar(c)
                if c:
                    la = tuple(la)
                    if not is_partition(la):
                        raise ValueError(f"{la} is not a partition")
                    clean[la] = c
        self.basis = basis
        self.coeffs = clean

    @classmethod
    def _raw(cls, coeffs: dict, basis: str) -> "SymFunc":
        obj = cls.__new__(cls)
        obj.basis = basis
        obj.coeffs = coeffs
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, basis: str = "h") -> "SymFunc":
        return cls._raw({}, basis)

    @classmethod
    def one(cls, basis: str = "h") -> "SymFunc":
        return cls._raw({(): ONE}, basis)

    @classmethod
    def scalar(cls, c, basis: str = "h") -> "SymFunc":
        return cls({(): c}, basis)

    @classmethod
    def elem(cls, basis: str, shape, coeff=ONE) -> "SymFunc":
        """A single basis element, e.g. ``SymFunc.elem("s", (2, 1))``."""
        return cls({sort_partition(shape) if basis in "ehp" else tuple(shape): coeff}, basis)

    # -- inspection ---------------------------------------------------------

    @property
    def max_degree(self) -> int:
        return max((sum(la) for la in self.coeffs), default=0)

    def degrees(self) -> set:
        return {sum(la) for la in self.coeffs}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, shape) -> QtScalar:
        return self.coeffs.get(tuple(shape), ZERO)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: shape_key(kv[0]))

    def homogeneous(self, n: int) -> "SymFunc":
        return SymFunc._raw({la: c for la, c in self.coeffs.items() if sum(la) == n}, self.basis)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # -- basis changes ------------------------------------------------------

    def to(self, basis: str) -> "SymFunc":
        if basis == self.basis:
            return self
        out: dict = {}
        for la, c in self.coeffs.items():
            for mu, d in transition(self.basis, basis, sum(la))[la].items():
                v = out.get(mu)
                out[mu] = c * d if v is None else v + c * d
        return SymFunc._raw({mu: c for mu, c in out.items() if c}, basis)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            other = as_scalar(other)
            if other is NotImplemented:
                return other
            other = SymFunc.scalar(other, self.basis)
        if other.basis != self.basis:
            other = other.to(self.basis)
        out = dict(self.coeffs)
        for la, c in other.coeffs.items():
            v = out.get(la)
            if v is None:
                out[la] = c
            else:
                s = v + c
                if s:
                    out[la] = s
                else:
                    del out[la]
        return SymFunc._raw(out, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw({la: -c for la, c in self.coeffs.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SymFunc":
        c = as_scalar(c)
        if not c:
            return SymFunc._raw({}, self.basis)
        if c.is_one():
            return self
        return SymFunc._raw({la: v * c for la, v in self.coeffs.items()}, self.basis)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return self.product(other)
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return self.scale(other)

    def __rmul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(ONE / as_scalar(other))

    def product(self, other: "SymFunc") -> "SymFunc":
        """Product; computed in p if both factors are in p, otherwise in h."""
        basis = "p" if self.basis == other.basis == "p" else "h"
        a, b = self.to(basis), other.to(basis)
        out: dict = {}
        for la, c in a.coeffs.items():
            for mu, d in b.coeffs.items():
                nu = tuple(sorted(la + mu, reverse=True))
                v = out.get(nu)
                out[nu] = c * d if v is None else v + c * d
        return SymFunc._raw({nu: c for nu, c in out.items() if c}, basis)

    def __pow__(self, n: int):
        acc = SymFunc.one(self.basis if self.basis in "hp" else "h")
        for _ in range(n):
            acc = acc.product(self)
        return acc

    def bar(self) -> "SymFunc":
        """Conjugate every coefficient by q, t -> 1/q, 1/t."""
        return SymFunc._raw({la: c.bar() for la, c in self.coeffs.items()}, self.basis)

    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc({la: fn(c) for la, c in self.coeffs.items()}, self.basis)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            other = as_scalar(other)
            if other is NotImplemented:
                return False
            other = SymFunc.scalar(other, self.basis)
        if other.basis != self.basis:
            other = other.to(self.basis)
        return self.coeffs == other.coeffs

    def __hash__(self):
        h = self.to("m")
        return hash(frozenset(h.coeffs.items()))

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for la, c in self.items():
            name = f"{self.basis}[{','.join(map(str, la))}]"
            if not la:
                pieces.append(_paren(c))
            elif c.is_one():
                pieces.append(name)
            elif (-c).is_one():
                pieces.append(f"-{name}")
            else:
                pieces.append(f"{_paren(c)}*{name}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"SymFunc({str(self)!r})"


def _paren(c: QtScalar) -> str:
    s = str(c)
    if c.is_polynomial() and len(c.num) == 1:
        return s
    return f"({s})" if c.is_polynomial() else s
