"""Elements of V_k = Sym[X] (x) Q(q,t)[y_1, ..., y_k]."""

from __future__ import annotations

from ..qtring import ONE, as_scalar
from ..symfn import SymFunc
from ..symfn.symfunc import _paren


class LevelError(ValueError):
    """Operands live in different V_k, or an index is out of range."""


class VElem:
    """A finite sum of y-monomials with symmetric-function coefficients.

    ``terms`` maps exponent tuples of length ``level`` to nonzero SymFunc
    values, all stored in the h basis.
    """

    __slots__ = ("level", "terms")

    def __init__(self, level: int, terms=None):
        if level < 0:
            raise LevelError("level must be nonnegative")
        clean = {}
        for e, F in (terms or {}).items():
            e = tuple(e)
            if len(e) != level or any(x < 0 for x in e):
                raise LevelError(f"exponent {e} does not fit level {level}")
            if not isinstance(F, SymFunc):
                F = SymFunc.scalar(F)
            F = F.to("h")
            if F:
                clean[e] = clean[e] + F if e in clean else F
        self.level = level
        self.terms = {e: F for e, F in clean.items() if F}

    @classmethod
    def _raw(cls, level: int, terms: dict) -> "VElem":
        obj = cls.__new__(cls)
        obj.level = level
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, level: int) -> "VElem":
        return cls._raw(level, {})

    @classmethod
    def one(cls, level: int = 0) -> "VElem":
        return cls._raw(level, {(0,) * level: SymFunc.one("h")})

    @classmethod
    def from_sym(cls, F: SymFunc, level: int = 0) -> "VElem":
        return cls(level, {(0,) * level: F})

    @classmethod
    def monomial(cls, exps, F: SymFunc | None = None, coeff=ONE) -> "VElem":
        exps = tuple(exps)
        F = SymFunc.one("h") if F is None else F
        return cls(len(exps), {exps: F.scale(coeff)})

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def degrees(self) -> set:
        return {sum(e) + d for e, F in self.terms.items() for d in F.degrees()}

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def homogeneous(self, n: int) -> "VElem":
        out = {}
        for e, F in self.terms.items():
            part = F.homogeneous(n - sum(e))
            if part:
                out[e] = part
        return VElem._raw(self.level, out)

    def to_sym(self) -> SymFunc:
        if self.level:
            raise LevelError("only level-0 elements are symmetric functions")
        return self.terms.get((), SymFunc.zero("h"))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "VElem"):
        if not isinstance(other, VElem):
            raise TypeError(f"cannot combine VElem with {type(other).__name__}")
        if other.level != self.level:
            raise LevelError(f"level mismatch: V_{self.level} vs V_{other.level}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for e, F in other.terms.items():
            if e in out:
                s = out[e] + F
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = F
        return VElem._raw(self.level, out)

    __radd__ = __add__

    def __neg__(self):
        return VElem._raw(self.level, {e: -F for e, F in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "VElem":
        c = as_scalar(c)
        if not c:
            return VElem.zero(self.level)
        if c.is_one():
            return self
        return VElem._raw(self.level, {e: F.scale(c) for e, F in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, VElem):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def map_coeffs(self, fn) -> "VElem":
        return VElem(self.level, {e: F.map_coeffs(fn) for e, F in self.terms.items()})

    def bar(self) -> "VElem":
        return VElem._raw(self.level, {e: F.bar() for e, F in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, VElem):
            if self.level == 0 and isinstance(other, SymFunc):
                return self.to_sym() == other
            return NotImplemented
        return self.level == other.level and self.terms == other.terms

    def __hash__(self):
        return hash((self.level, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, F in self.items():
            mono = "*".join(f"y{i}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e, start=1) if a)
            Fs = F.to("s")
            if not mono:
                pieces.append(str(Fs))
            elif list(Fs.coeffs) == [()]:
                c = Fs.coeffs[()]
                pieces.append(mono if c.is_one() else f"{_paren(c)}*{mono}")
            else:
                pieces.append(f"({Fs})*{mono}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"VElem[{self.level}]({self})"

