"""Exact scalars in the rational function field Q(q, t).

Every value is kept in a canonical form: numerator and denominator are
coprime polynomials with rational coefficients, and the denominator is
monic with respect to graded lexicographic order with q > t.  Two scalars
are equal exactly when their canonical forms coincide, so equality never
relies on sampling.

The polynomial arithmetic (products, exact division, gcd) is delegated to
FLINT's multivariate polynomials via ``python-flint``.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache

import flint

__all__ = [
    "QtScalar",
    "ZeroDivision",
    "CTX",
    "q",
    "t",
    "ZERO",
    "ONE",
    "as_scalar",
    "qt_arith",
    "qt_bar",
    "qt_is_zero",
    "parse_scalar",
]

CTX = flint.fmpq_mpoly_ctx.get(("q", "t"), "deglex")
_Q, _T = CTX.gens()
_POLY_ONE = CTX.from_dict({(0, 0): 1})
_POLY_ZERO = CTX.from_dict({})


class ZeroDivision(ZeroDivisionError):
    """Raised when dividing a QtScalar by zero."""


def _to_fmpq(c) -> flint.fmpq:
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(c)


class QtScalar:
    """An immutable element of Q(q, t) in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, *, _canonical: bool = False):
        if not isinstance(num, flint.fmpq_mpoly):
            num = CTX.constant(_to_fmpq(num))
        if den is None:
            den = _POLY_ONE
        elif not isinstance(den, flint.fmpq_mpoly):
            den = CTX.constant(_to_fmpq(den))
        if not _canonical:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_poly(cls, poly: flint.fmpq_mpoly) -> "QtScalar":
        return cls(poly, _POLY_ONE, _canonical=True)

    @classmethod
    def from_dict(cls, terms: dict) -> "QtScalar":
        """Build a Laurent polynomial from ``{(i, j): coeff}`` meaning coeff*q^i*t^j."""
        if not terms:
            return ZERO
        mq = min(i for i, _ in terms)
        mt = min(j for _, j in terms)
        shifted = {(i - mq, j - mt): _to_fmpq(c) for (i, j), c in terms.items() if c}
        num = CTX.from_dict(shifted)
        if mq >= 0 and mt >= 0:
            num = num * CTX.from_dict({(mq, mt): 1})
            return cls(num, _POLY_ONE, _canonical=True)
        den = CTX.from_dict({(max(-mq, 0), max(-mt, 0)): 1})
        num = num * CTX.from_dict({(max(mq, 0), max(mt, 0)): 1})
        return cls(num, den)

    @classmethod
    def monomial(cls, i: int, j: int = 0, coeff=1) -> "QtScalar":
        return cls.from_dict({(i, j): coeff})

    # -- predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_polynomial(self) -> bool:
        """True when the denominator is 1."""
        return self.den.is_one()

    def is_laurent(self) -> bool:
        """True when the denominator is a monomial q^i t^j."""
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        c = self.num.coefficient(0) if len(self.num) else flint.fmpq(0)
        return Fraction(int(c.p), int(c.q))

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return QtScalar(self.num + other.num, _POLY_ONE, _canonical=True)
        if self.den == other.den:
            return QtScalar(self.num + other.num, self.den)
        return QtScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QtScalar(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return QtScalar(self.num * other.num, _POLY_ONE, _canonical=True)
        return QtScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivision("division by the zero element of Q(q,t)")
        return QtScalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / (self ** (-n))
        if self.den.is_one():
            return QtScalar(self.num**n, _POLY_ONE, _canonical=True)
        return QtScalar(self.num**n, self.den**n, _canonical=True)

    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # -- lambda-ring style operations -------------------------------------------

    def bar(self) -> "QtScalar":
        """Substitute q -> 1/q and t -> 1/t."""
        n_rev, n_dq, n_dt = _reverse(self.num)
        d_rev, d_dq, d_dt = _reverse(self.den)
        # num(1/q,1/t) / den(1/q,1/t) = n_rev q^{d_dq} t^{d_dt} / (d_rev q^{n_dq} t^{n_dt})
        eq = d_dq - n_dq
        et = d_dt - n_dt
        num = n_rev * CTX.from_dict({(max(eq, 0), max(et, 0)): 1})
        den = d_rev * CTX.from_dict({(max(-eq, 0), max(-et, 0)): 1})
        return QtScalar(num, den)

    def adams(self, n: int) -> "QtScalar":
        """The power-sum action p_n: q -> q^n, t -> t^n."""
        if n == 1:
            return self
        qn, tn = _Q**n, _T**n
        num = self.num.compose(qn, tn)
        if self.den.is_one():
            return QtScalar(num, _POLY_ONE, _canonical=True)
        return QtScalar(num, self.den.compose(qn, tn))

    def subs(self, qv, tv) -> "QtScalar":
        """Substitute scalars for q and t (used by tests and numeric spot checks)."""
        qv, tv = as_scalar(qv), as_scalar(tv)
        return _eval_poly(self.num, qv, tv) / _eval_poly(self.den, qv, tv)

    def laurent_terms(self) -> dict:
        """``{(i, j): Fraction}`` for a Laurent polynomial; raises otherwise."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        (dq, dt), dc = next(iter(self.den.terms()))
        out = {}
        for (i, j), c in self.num.terms():
            v = c / dc
            out[(i - dq, j - dt)] = Fraction(int(v.p), int(v.q))
        return out

    # -- text -------------------------------------------------------------------

    def __str__(self):
        if self.den.is_one():
            return _poly_str(self.num)
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"

    def __repr__(self):
        return f"QtScalar({str(self)!r})"

    def __reduce__(self):
        return (parse_scalar, (str(self),))


def _poly_str(p: flint.fmpq_mpoly) -> str:
    if p.is_zero():
        return "0"
    return p.str()


def _normalize(num, den):
    if den.is_zero():
        raise ZeroDivision("zero denominator")
    if num.is_zero():
        return _POLY_ZERO, _POLY_ONE
    if den.is_constant():
        c = den.leading_coefficient()
        if c != 1:
            num = num / c
        return num, _POLY_ONE
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    c = den.leading_coefficient()
    if c != 1:
        num = num / c
        den = den / c
    return num, den


def _reverse(p):
    """Return (q^dq t^dt p(1/q, 1/t), dq, dt) with dq, dt the partial degrees."""
    terms = p.to_dict()
    if not terms:
        return p, 0, 0
    dq = max(i for i, _ in terms)
    dt = max(j for _, j in terms)
    return CTX.from_dict({(dq - i, dt - j): c for (i, j), c in terms.items()}), dq, dt


def _eval_poly(p, qv, tv):
    acc = ZERO
    for (i, j), c in p.terms():
        acc = acc + QtScalar(CTX.constant(c)) * qv**i * tv**j
    return acc


def as_scalar(x):
    """Coerce ints, Fractions and strings to QtScalar; NotImplemented otherwise."""
    if isinstance(x, QtScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return _const(x) if isinstance(x, int) and -64 <= x <= 64 else QtScalar(x)
    if isinstance(x, flint.fmpq):
        return QtScalar(x)
    if isinstance(x, flint.fmpq_mpoly):
        return QtScalar.from_poly(x)
    if isinstance(x, str):
        return parse_scalar(x)
    return NotImplemented


@lru_cache(maxsize=None)
def _const(n: int) -> QtScalar:
    return QtScalar(CTX.constant(n), _POLY_ONE, _canonical=True)


ZERO = QtScalar(_POLY_ZERO, _POLY_ONE, _canonical=True)
ONE = QtScalar(_POLY_ONE, _POLY_ONE, _canonical=True)
q = QtScalar.from_poly(_Q)
t = QtScalar.from_poly(_T)


def qt_arith(a, b, op: str) -> QtScalar:
    """Field arithmetic by name: ``add``, ``sub``, ``mul`` or ``div``."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def qt_bar(a) -> QtScalar:
    return as_scalar(a).bar()


def qt_is_zero(a) -> bool:
    return as_scalar(a).is_zero()


# -- parsing ---------------------------------------------------------------------

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_scalar(text: str) -> QtScalar:
    """Parse the canonical string grammar, e.g. ``"(q^2*t - 1)/(q - 1)"``.

    Accepts integers, rationals, the symbols q and t, + - * / ^ (or **),
    and parentheses.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty scalar expression")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc
    return _eval_node(tree.body, text)


def _eval_node(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return as_scalar(node.value)
    if isinstance(node, ast.Name):
        if node.id == "q":
            return q
        if node.id == "t":
            return t
        raise ValueError(f"unknown symbol {node.id!r} in {text!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        left = _eval_node(node.left, text)
        if isinstance(node.op, ast.Pow):
            exp = _eval_node(node.right, text)
            if not exp.is_constant() or exp.constant_value().denominator != 1:
                raise ValueError(f"non-integer exponent in {text!r}")
            return left ** int(exp.constant_value())
        right = _eval_node(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        return left / right
    raise ValueError(f"unsupported syntax in scalar {text!r}")
