"""Deterministic text and JSON forms of the core types.

    QtScalar  "q + 1"
    SymFunc   {"basis": "s", "maxdeg": 3, "terms": [{"shape": [2, 1], "coeff": "q + 1"}]}
    VElem     {"level": 1, "terms": [{"y": [1], "sym": <SymFunc>}]}
    DyckPath  "NNEENE"
"""

from __future__ import annotations

import ast
import json

from .dpa.velem import VElem
from .dyck import DyckPath
from .qtring import QtScalar, as_scalar, parse_scalar, q, t
from .symfn import SymFunc
from .symfn.bases import BASES


def scalar_to_json(c) -> str:
    return str(as_scalar(c))


def scalar_from_json(text: str) -> QtScalar:
    return parse_scalar(text)


def symfunc_to_json(F: SymFunc, basis: str | None = None) -> dict:
    if basis:
        F = F.to(basis)
    terms = [{"shape": list(la), "coeff": str(c)} for la, c in F.items()]
    return {"basis": F.basis, "maxdeg": max(F.degrees(), default=0), "terms": terms}


def symfunc_from_json(obj: dict) -> SymFunc:
    if obj.get("basis") not in BASES:
        raise ValueError(f"unknown basis {obj.get('basis')!r}")
    coeffs = {}
    for term in obj.get("terms", []):
        la = tuple(term["shape"])
        coeffs[la] = coeffs.get(la, 0) + parse_scalar(term["coeff"])
    return SymFunc(coeffs, obj["basis"])


def velem_to_json(F: VElem, basis: str = "s") -> dict:
    return {
        "level": F.level,
        "terms": [{"y": list(e), "sym": symfunc_to_json(G, basis)} for e, G in F.items()],
    }


def velem_from_json(obj: dict) -> VElem:
    level = int(obj["level"])
    acc = VElem.zero(level)
    for term in obj.get("terms", []):
        acc = acc + VElem(level, {tuple(term["y"]): symfunc_from_json(term["sym"])})
    return acc


def to_json(value, basis: str = "s"):
    """JSON-ready form of any core value (dicts and lists recurse)."""
    if isinstance(value, SymFunc):
        return symfunc_to_json(value, basis)
    if isinstance(value, VElem):
        return velem_to_json(value, basis)
    if isinstance(value, QtScalar):
        return str(value)
    if isinstance(value, DyckPath):
        return value.steps
    if isinstance(value, dict):
        return {str(k): to_json(v, basis) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v, basis) for v in value]
    return value


def dumps(value, basis: str = "s") -> str:
    return json.dumps(to_json(value, basis), sort_keys=True)


def serialize(value, mode: str = "pretty", basis: str = "s") -> str:
    if mode == "json":
        return dumps(value, basis)
    if isinstance(value, SymFunc):
        return str(value.to(basis))
    return str(value)


# -- text expressions ----------------------------------------------------------


def parse_symfunc(text: str, basis: str | None = None) -> SymFunc:
    """Parse expressions like ``"s[2,1] + (q+1)*h[1]^2 - 3"``.

    Basis atoms are m[..], e[..], h[..], p[..], s[..]; scalars follow the
    scalar grammar.  The result is in ``basis`` (default: the first basis used).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty expression")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}") from exc
    used: list = []
    value = _eval(tree.body, text, used)
    target = basis or (used[0] if used else "h")
    if isinstance(value, SymFunc):
        return value.to(target)
    return SymFunc.scalar(value, target)


def _eval(node, text, used):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return as_scalar(node.value)
    if isinstance(node, ast.Name) and node.id in ("q", "t"):
        return q if node.id == "q" else t
    if isinstance(node, ast.Subscript) and isinstance(node.value, ast.Name) and node.value.id in BASES:
        sl = node.slice
        parts = sl.elts if isinstance(sl, ast.Tuple) else [sl]
        if not all(isinstance(p, ast.Constant) and isinstance(p.value, int) for p in parts):
            raise ValueError(f"bad shape in {text!r}")
        la = tuple(p.value for p in parts)
        used.append(node.value.id)
        return SymFunc.elem(node.value.id, la)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, text, used)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, text, used)
        right = _eval(node.right, text, used)
        if isinstance(node.op, ast.Pow):
            if isinstance(right, SymFunc) or not right.is_constant() or right.constant_value().denominator != 1:
                raise ValueError(f"non-integer exponent in {text!r}")
            return left ** int(right.constant_value())
        if isinstance(node.op, ast.Add):
            return _lift(left) + _lift(right) if _mixed(left, right) else left + right
        if isinstance(node.op, ast.Sub):
            return _lift(left) - _lift(right) if _mixed(left, right) else left - right
        if isinstance(node.op, ast.Mult):
            if isinstance(left, SymFunc) and isinstance(right, SymFunc):
                return left.product(right)
            if isinstance(left, SymFunc):
                return left.scale(right)
            if isinstance(right, SymFunc):
                return right.scale(left)
            return left * right
        if isinstance(node.op, ast.Div) and not isinstance(right, SymFunc):
            return left.scale(1 / right) if isinstance(left, SymFunc) else left / right
    raise ValueError(f"unsupported syntax in {text!r}")


def _mixed(a, b) -> bool:
    return isinstance(a, SymFunc) or isinstance(b, SymFunc)


def _lift(x):
    return x if isinstance(x, SymFunc) else SymFunc.scalar(x, "h")
