"""The Dyck path algebra acting on V_* and its starred twin.

Every operator here is linear over Q(q,t), so it is evaluated on the basis
y^e h_lambda of V_k and the image is cached.  Images are kept as raw nested
maps ``{e: {lambda: QtScalar}}``; ``_apply`` folds them back into a VElem.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from ..qtring import ONE, QtScalar, as_scalar, q, t
from ..shapes import sort_partition
from ..symfn import B, SymFunc
from .velem import LevelError, VElem


def _accumulate(out: dict, e: tuple, image_h: dict, c: QtScalar):
    slot = out.setdefault(e, {})
    for la, d in image_h.items():
        v = slot.get(la)
        slot[la] = c * d if v is None else v + c * d


def _apply(F: VElem, level_out: int, basis_fn) -> VElem:
    out: dict = {}
    for e, G in F.terms.items():
        for la, c in G.coeffs.items():
            for e2, img in basis_fn(e, la).items():
                _accumulate(out, e2, img, c)
    terms = {}
    for e, row in out.items():
        row = {la: c for la, c in row.items() if c}
        if row:
            terms[e] = SymFunc._raw(row, "h")
    return VElem._raw(level_out, terms)


def _merge(acc: dict, image: dict, c: QtScalar = ONE):
    for e, row in image.items():
        _accumulate(acc, e, row, c)


def _clean(acc: dict) -> dict:
    out = {}
    for e, row in acc.items():
        row = {la: c for la, c in row.items() if c}
        if row:
            out[e] = row
    return out


def _as_image(F: VElem) -> dict:
    return {e: dict(G.coeffs) for e, G in F.terms.items()}


# -- Delta and T_i ------------------------------------------------------------


@lru_cache(maxsize=None)
def delta_star_monomial(a: int, b: int) -> tuple:
    """Delta*_{uv}(u^a v^b) as a tuple of ((a', b'), coeff).

    Delta* P = sP + (q-1) u (P - sP)/(v - u) with s swapping u and v.
    """
    out: dict = {(b, a): ONE}
    if a != b:
        lo, d = min(a, b), abs(a - b)
        sign = -ONE if a > b else ONE
        for j in range(d):
            key = (lo + j + 1, lo + d - 1 - j)
            out[key] = out.get(key, 0) + sign * (q - 1)
    return tuple((k, as_scalar(v)) for k, v in out.items() if v)


def delta_op(P: dict, star: bool = True) -> dict:
    """Delta_{uv} or Delta*_{uv} on a polynomial ``{(a, b): coeff}`` in u, v.

    Delta = Delta* + (q - 1).
    """
    out: dict = {}
    for (a, b), c in P.items():
        for key, d in delta_star_monomial(a, b):
            out[key] = out.get(key, 0) + c * d
        if not star:
            out[(a, b)] = out.get((a, b), 0) + c * (q - 1)
    return {k: as_scalar(v) for k, v in out.items() if v}


def _check_index(i: int, k: int, lo: int = 1, hi: int | None = None):
    hi = k - 1 if hi is None else hi
    if not lo <= i <= hi:
        raise LevelError(f"index {i} out of range {lo}..{hi} on V_{k}")


@lru_cache(maxsize=None)
def _t_image(i: int, e: tuple, la: tuple, inverse: bool) -> dict:
    a, b = e[i - 1], e[i]
    out: dict = {}
    for (a2, b2), c in delta_star_monomial(a, b):
        e2 = e[: i - 1] + (a2, b2) + e[i + 1:]
        out[e2] = {la: c}
    if inverse:
        # T^{-1} = q^{-1} (T + q - 1)
        acc: dict = {}
        _merge(acc, out, ONE / q)
        _accumulate(acc, e, {la: ONE}, (q - 1) / q)
        out = _clean(acc)
    return out


def t_op(i: int, F: VElem, inverse: bool = False) -> VElem:
    """T_i = Delta*_{y_i y_{i+1}} (or its inverse) on V_k."""
    _check_index(i, F.level)
    return _apply(F, F.level, lambda e, la: _t_image(i, e, la, inverse))


def T(i: int, F: VElem) -> VElem:
    return t_op(i, F)


def T_inv(i: int, F: VElem) -> VElem:
    return t_op(i, F, inverse=True)


# -- d_+, d_-, d_+^* ----------------------------------------------------------


@lru_cache(maxsize=None)
def _shift_coeff(j: int) -> QtScalar:
    """h_j[q - 1]."""
    return ONE if j == 0 else q**j - q ** (j - 1)


@lru_cache(maxsize=None)
def _shift_y(la: tuple) -> tuple:
    """h_lambda[X + (q-1) y] as ((power of y, {mu: coeff}), ...)."""
    out: dict = {}
    for js in iproduct(*(range(p + 1) for p in la)):
        c = ONE
        for j in js:
            c = c * _shift_coeff(j)
        mu = sort_partition(p - j for p, j in zip(la, js))
        row = out.setdefault(sum(js), {})
        row[mu] = row.get(mu, 0) + c
    return tuple((s, {mu: as_scalar(c) for mu, c in row.items() if c}) for s, row in sorted(out.items()))


@lru_cache(maxsize=None)
def _d_plus_image(e: tuple, la: tuple) -> dict:
    k = len(e)
    acc = VElem._raw(k + 1, {e + (s,): SymFunc._raw(row, "h") for s, row in _shift_y(la) if row})
    for i in range(k, 0, -1):
        acc = t_op(i, acc)
    return _as_image(acc)


def d_plus(F: VElem) -> VElem:
    """T_1 ... T_k (F[X + (q-1) y_{k+1}]): V_k -> V_{k+1}."""
    return _apply(F, F.level + 1, _d_plus_image)


@lru_cache(maxsize=None)
def _d_minus_image(e: tuple, la: tuple) -> dict:
    img = B(e[-1] + 1, SymFunc._raw({la: ONE}, "h"))
    return {e[:-1]: {mu: -c for mu, c in img.coeffs.items()}}


def d_minus(F: VElem) -> VElem:
    """d_-(y_k^i F) = -B_{i+1} F: V_k -> V_{k-1}."""
    if F.level < 1:
        raise LevelError("d_- needs level >= 1")
    return _apply(F, F.level - 1, _d_minus_image)


@lru_cache(maxsize=None)
def _d_plus_star_image(e: tuple, la: tuple) -> dict:
    out = {}
    for s, row in _shift_y(la):
        c = t**s
        out[(s,) + e] = {mu: c * v for mu, v in row.items()}
    return out


def d_plus_star(F: VElem) -> VElem:
    """gamma(F[X + (q-1) y_{k+1}]), gamma: y_i -> y_{i+1}, y_{k+1} -> t y_1."""
    return _apply(F, F.level + 1, _d_plus_star_image)


# -- multiplication operators ---------------------------------------------


def y_mul(i: int, F: VElem, power: int = 1) -> VElem:
    _check_index(i, F.level, 1, F.level)
    terms = {}
    for e, G in F.terms.items():
        e2 = e[: i - 1] + (e[i - 1] + power,) + e[i:]
        terms[e2] = G
    return VElem._raw(F.level, terms)


@lru_cache(maxsize=None)
def _z1_image(e: tuple, la: tuple) -> dict:
    k = len(e)
    G = VElem._raw(k, {e: SymFunc._raw({la: ONE}, "h")})
    for i in range(1, k):
        G = t_op(i, G, inverse=True)
    first = d_plus_star(d_minus(G))
    second = d_minus(d_plus_star(G))
    res = (first - second).scale(q ** (k - 1) / (ONE / q - 1))
    return _as_image(res)


@lru_cache(maxsize=None)
def _z_image(i: int, e: tuple, la: tuple) -> dict:
    if i == 1:
        return _z1_image(e, la)
    # z_i = q^{-1} T_{i-1} z_{i-1} T_{i-1}
    k = len(e)
    G = VElem._raw(k, {e: SymFunc._raw({la: ONE}, "h")})
    G = t_op(i - 1, G)
    G = _apply(G, k, lambda e2, la2: _z_image(i - 1, e2, la2))
    G = t_op(i - 1, G).scale(ONE / q)
    return _as_image(G)


def z_op(i: int, F: VElem, power: int = 1) -> VElem:
    """The starred counterpart of y_i, built from d_+^*, d_- and T^{-1}."""
    _check_index(i, F.level, 1, F.level)
    for _ in range(power):
        F = _apply(F, F.level, lambda e, la: _z_image(i, e, la))
    return F


def commutator_minus_plus(F: VElem) -> VElem:
    """[d_-, d_+] F = d_- d_+ F - d_+ d_- F."""
    return d_minus(d_plus(F)) - d_plus(d_minus(F))


def corner_op(F: VElem) -> VElem:
    """(1/(q-1)) [d_-, d_+]."""
    return commutator_minus_plus(F).scale(ONE / (q - 1))
