"""Transition matrices between the classical bases m, e, h, p, s.

Everything is expressed through the monomial basis: for a basis ``b`` the
matrix ``to_monomial(b, n)`` lists the m-expansion of each b_lambda.  These
coefficients are integers obtained by counting (integer matrices with given
margins, 0/1 matrices, set maps, semistandard tableaux).  Inverses are exact
over Q.  All tables are cached per degree; filling a cache entry twice is
harmless.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..linalg import invert
from ..qtring import as_scalar
from ..shapes import partitions

BASES = ("m", "e", "h", "p", "s")


@lru_cache(maxsize=None)
def _count(kind: str, parts: tuple, target: tuple) -> int:
    """Coefficient of x^target in prod_{a in parts} f_a(x) for the basis ``kind``."""
    if not parts:
        return 1 if not any(target) else 0
    a, rest = parts[0], parts[1:]
    total = 0
    for used in _placements(kind, a, target):
        remaining = tuple(c - u for c, u in zip(target, used))
        total += _count(kind, rest, remaining)
    return total


def _placements(kind, a, target):
    """Ways one factor of degree ``a`` distributes exponents over the variables."""
    k = len(target)
    if kind == "p":
        for i in range(k):
            if target[i] >= a:
                yield tuple(a if j == i else 0 for j in range(k))
        return
    cap = 1 if kind == "e" else None
    yield from _weak_vectors(a, target, cap)


def _weak_vectors(total, bounds, cap, prefix=()):
    i = len(prefix)
    if i == len(bounds):
        if total == 0:
            yield prefix
        return
    hi = min(total, bounds[i]) if cap is None else min(total, bounds[i], cap)
    for v in range(hi, -1, -1):
        yield from _weak_vectors(total - v, bounds, cap, prefix + (v,))


@lru_cache(maxsize=None)
def kostka(la: tuple, mu: tuple) -> int:
    """Number of semistandard tableaux of shape la and content mu."""
    if sum(la) != sum(mu):
        return 0
    if not mu:
        return 1 if not la else 0
    last, rest = mu[-1], mu[:-1]
    total = 0
    for nu in _remove_horizontal_strip(la, last):
        total += kostka(nu, rest)
    return total


def _remove_horizontal_strip(la, size):
    """All nu with la/nu a horizontal strip of the given size."""
    la = list(la)
    n = len(la)

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        lower = la[i + 1] if i + 1 < n else 0
        for nu_i in range(la[i], lower - 1, -1):
            take = la[i] - nu_i
            if take > remaining:
                break
            yield from rec(i + 1, remaining - take, acc + [nu_i])

    yield from rec(0, size, [])


@lru_cache(maxsize=None)
def to_monomial(basis: str, n: int) -> dict:
    """``{lambda: {mu: int}}``: the m-expansion of basis elements of degree n."""
    parts = partitions(n)
    if basis == "m":
        return {la: {la: 1} for la in parts}
    out = {}
    for la in parts:
        row = {}
        for mu in parts:
            c = kostka(la, mu) if basis == "s" else _count(basis, la, mu)
            if c:
                row[mu] = c
        out[la] = row
    return out


@lru_cache(maxsize=None)
def from_monomial(basis: str, n: int) -> dict:
    """``{mu: {lambda: Fraction}}``: the basis-``basis`` expansion of m_mu."""
    parts = partitions(n)
    if basis == "m":
        return {la: {la: Fraction(1)} for la in parts}
    fwd = to_monomial(basis, n)
    mat = [[Fraction(fwd[la].get(mu, 0)) for mu in parts] for la in parts]
    inv = invert(mat, Fraction(1), Fraction(0))
    # row mu of inv gives m_mu in terms of basis_lambda
    return {mu: {la: inv[i][j] for j, la in enumerate(parts) if inv[i][j]} for i, mu in enumerate(parts)}


@lru_cache(maxsize=None)
def transition(src: str, dst: str, n: int) -> dict:
    """``{lambda: {mu: QtScalar}}`` expanding src_lambda in the dst basis."""
    if src not in BASES or dst not in BASES:
        raise ValueError(f"unknown basis {src!r} or {dst!r}")
    fwd = to_monomial(src, n)
    back = from_monomial(dst, n)
    out = {}
    for la, row in fwd.items():
        acc: dict = {}
        for mu, c in row.items():
            for nu, d in back[mu].items():
                acc[nu] = acc.get(nu, 0) + c * d
        out[la] = {nu: as_scalar(Fraction(v)) for nu, v in acc.items() if v}
    return out
