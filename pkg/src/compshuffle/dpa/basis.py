"""The spanning set d_-^m y^a d_+^{k+m}(1) of V_k and decomposition in it.

Its image in V_k is explicit:

    (-1)^m y_1^{a_1} ... y_k^{a_k} B_{a_{k+1}+1} ... B_{a_{k+m}+1}(1)

with a_{k+1} >= ... >= a_{k+m}.  So a decomposition splits an element by its
y-monomial and expands each symmetric coefficient in the basis
{(-1)^{l(mu)} B_mu(1)} of Sym, mu running over partitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..linalg import invert
from ..qtring import ONE, ZERO
from ..shapes import partitions
from ..symfn import B_seq, SymFunc
from .velem import VElem


class BasisShapeError(ValueError):
    pass


def check_shape(k: int, m: int, a) -> tuple:
    a = tuple(a)
    if k < 0 or m < 0 or len(a) != k + m or any(x < 0 for x in a):
        raise BasisShapeError(f"bad basis index k={k}, m={m}, a={a}")
    tail = a[k:]
    if any(x < y for x, y in zip(tail, tail[1:])):
        raise BasisShapeError(f"tail {tail} must be weakly decreasing")
    return a


@lru_cache(maxsize=None)
def _sym_part(tail: tuple) -> SymFunc:
    """(-1)^m B_{a+1}...(1) for the decreasing tail a."""
    return B_seq(tuple(x + 1 for x in tail)).scale((-1) ** len(tail))


def basis_element(k: int, m: int, a) -> VElem:
    a = check_shape(k, m, a)
    return VElem(k, {a[:k]: _sym_part(a[k:])})


def basis_shapes(k: int, degree: int) -> list:
    """All (m, a) indexing basis elements of V_k of the given total degree."""
    out = []
    for m in range(degree + 1):
        for tail_sum in range(degree - m + 1):
            for mu in partitions(tail_sum):
                if len(mu) > m:
                    continue
                tail = tuple(mu) + (0,) * (m - len(mu))
                for head in _weak_compositions(degree - m - tail_sum, k):
                    out.append((m, head + tail))
    return out


def _weak_compositions(n: int, k: int):
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _weak_compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _inverse_matrix(n: int):
    """Rows: partitions mu of n; entries: h-coefficients of (-1)^l B_mu(1)."""
    parts = partitions(n)
    rows = []
    for mu in parts:
        img = _sym_part(tuple(p - 1 for p in mu))
        rows.append([img.coefficient(la) for la in parts])
    return parts, invert(rows, ONE, ZERO)


def decompose_sym(F: SymFunc) -> dict:
    """{mu: c} with F = sum c (-1)^{l(mu)} B_mu(1)."""
    F = F.to("h")
    out = {}
    for n in sorted(F.degrees()):
        parts, inv = _inverse_matrix(n)
        g = [F.coefficient(la) for la in parts]
        for j, mu in enumerate(parts):
            c = ZERO
            for i, gi in enumerate(g):
                if gi and inv[i][j]:
                    c = c + gi * inv[i][j]
            if c:
                out[mu] = c
    return out


@dataclass
class BasisDecomposition:
    level: int
    terms: list = field(default_factory=list)  # (m, a, coeff)

    def as_dict(self) -> dict:
        return {(m, a): c for m, a, c in self.terms}

    def reconstruct(self) -> VElem:
        acc = VElem.zero(self.level)
        for m, a, c in self.terms:
            acc = acc + basis_element(self.level, m, a).scale(c)
        return acc


def decompose(F: VElem) -> BasisDecomposition:
    out = []
    for e, G in F.items():
        for mu, c in decompose_sym(G).items():
            tail = tuple(p - 1 for p in mu)
            out.append((len(mu), e + tail, c))
    out.sort(key=lambda r: (sum(r[1]) + r[0], r[0], r[1]))
    return BasisDecomposition(F.level, out)

