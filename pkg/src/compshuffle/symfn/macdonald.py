"""Modified Macdonald polynomials through weighted characteristic functions,
and the nabla operator they diagonalize.

The cells of mu are read row by row from the last row to the first, each row
left to right.  A cell (i, j) attacks the cells after it and before (i-1, j).
The path pi_mu has exactly the attacking pairs under it, and its corners
are the pairs (i, j), (i-1, j); the corner gets weight
q^arm(i,j) t^(-1-leg(i,j)) with arm and leg from ``shapes.arm_leg``.  Then

    H_mu = q^(-n(mu') + binom(mu_1, 2)) t^n(mu) chi(pi_mu, wt_mu).

nabla H_mu = (-1)^|mu| q^n(mu') t^n(mu) H_mu.
"""

from __future__ import annotations

from functools import lru_cache

from ..linalg import invert
from ..qtring import ONE, ZERO, q, t
from ..shapes import arm_leg, binom2, conjugate, n_stat, partitions
from .symfunc import SymFunc


def reading_cells(mu) -> list:
    return [(i, j) for i in range(len(mu), 0, -1) for j in range(1, mu[i - 1] + 1)]


def macdonald_path(mu):
    """(pi_mu, {corner: weight})."""
    from ..dyck import path_from_area_cells

    mu = tuple(mu)
    cells = reading_cells(mu)
    pos = {c: m for m, c in enumerate(cells, start=1)}
    n = len(cells)
    area = set()
    corners = {}
    for m1, (i, j) in enumerate(cells, start=1):
        stop = pos.get((i - 1, j), n + 1)
        area.update((m1, m2) for m2 in range(m1 + 1, stop))
        if (i - 1, j) in pos:
            arm, leg = arm_leg(mu, (i, j))
            corners[(m1, stop)] = q**arm * t ** (-1 - leg)
    path = path_from_area_cells(n, area)
    if set(corners) != set(path.corners):
        raise AssertionError(f"corner bookkeeping failed for {mu}")
    return path, corners


@lru_cache(maxsize=None)
def macdonald_H(mu) -> SymFunc:
    """Modified Macdonald polynomial H_mu, in the s basis."""
    from ..charfn import chi_weighted

    mu = tuple(mu)
    if not mu:
        return SymFunc.one("s")
    path, wt = macdonald_path(mu)
    pre = q ** (binom2(mu[0]) - n_stat(conjugate(mu))) * t ** n_stat(mu)
    return chi_weighted(path, wt).scale(pre).to("s")


def nabla_eigenvalue(mu):
    mu = tuple(mu)
    return (-1) ** sum(mu) * q ** n_stat(conjugate(mu)) * t ** n_stat(mu)


@lru_cache(maxsize=None)
def nabla_matrix(n: int):
    """(partitions, A) with nabla acting on h-coordinate row vectors as g -> g A."""
    parts = partitions(n)
    M = [[macdonald_H(mu).to("h").coefficient(la) for la in parts] for mu in parts]
    Minv = invert(M, ONE, ZERO)
    eig = [nabla_eigenvalue(mu) for mu in parts]
    EM = [[eig[i] * x for x in M[i]] for i in range(len(parts))]
    A = [[ZERO] * len(parts) for _ in parts]
    for i in range(len(parts)):
        for kk in range(len(parts)):
            a = Minv[i][kk]
            if not a:
                continue
            row = EM[kk]
            for j in range(len(parts)):
                if row[j]:
                    A[i][j] = A[i][j] + a * row[j]
    return parts, A


def nabla(F: SymFunc) -> SymFunc:
    Fh = F.to("h")
    out = {}
    for n in sorted(Fh.degrees()):
        parts, A = nabla_matrix(n)
        g = [Fh.coefficient(la) for la in parts]
        for j, la in enumerate(parts):
            c = ZERO
            for i, gi in enumerate(g):
                if gi and A[i][j]:
                    c = c + gi * A[i][j]
            if c:
                out[la] = c
    return SymFunc._raw(out, "h").to(F.basis)
