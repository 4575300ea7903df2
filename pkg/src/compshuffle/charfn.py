"""Characteristic functions of Dyck paths.

chi(pi) is the generating function of all labellings of the rows of pi by
positive integers, weighted by q^inv.  Since it is symmetric, its
m_lambda coefficient is the inv generating function over rearrangements of
the multiset with content lambda; that is how it is computed here.

The weighted version puts an extra factor wt(i, j) on every corner (i, j)
whose labels satisfy w_i <= w_j.  It is evaluated by the corner recursion

    chi(pi, wt) = (q wt(c) - 1)/(q - 1) chi(pi, wt_1)
                  + (1 - wt(c))/(q - 1) chi(pi_c, wt_2)

where pi_c is pi with the corner c flipped.  Brute force evaluations over a
bounded alphabet are provided as independent oracles; a degree-n symmetric
function is determined by its restriction to n variables.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

from .dpa.velem import VElem
from .dyck import DyckPath, corner_subsets, flip_corners, inv
from .qtring import ONE, QtScalar, as_scalar, q, t
from .shapes import partitions
from .symfn import Alphabet, SymFunc, plethysm_sym


def _qpoly(counts: Counter) -> QtScalar:
    return QtScalar.from_dict({(k, 0): v for k, v in counts.items()})


def multiset_permutations(content):
    """Distinct arrangements of the multiset {i^content[i-1]}, lexicographic."""
    counts = list(content)
    n = sum(counts)
    word = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for label, c in enumerate(counts):
            if c:
                counts[label] -= 1
                word.append(label + 1)
                yield from rec()
                word.pop()
                counts[label] += 1

    yield from rec()


def _m_expansion(p: DyckPath, keep, weight=None) -> SymFunc:
    """sum over lambda of m_lambda * sum_{w in perms(M_lambda), keep(w)} q^inv(w) * weight(w)."""
    cells = sorted(p.area_cells)
    coeffs = {}
    for la in partitions(len(p.area_seq)):
        if weight is None:
            counts: Counter = Counter()
            for w in multiset_permutations(la):
                if keep is None or keep(w):
                    counts[sum(1 for i, j in cells if w[i - 1] > w[j - 1])] += 1
            c = _qpoly(counts)
        else:
            c = as_scalar(0)
            for w in multiset_permutations(la):
                c = c + q ** sum(1 for i, j in cells if w[i - 1] > w[j - 1]) * weight(w)
        if c:
            coeffs[la] = c
    return SymFunc(coeffs, "m")


@lru_cache(maxsize=None)
def _chi(steps: str) -> SymFunc:
    return _m_expansion(DyckPath(steps), None)


def chi(p: DyckPath) -> SymFunc:
    """chi(pi) in the m basis."""
    return _chi(p.steps)


def chi_multiset(p: DyckPath, content) -> QtScalar:
    """sum over rearrangements w of the multiset with the given (composition)
    content of q^inv(pi, w); independent of the order of ``content``."""
    counts: Counter = Counter()
    for w in multiset_permutations(content):
        counts[inv(p, w)] += 1
    return _qpoly(counts)


# -- weighted characteristic functions ---------------------------------------


def _normalize_weight(p: DyckPath, wt) -> tuple:
    wt = {} if wt is None else dict(wt)
    extra = set(wt) - set(p.corners)
    if extra:
        raise ValueError(f"weights given for non-corners {sorted(extra)}")
    return tuple(sorted((c, as_scalar(v)) for c, v in wt.items() if as_scalar(v) != ONE))


def constant_weight(p: DyckPath, value) -> dict:
    return {c: as_scalar(value) for c in p.corners}


@lru_cache(maxsize=None)
def _chi_weighted(steps: str, wt: tuple) -> SymFunc:
    p = DyckPath(steps)
    if not wt:
        return chi(p)
    (corner, w0), rest = wt[0], dict(wt[1:])
    flipped = flip_corners(p, [corner])
    wt2 = tuple(sorted((c, v) for c, v in rest.items() if c in flipped.corners))
    a = _chi_weighted(steps, tuple(sorted(rest.items())))
    b = _chi_weighted(flipped.steps, wt2)
    return a.scale((q * w0 - 1) / (q - 1)) + b.scale((ONE - w0) / (q - 1))


def chi_weighted(p: DyckPath, wt=None) -> SymFunc:
    """chi(pi, wt) by the corner recursion; missing corners weigh 1."""
    return _chi_weighted(p.steps, _normalize_weight(p, wt))


def _corner_weight_fn(p: DyckPath, wt):
    wt = {c: as_scalar(v) for c, v in (wt or {}).items()}

    def weight(w):
        out = ONE
        for (i, j), v in wt.items():
            if w[i - 1] <= w[j - 1]:
                out = out * v
        return out

    return weight


def chi_weighted_bruteforce(p: DyckPath, wt=None) -> SymFunc:
    """chi(pi, wt) by summing the defining series over the alphabet x_1..x_n.

    Reads the m_lambda coefficient off the words whose content is lambda.
    """
    n = len(p.area_seq)
    weight = _corner_weight_fn(p, wt)
    cells = sorted(p.area_cells)
    coeffs: dict = {}
    for w in product(range(1, n + 1), repeat=n):
        content = [0] * n
        for x in w:
            content[x - 1] += 1
        if any(a < b for a, b in zip(content, content[1:])):
            continue
        la = tuple(c for c in content if c)
        term = q ** sum(1 for i, j in cells if w[i - 1] > w[j - 1]) * weight(w)
        coeffs[la] = coeffs.get(la, 0) + term
    return SymFunc(coeffs, "m")


def chi_zero(p: DyckPath) -> SymFunc:
    """chi(pi, 0) by inclusion-exclusion over flipped corner subsets."""
    total = SymFunc.zero("m")
    for S in corner_subsets(p):
        term = chi(flip_corners(p, S))
        total = total + (term if len(S) % 2 == 0 else -term)
    return total.scale((ONE - q) ** (-len(p.corners)))


@lru_cache(maxsize=None)
def _chi_zero_direct(steps: str) -> SymFunc:
    p = DyckPath(steps)
    corners = sorted(p.corners)
    return _m_expansion(p, lambda w: all(w[i - 1] > w[j - 1] for i, j in corners))


def chi_zero_direct(p: DyckPath) -> SymFunc:
    """chi(pi, 0) by summing only over labellings that decrease at every corner."""
    return _chi_zero_direct(p.steps)


def dalpha_bruteforce(alpha) -> SymFunc:
    """sum over paths with touch' = alpha of t^bounce times the corner-restricted
    labelling generating function."""
    from .dyck import bounce, enumerate_paths

    alpha = tuple(alpha)
    total = SymFunc.zero("m")
    for p in enumerate_paths(sum(alpha), alpha):
        total = total + chi_zero_direct(p).scale(t ** bounce(p))
    return total


# -- partial paths -----------------------------------------------------------


def chi_partial(p: DyckPath) -> VElem:
    """chi_k of a partial path from (0, k), by brute force.

    Rows 1..k carry the special labels 1..k, the other rows any labels in
    1..n, subject to the no-attack condition.  Labels <= k are the variables
    y_1..y_k, larger labels the variables x_1, x_2, ...  The result is
    (q-1)^|pi| / (y_1...y_k) times the generating function, with X replaced
    by X/(q-1).
    """
    k = p.start
    n = len(p.area_seq)
    size = n - k
    cells = sorted(p.area_cells)
    coeffs: dict = {}
    free = range(1, n + 1)
    for tail in product(free, repeat=size):
        w = tuple(range(1, k + 1)) + tail
        if any(w[i - 1] == w[j - 1] for i, j in cells):
            continue
        yexp = [0] * k
        xexp = [0] * size
        for x in w:
            if x <= k:
                yexp[x - 1] += 1
            else:
                xexp[x - k - 1] += 1
        if any(a < b for a, b in zip(xexp, xexp[1:])):
            continue
        la = tuple(c for c in xexp if c)
        key = tuple(e - 1 for e in yexp)
        row = coeffs.setdefault(key, {})
        term = q ** sum(1 for i, j in cells if w[i - 1] > w[j - 1])
        row[la] = row.get(la, 0) + term
    scale = (q - 1) ** size
    alphabet = Alphabet.X() * (ONE / (q - 1))
    terms = {}
    for e, row in coeffs.items():
        F = plethysm_sym(SymFunc(row, "m"), alphabet).scale(scale)
        terms[e] = F
    return VElem(k, terms)


# -- suite -------------------------------------------------------------------


def verify_charfn(n_max: int = 5, weighted_max: int = 3) -> dict:
    """For every path of size <= n_max: the path word gives chi, the corner
    word gives chi(pi, 0), and the three chi(pi, 0) routes agree.  For size
    <= weighted_max the corner recursion matches brute force at every
    constant weight in {0, 1, q, 1/t}."""
    from .dpa.words import apply_word, corner_word
    from .dpa.words import path_word as operator_word
    from .dyck import enumerate_paths

    failures, checked = [], 0
    for n in range(n_max + 1):
        for p in enumerate_paths(n):
            checked += 1
            z = chi_zero(p)
            if apply_word(operator_word(p)) != chi(p):
                failures.append(f"path word {p.steps}")
            if apply_word(corner_word(p)) != z:
                failures.append(f"corner word {p.steps}")
            if z != chi_zero_direct(p) or z != chi_weighted(p, constant_weight(p, 0)):
                failures.append(f"chi(pi, 0) routes {p.steps}")
            if n <= weighted_max:
                for value in (0, 1, q, 1 / t):
                    wt = constant_weight(p, value)
                    if chi_weighted(p, wt) != chi_weighted_bruteforce(p, wt):
                        failures.append(f"corner recursion {p.steps} wt={value}")
    return {"n_max": n_max, "checked": checked, "failures": failures[:10], "status": "pass" if not failures else "fail"}
