"""Exact checks of the defining relations of the Dyck path algebra, its
starred twin, and the mixed relations tying them together.

Every relation is an identity of operators V_k -> V_k'.  It is evaluated on
test vectors F in V_k: either every monomial y^e h_lambda up to a degree bound
(exhaustive mode) or seeded pseudorandom sparse elements.  Because the
relations are linear, exhaustive mode is a proof on that graded piece.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import product as iproduct

from ..qtring import ONE, QtScalar, q, t
from ..shapes import partitions
from ..symfn import SymFunc
from .operators import d_minus as dm
from .operators import d_plus as dp
from .operators import d_plus_star as dps
from .operators import delta_op, t_op, y_mul, z_op
from .velem import VElem


def T(i, F):
    return t_op(i, F)


def Ti(i, F):
    return t_op(i, F, inverse=True)


def T_chain(idx, F, inverse=False):
    """Apply T_{idx[0]} ... T_{idx[-1]} (rightmost first)."""
    for i in reversed(list(idx)):
        F = t_op(i, F, inverse)
    return F


def comm(F):
    """(d_+ d_- - d_- d_+) F."""
    return dp(dm(F)) - dm(dp(F))


def comm_star(F):
    """(d_+^* d_- - d_- d_+^*) F."""
    return dps(dm(F)) - dm(dps(F))


@dataclass(frozen=True)
class Relation:
    name: str
    group: str
    min_level: int
    fn: object  # F -> list of (label, lhs, rhs)


def _rel(name, group, min_level):
    def deco(fn):
        RELATIONS.append(Relation(name, group, min_level, fn))
        return fn

    return deco


RELATIONS: list = []

# -- Definition 5.1 ---------------------------------------------------------


@_rel("quadratic (T_i-1)(T_i+q)=0", "dpa", 2)
def _quadratic(F):
    out = []
    for i in range(1, F.level):
        G = T(i, F) + F.scale(q)
        out.append((f"i={i}", T(i, G) - G, VElem.zero(F.level)))
    return out


@_rel("braid T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}", "dpa", 3)
def _braid(F):
    return [(f"i={i}", T(i, T(i + 1, T(i, F))), T(i + 1, T(i, T(i + 1, F)))) for i in range(1, F.level - 1)]


@_rel("locality T_i T_j = T_j T_i (|i-j|>1)", "dpa", 4)
def _far(F):
    k = F.level
    return [(f"i={i},j={j}", T(i, T(j, F)), T(j, T(i, F))) for i in range(1, k) for j in range(i + 2, k)]


@_rel("T_i d_- = d_- T_i", "dpa", 3)
def _t_dminus(F):
    return [(f"i={i}", T(i, dm(F)), dm(T(i, F))) for i in range(1, F.level - 1)]


@_rel("d_+ T_i = T_{i+1} d_+", "dpa", 2)
def _dplus_t(F):
    return [(f"i={i}", dp(T(i, F)), T(i + 1, dp(F))) for i in range(1, F.level)]


@_rel("T_1 d_+^2 = d_+^2", "dpa", 0)
def _t1_dplus2(F):
    G = dp(dp(F))
    return [("", T(1, G), G)]


@_rel("d_-^2 T_{k-1} = d_-^2", "dpa", 2)
def _dminus2(F):
    k = F.level
    return [("", dm(dm(T(k - 1, F))), dm(dm(F)))]


@_rel("d_-(d_+d_- - d_-d_+)T_{k-1} = q(d_+d_- - d_-d_+)d_-", "dpa", 2)
def _mixed_minus(F):
    k = F.level
    return [("", dm(comm(T(k - 1, F))), comm(dm(F)).scale(q))]


@_rel("T_1(d_+d_- - d_-d_+)d_+ = q d_+(d_+d_- - d_-d_+)", "dpa", 1)
def _mixed_plus(F):
    return [("", T(1, comm(dp(F))), dp(comm(F)).scale(q))]


# -- y_i --------------------------------------------------------------------


@_rel("(d_-d_+ - d_+d_-)F = (q-1)T_1...T_{k-1}(-y_k F)", "y", 1)
def _commutator_y(F):
    k = F.level
    rhs = T_chain(range(1, k), -y_mul(k, F)).scale(q - 1)
    return [("", -comm(F), rhs)]


@_rel("y_i = q^-1 T_i y_{i+1} T_i", "y", 2)
def _y_conj(F):
    return [(f"i={i}", y_mul(i, F), T(i, y_mul(i + 1, T(i, F))).scale(ONE / q)) for i in range(1, F.level)]


@_rel("y_i T_j = T_j y_i (i not in {j,j+1})", "y", 3)
def _y_t(F):
    k = F.level
    return [
        (f"i={i},j={j}", y_mul(i, T(j, F)), T(j, y_mul(i, F)))
        for j in range(1, k)
        for i in range(1, k + 1)
        if i not in (j, j + 1)
    ]


@_rel("y_i d_- = d_- y_i", "y", 2)
def _y_dminus(F):
    return [(f"i={i}", y_mul(i, dm(F)), dm(y_mul(i, F))) for i in range(1, F.level)]


@_rel("d_+ y_i = T_1..T_i y_i (T_1..T_i)^-1 d_+", "y", 1)
def _dplus_y(F):
    out = []
    for i in range(1, F.level + 1):
        rhs = T_chain(range(1, i + 1), y_mul(i, _undo_chain(i, dp(F))))
        out.append((f"i={i}", dp(y_mul(i, F)), rhs))
    return out


def _undo_chain(i, G):
    # (T_1 ... T_i)^{-1} = T_i^{-1} ... T_1^{-1}: T_1^{-1} acts first
    for j in range(1, i + 1):
        G = Ti(j, G)
    return G


@_rel("y_i y_j = y_j y_i", "y", 2)
def _y_commute(F):
    k = F.level
    return [(f"i={i},j={j}", y_mul(i, y_mul(j, F)), y_mul(j, y_mul(i, F))) for i in range(1, k + 1) for j in range(i + 1, k + 1)]


# -- starred action -----------------------------------------------------------


@_rel("quadratic (T_i^-1 - 1)(T_i^-1 + q^-1)=0", "star", 2)
def _s_quadratic(F):
    out = []
    for i in range(1, F.level):
        G = Ti(i, F) + F.scale(ONE / q)
        out.append((f"i={i}", Ti(i, G) - G, VElem.zero(F.level)))
    return out


@_rel("braid for T_i^-1", "star", 3)
def _s_braid(F):
    return [(f"i={i}", Ti(i, Ti(i + 1, Ti(i, F))), Ti(i + 1, Ti(i, Ti(i + 1, F)))) for i in range(1, F.level - 1)]


@_rel("locality for T_i^-1", "star", 4)
def _s_far(F):
    k = F.level
    return [(f"i={i},j={j}", Ti(i, Ti(j, F)), Ti(j, Ti(i, F))) for i in range(1, k) for j in range(i + 2, k)]


@_rel("T_i^-1 d_- = d_- T_i^-1", "star", 3)
def _s_t_dminus(F):
    return [(f"i={i}", Ti(i, dm(F)), dm(Ti(i, F))) for i in range(1, F.level - 1)]


@_rel("d_+^* T_i^-1 = T_{i+1}^-1 d_+^*", "star", 2)
def _s_dplus_t(F):
    return [(f"i={i}", dps(Ti(i, F)), Ti(i + 1, dps(F))) for i in range(1, F.level)]


@_rel("T_1^-1 d_+^*2 = d_+^*2", "star", 0)
def _s_t1_dplus2(F):
    G = dps(dps(F))
    return [("", Ti(1, G), G)]


@_rel("d_-^2 T_{k-1}^-1 = d_-^2", "star", 2)
def _s_dminus2(F):
    k = F.level
    return [("", dm(dm(Ti(k - 1, F))), dm(dm(F)))]


@_rel("d_-(d_+^*d_- - d_-d_+^*)T_{k-1}^-1 = q^-1(d_+^*d_- - d_-d_+^*)d_-", "star", 2)
def _s_mixed_minus(F):
    k = F.level
    return [("", dm(comm_star(Ti(k - 1, F))), comm_star(dm(F)).scale(ONE / q))]


@_rel("T_1^-1(d_+^*d_- - d_-d_+^*)d_+^* = q^-1 d_+^*(d_+^*d_- - d_-d_+^*)", "star", 1)
def _s_mixed_plus(F):
    return [("", Ti(1, comm_star(dps(F))), dps(comm_star(F)).scale(ONE / q))]


@_rel("(d_-d_+^* - d_+^*d_-)F = (q^-1-1)T_1^-1...T_{k-1}^-1(-z_k F)", "star", 1)
def _s_commutator_z(F):
    k = F.level
    rhs = T_chain(range(1, k), -z_op(k, F), inverse=True).scale(ONE / q - 1)
    return [("", -comm_star(F), rhs)]


@_rel("z_i = q T_i^-1 z_{i+1} T_i^-1", "star", 2)
def _s_z_conj(F):
    return [(f"i={i}", z_op(i, F), Ti(i, z_op(i + 1, Ti(i, F))).scale(q)) for i in range(1, F.level)]


@_rel("z_i T_j^-1 = T_j^-1 z_i (i not in {j,j+1})", "star", 3)
def _s_z_t(F):
    k = F.level
    return [
        (f"i={i},j={j}", z_op(i, Ti(j, F)), Ti(j, z_op(i, F)))
        for j in range(1, k)
        for i in range(1, k + 1)
        if i not in (j, j + 1)
    ]


@_rel("z_i d_- = d_- z_i", "star", 2)
def _s_z_dminus(F):
    return [(f"i={i}", z_op(i, dm(F)), dm(z_op(i, F))) for i in range(1, F.level)]


@_rel("d_+^* z_i = T_1^-1..T_i^-1 z_i (T_1^-1..T_i^-1)^-1 d_+^*", "star", 1)
def _s_dplus_z(F):
    out = []
    for i in range(1, F.level + 1):
        G = dps(F)
        for j in range(1, i + 1):
            G = T(j, G)
        rhs = T_chain(range(1, i + 1), z_op(i, G), inverse=True)
        out.append((f"i={i}", dps(z_op(i, F)), rhs))
    return out


@_rel("z_i z_j = z_j z_i", "star", 2)
def _s_z_commute(F):
    k = F.level
    return [(f"i={i},j={j}", z_op(i, z_op(j, F)), z_op(j, z_op(i, F))) for i in range(1, k + 1) for j in range(i + 1, k + 1)]


# -- mixed relations ----------------------------------------------------------


@_rel("z_{i+1} d_+ = d_+ z_i", "mixed", 1)
def _m_z_dplus(F):
    return [(f"i={i}", z_op(i + 1, dp(F)), dp(z_op(i, F))) for i in range(1, F.level + 1)]


@_rel("y_{i+1} d_+^* = d_+^* y_i", "mixed", 1)
def _m_y_dplus_star(F):
    return [(f"i={i}", y_mul(i + 1, dps(F)), dps(y_mul(i, F))) for i in range(1, F.level + 1)]


@_rel("z_1 d_+ = -t q^{k+1} y_1 d_+^*", "mixed", 0)
def _m_z1(F):
    k = F.level
    return [("", z_op(1, dp(F)), y_mul(1, dps(F)).scale(-t * q ** (k + 1)))]


RELATION_NAMES = [r.name for r in RELATIONS]


# -- test vectors --------------------------------------------------------------


def monomial_basis(k: int, degree: int) -> list:
    """y^e h_lambda in V_k with |e| + |lambda| = degree."""
    out = []
    for ydeg in range(degree + 1):
        for e in _weak(ydeg, k):
            for la in partitions(degree - ydeg):
                out.append(VElem._raw(k, {e: SymFunc._raw({la: ONE}, "h")}))
    return out


def _weak(n, k):
    if k == 0:
        return [()] if n == 0 else []
    return [(a,) + rest for a in range(n, -1, -1) for rest in _weak(n - a, k - 1)]


def _random_scalar(rng: random.Random) -> QtScalar:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        terms[(rng.randint(0, 2), rng.randint(0, 2))] = rng.choice([-3, -2, -1, 1, 2, 3])
    return QtScalar.from_dict(terms)


def random_velem(rng: random.Random, k: int, max_degree: int, n_terms: int = 3) -> VElem:
    acc = VElem.zero(k)
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        ydeg = rng.randint(0, d) if k else 0
        e = [0] * k
        for _ in range(ydeg):
            e[rng.randrange(k)] += 1
        la = rng.choice(partitions(d - ydeg))
        acc = acc + VElem._raw(k, {tuple(e): SymFunc._raw({la: _random_scalar(rng)}, "h")})
    return acc


# -- driver ------------------------------------------------------------------


@dataclass
class RelationResult:
    relation: str
    group: str
    level: int
    degree: int
    mode: str
    checked: int
    status: str
    failures: list

    def as_dict(self) -> dict:
        return asdict(self)


def _evaluate(rel: Relation, vectors) -> tuple:
    checked, failures = 0, []
    for F in vectors:
        for label, lhs, rhs in rel.fn(F):
            checked += 1
            if lhs != rhs:
                failures.append({"label": label, "input": str(F)})
    return checked, failures


def _check_one(args):
    rel_index, level, degree, mode, seed, trials = args
    rel = RELATIONS[rel_index]
    if mode == "exhaustive":
        vectors = monomial_basis(level, degree)
    else:
        vectors = [
            random_velem(random.Random(f"{seed}:{rel.name}:{level}:{trial}"), level, degree)
            for trial in range(trials)
        ]
    checked, failures = _evaluate(rel, vectors)
    status = "vacuous" if checked == 0 else ("pass" if not failures else "fail")
    return RelationResult(rel.name, rel.group, level, degree, mode, checked, status, failures[:5])


def _plan(k_max, degree, trials, seed, exhaustive):
    tasks = []
    for idx, rel in enumerate(RELATIONS):
        top = max(k_max, rel.min_level)
        for level in range(rel.min_level, top + 1):
            if exhaustive:
                for d in range(degree + 1):
                    tasks.append((idx, level, d, "exhaustive", seed, 0))
            else:
                tasks.append((idx, level, degree, "random", seed, trials))
    return tasks


def check_powers_of_d_plus(max_m: int = 4) -> RelationResult:
    """d_+^* d_+^m (1) = d_+^{m+1} (1)."""
    failures = []
    G = VElem.one(0)
    for m in range(max_m + 1):
        if dps(G) != dp(G):
            failures.append({"label": f"m={m}", "input": "1"})
        G = dp(G)
    status = "pass" if not failures else "fail"
    return RelationResult("d_+^* d_+^m(1) = d_+^{m+1}(1)", "mixed", 0, 0, "exact", max_m + 1, status, failures)


def check_delta_inverse(degree: int = 4) -> RelationResult:
    """Delta Delta^* = q on every monomial u^a v^b of degree <= ``degree``."""
    failures, checked = [], 0
    for a, b in iproduct(range(degree + 1), repeat=2):
        if a + b > degree:
            continue
        checked += 1
        P = {(a, b): ONE}
        if delta_op(delta_op(P, star=True), star=False) != {(a, b): q}:
            failures.append({"label": f"u^{a} v^{b}", "input": ""})
    status = "pass" if not failures else "fail"
    return RelationResult("Delta Delta^* = q", "dpa", 2, degree, "exhaustive", checked, status, failures)


def check_relations(k_max: int = 3, degree: int = 3, trials: int = 10, seed: int = 0, *,
                    exhaustive: bool = False, jobs: int = 1) -> list:
    """Evaluate every relation; returns a list of RelationResult."""
    tasks = _plan(k_max, degree, trials, seed, exhaustive)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_one, tasks, chunksize=1))
    else:
        results = [_check_one(task) for task in tasks]
    results.append(check_powers_of_d_plus())
    results.append(check_delta_inverse(max(degree, 2)))
    return results


def summarize(results) -> dict:
    failed = [r for r in results if r.status == "fail"]
    return {
        "status": "pass" if not failed else "fail",
        "relations": len({r.relation for r in results}),
        "checks": sum(r.checked for r in results),
        "failed": [r.relation for r in failed],
    }
