"""N_alpha, y_alpha, the three routes to D_alpha, the involution N, and the
end-to-end check nabla C_alpha(1) = D_alpha.

    N_()     = 1
    N_(1,a)  = d_+ N_a
    N_(a,b)  = t^(a-1)/(q-1) [d_-, d_+] sum_{c composition of a-1} d_-^(l(c)-1) N_(b,c)     (a > 1)

D_alpha = d_-^l(alpha) N_alpha.  The involution N is antilinear, fixes 1,
and sends the spanning element d_-^m y^a d_+^(k+m)(1) to
d_-^m z^a d_+^*(k+m)(1).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .charfn import dalpha_bruteforce
from .dpa.basis import decompose
from .dpa.operators import corner_op, d_minus, d_plus, d_plus_star, z_op
from .dpa.velem import VElem
from .dpa.words import apply_word, corner_word
from .dyck import DyckPath, bounce, enumerate_paths, touch_prime, touch_prime_data
from .qtring import q, t
from .shapes import compositions
from .symfn import C_seq, SymFunc, omega_ops
from .symfn.macdonald import nabla


def _dm_power(F: VElem, n: int) -> VElem:
    for _ in range(n):
        F = d_minus(F)
    return F


@lru_cache(maxsize=None)
def n_alpha(alpha) -> VElem:
    """N_alpha in V_l(alpha)."""
    alpha = tuple(alpha)
    if not alpha:
        return VElem.one(0)
    a, rest = alpha[0], alpha[1:]
    if a == 1:
        return d_plus(n_alpha(rest))
    acc = VElem.zero(len(alpha))
    for beta in compositions(a - 1):
        acc = acc + _dm_power(n_alpha(rest + tuple(beta)), len(beta) - 1)
    return corner_op(acc).scale(t ** (a - 1))


@lru_cache(maxsize=None)
def n_alpha_oracle(alpha) -> VElem:
    """sum over paths pi = N^l pi~ with touch'(pi) = alpha of t^bounce(pi) chi(pi~, 0),
    chi(pi~, 0) evaluated through the corner word of the partial path pi~."""
    alpha = tuple(alpha)
    acc = VElem.zero(len(alpha))
    for p in enumerate_paths(sum(alpha)):
        if touch_prime(p) != alpha:
            continue
        l, _ = touch_prime_data(p)
        tail = DyckPath(p.steps[l:], start=l)
        acc = acc + apply_word(corner_word(tail)).scale(t ** bounce(p))
    return acc


def y_alpha(alpha) -> VElem:
    """y_1^(a_1 - 1) ... y_k^(a_k - 1) in V_k."""
    alpha = tuple(alpha)
    return VElem.monomial(tuple(a - 1 for a in alpha), SymFunc.one("h"))


def y_alpha_recursion(alpha) -> VElem:
    """y_alpha rebuilt from shorter and longer y's by the starred recursion."""
    alpha = tuple(alpha)
    if not alpha:
        return VElem.one(0)
    a, rest = alpha[0], alpha[1:]
    if a == 1:
        return d_plus_star(y_alpha(rest))
    acc = VElem.zero(len(alpha))
    for beta in compositions(a - 1):
        term = _dm_power(y_alpha(rest + tuple(beta)), len(beta) - 1)
        acc = acc + term.scale(q ** (1 - len(beta)))
    comm = d_plus_star(d_minus(acc)) - d_minus(d_plus_star(acc))
    return comm.scale(t ** (1 - a) / (q - 1))


def d_alpha_operator(alpha) -> SymFunc:
    """D_alpha = d_-^l(alpha) N_alpha."""
    alpha = tuple(alpha)
    return _dm_power(n_alpha(alpha), len(alpha)).to_sym()


def d_alpha_brute(alpha) -> SymFunc:
    return dalpha_bruteforce(tuple(alpha)).to("h")


def nabla_c(alpha) -> SymFunc:
    """nabla C_alpha_1 ... C_alpha_k (1), C_alpha_k applied first."""
    return nabla(C_seq(tuple(alpha)))


# -- the involution N -----------------------------------------------------------


def n_involution(F: VElem) -> VElem:
    """The antilinear involution N of V_k."""
    if isinstance(F, SymFunc):
        F = VElem.from_sym(F)
    k = F.level
    acc = VElem.zero(k)
    for m, a, c in decompose(F).terms:
        G = VElem.one(k + m)
        for i, power in enumerate(a, start=1):
            if power:
                G = z_op(i, G, power)
        acc = acc + _dm_power(G, m).scale(c.bar())
    return acc


def omega_bar_then_nabla(F: SymFunc) -> SymFunc:
    return nabla(omega_ops(F, "omega_bar"))


# -- the end-to-end verifier -----------------------------------------------------


@dataclass
class CompositionRecord:
    alpha: tuple
    d_op: SymFunc
    d_brute: SymFunc
    nabla_c: SymFunc
    seconds: float

    @property
    def op_equals_brute(self) -> bool:
        return self.d_op == self.d_brute

    @property
    def op_equals_nabla(self) -> bool:
        return self.d_op == self.nabla_c

    @property
    def ok(self) -> bool:
        return self.op_equals_brute and self.op_equals_nabla


@dataclass
class ShuffleReport:
    n: int
    records: list = field(default_factory=list)
    sum_check: bool = True
    seconds: float = 0.0
    ordering: str = "C_alpha = C_alpha_1 ... C_alpha_k, C_alpha_k applied first"

    @property
    def status(self) -> str:
        return "pass" if self.sum_check and all(r.ok for r in self.records) else "fail"


def _record(alpha) -> CompositionRecord:
    start = time.perf_counter()
    d_op = d_alpha_operator(alpha)
    d_brute = d_alpha_brute(alpha)
    nc = nabla_c(alpha)
    return CompositionRecord(tuple(alpha), d_op, d_brute, nc, time.perf_counter() - start)


def nabla_en(n: int) -> SymFunc:
    return nabla(SymFunc.elem("e", (n,)) if n else SymFunc.one("e"))


def verify_shuffle(n: int, jobs: int = 1) -> ShuffleReport:
    """Three-way check of D_alpha for every composition alpha of n, plus
    sum_alpha D_alpha = (-1)^n nabla e_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    start = time.perf_counter()
    alphas = [tuple(a) for a in compositions(n)] if n else [()]
    if jobs > 1 and len(alphas) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_record, alphas, chunksize=1))
    else:
        records = [_record(a) for a in alphas]
    total = SymFunc.zero("h")
    for r in records:
        total = total + r.d_op
    sum_ok = total == nabla_en(n).scale((-1) ** n)
    return ShuffleReport(n, records, sum_ok, time.perf_counter() - start)
