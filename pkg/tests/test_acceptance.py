"""Acceptance criteria, one printed PASS/FAIL line each.

Run with pytest (lines appear in the terminal summary) or directly:
    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import random
import time

import pytest

from compshuffle.charfn import chi, chi_zero
from compshuffle.dpa import VElem, apply_word, basis_element, basis_shapes, corner_word, d_minus, d_plus, path_word
from compshuffle.dpa.relations import check_relations, summarize
from compshuffle.dyck import bounce_seq, enumerate_paths, flip_corners, parse_path, touch_prime_data, verify_bijection, zeta
from compshuffle.qtring import q, t
from compshuffle.shapes import compositions, conjugate, n_stat, partitions
from compshuffle.shuffle import (
    d_alpha_operator,
    n_alpha,
    n_involution,
    nabla_c,
    omega_bar_then_nabla,
    verify_shuffle,
    y_alpha,
)
from compshuffle.symfn import B_seq, SymFunc
from compshuffle.symfn.macdonald import macdonald_H, nabla, nabla_eigenvalue

RESULTS: dict = {}


def s(*la):
    return SymFunc.elem("s", la)


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def record(key, title, ok, detail):
    RESULTS[key] = f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title} ({detail})"
    return ok


# -- criterion 1 ---------------------------------------------------------------------


def worked_examples() -> dict:
    """Each worked example as name -> (ok, seconds)."""
    ex = parse_path("NENNNENNEEEENNEE")
    small = parse_path("NNEENE")
    checks = {
        "area, dinv, touch of NENNNENNEEEENNEE": lambda: (ex.area, ex.dinv, ex.touch) == (9, 8, (1, 5, 2)),
        "sigma": lambda: zeta(ex).sigma == (1, 2, 4, 6, 7, 8, 3, 5),
        "bounce sequence": lambda: bounce_seq(zeta(ex).pi_prime) == (0, 0, 0, 1, 1, 2, 2, 3),
        "t_i": lambda: touch_prime_data(zeta(ex).pi_prime)[1] == (17, 16, 11, 9),
        "chi(pi)": lambda: chi(small) == s(3) + s(2, 1).scale(1 + q) + s(1, 1, 1).scale(q),
        "chi(flipped)": lambda: chi(flip_corners(small, small.corners)) == s(3) + s(2, 1).scale(2 * q) + s(1, 1, 1).scale(q**2),
        "chi(pi, 0)": lambda: chi_zero(small) == s(2, 1) + s(1, 1, 1).scale(q),
        "D value t s21 + qt s111 (alpha = (1,2))": lambda: d_alpha_operator((1, 2)) == s(2, 1).scale(t) + s(1, 1, 1).scale(q * t),
        "d-word chain": lambda: _d_chain(),
        "N_31": lambda: n_alpha((3, 1)) == VElem.monomial((2, 0), None, q * t**3) - VElem.monomial((1, 0), SymFunc.elem("e", (1,)), q * t**2),
        "d_-^2 N_31": lambda: d_minus(d_minus(n_alpha((3, 1)))).to_sym() == B_seq((3, 1)).scale(q * t**3) + B_seq((2, 1, 1)).scale(q * t**2),
    }
    out = {}
    for name, fn in checks.items():
        ok, secs = timed(fn)
        out[name] = (bool(ok) and secs < 1.0, secs)
    return out


def _d_chain():
    s1 = SymFunc.elem("s", (1,))
    a = d_plus(VElem.from_sym(s1))
    b = d_plus(a)
    c = d_minus(b)
    return (
        a == VElem.from_sym(s1, 1) + VElem.monomial((1,), None, q - 1)
        and b == VElem.from_sym(s1, 2) + VElem.monomial((1, 0), None, q - 1) + VElem.monomial((0, 1), None, q - 1)
        and c == VElem.from_sym(s(2) + s(1, 1), 1) + VElem.monomial((1,), s1, q - 1)
        and d_minus(c) == s(3) + s(2, 1).scale(1 + q) + s(1, 1, 1).scale(q)
    )


def literal_d21() -> bool:
    return d_alpha_operator((2, 1)) == s(2, 1).scale(t) + s(1, 1, 1).scale(q * t)


def criterion_1():
    results = worked_examples()
    literal = literal_d21()
    passed = sum(ok for ok, _ in results.values())
    worst = max(secs for _, secs in results.values())
    detail = (
        f"{passed}/{len(results)} worked examples exact, slowest {worst:.3f}s < 1s; "
        f"literal D_(2,1) = t s21 + qt s111: {'holds' if literal else 'does not hold, that value is D_(1,2)'}"
    )
    ok = passed == len(results) and literal
    record("1", "worked-example fidelity", ok, detail)
    return results, literal


# -- criteria 2-8 -------------------------------------------------------------------


def criterion_2():
    def run():
        paths = [p for n in range(7) for p in enumerate_paths(n)]
        return len(paths), all(apply_word(path_word(p)) == chi(p) for p in paths)

    (count, ok), secs = timed(run)
    ok = ok and count == 197 and secs < 120
    return record("2", "path words give chi", ok, f"{count} paths, {secs:.1f}s < 120s")


def criterion_3():
    def run():
        paths = [p for n in range(6) for p in enumerate_paths(n)]
        return len(paths), all(apply_word(corner_word(p)) == chi_zero(p) for p in paths)

    (count, ok), secs = timed(run)
    return record("3", "corner words give chi(pi, 0)", ok, f"{count} paths, {secs:.1f}s")


def criterion_4():
    rep, secs = timed(lambda: verify_bijection(8))
    ok = rep["status"] == "pass" and secs < 60 and len(enumerate_paths(8)) == 1430
    return record("4", "zeta bijection statistics", ok, f"{rep['checked']} paths of size <= 8, {secs:.1f}s < 60s")


def criterion_5():
    def run():
        exhaustive = check_relations(k_max=3, degree=3, exhaustive=True)
        randomized = check_relations(k_max=3, degree=5, trials=20, seed=0)
        return summarize(exhaustive), summarize(randomized)

    (ex, rnd), secs = timed(run)
    ok = ex["status"] == "pass" and rnd["status"] == "pass"
    detail = (
        f"{ex['relations']} relations; exhaustive degree <= 3, k <= 3: {ex['checks']} checks; "
        f"20 random elements of degree <= 5 per relation and level: {rnd['checks']} checks; "
        f"failed {sorted(set(ex['failed'] + rnd['failed']))}; {secs:.1f}s"
    )
    return record("5", "algebra relations", ok, detail)


def criterion_6():
    def run():
        basis = [basis_element(k, m, a) for k in range(3) for d in range(5) for m, a in basis_shapes(k, d)]
        square = all(n_involution(n_involution(E)) == E for E in basis)
        ya = all(
            n_involution(y_alpha(a)) == n_alpha(a).scale(q ** sum(x - 1 for x in a))
            for n in range(1, 6)
            for a in compositions(n)
        )
        sym = all(
            n_involution(VElem.from_sym(SymFunc.elem("h", la))) == omega_bar_then_nabla(SymFunc.elem("h", la))
            for d in range(5)
            for la in partitions(d)
        )
        return len(basis), square, ya, sym

    (count, square, ya, sym), secs = timed(run)
    ok = square and ya and sym
    detail = f"N^2 = id on {count} basis elements: {square}; N(y_alpha) = q^.. N_alpha for |alpha| <= 5: {ya}; N = nabla omega-bar on h_lambda, degree <= 4: {sym}; {secs:.1f}s"
    return record("6", "involution", ok, detail)


def criterion_7(jobs: int = 1):
    def run():
        return [verify_shuffle(n, jobs=jobs) for n in range(1, 7)]

    reports, secs = timed(run)
    count = sum(len(r.records) for r in reports)
    ok = all(r.status == "pass" for r in reports) and count == 63 and secs < 600
    sums = all(r.sum_check for r in reports)
    detail = f"{count} compositions, three-way equal: {all(rec.ok for r in reports for rec in r.records)}; sum D_alpha = (-1)^n nabla e_n for n <= 6: {sums}; {secs:.1f}s < 600s"
    return record("7", "nabla C_alpha(1) = D_alpha", ok, detail)


def criterion_8():
    def run():
        poly = all(c.is_polynomial() for n in range(1, 6) for mu in partitions(n) for c in macdonald_H(mu).coeffs.values())
        oracles = (
            macdonald_H((1,)) == s(1)
            and macdonald_H((2,)) == s(2) + s(1, 1).scale(q)
            and macdonald_H((1, 1)) == s(2) + s(1, 1).scale(t)
        )
        diagonal = True
        for n in range(1, 6):
            for mu in partitions(n):
                ev = (-1) ** n * q ** n_stat(conjugate(mu)) * t ** n_stat(mu)
                diagonal &= ev == nabla_eigenvalue(mu) and nabla(macdonald_H(mu)) == macdonald_H(mu).scale(ev)
        return poly, oracles, diagonal

    (poly, oracles, diagonal), secs = timed(run)
    ok = poly and oracles and diagonal
    return record("8", "Macdonald route", ok, f"polynomial: {poly}; small oracles: {oracles}; nabla diagonal: {diagonal}; {secs:.1f}s")


# -- pytest entry points -----------------------------------------------------------


def test_criterion_1_worked_examples():
    results, _ = criterion_1()
    bad = {k: v for k, v in results.items() if not v[0]}
    assert not bad


@pytest.mark.xfail(strict=True, reason="the published D_(2,1) value belongs to alpha = (1,2)")
def test_criterion_1_literal_d21():
    assert literal_d21()


def test_criterion_2_path_words():
    assert criterion_2()


def test_criterion_3_corner_words():
    assert criterion_3()


def test_criterion_4_bijection():
    assert criterion_4()


def test_criterion_5_relations():
    assert criterion_5()


def test_criterion_6_involution():
    assert criterion_6()


def test_criterion_7_main_identity():
    assert criterion_7()


def test_criterion_8_macdonald():
    assert criterion_8()


if __name__ == "__main__":
    for fn in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8):
        fn()
    for key in sorted(RESULTS):
        print(RESULTS[key])
