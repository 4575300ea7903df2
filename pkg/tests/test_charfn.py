from itertools import permutations, product

import pytest

from compshuffle.charfn import (
    chi,
    chi_multiset,
    chi_partial,
    chi_weighted,
    chi_weighted_bruteforce,
    chi_zero,
    chi_zero_direct,
    constant_weight,
    dalpha_bruteforce,
    multiset_permutations,
    verify_charfn,
)
from compshuffle.dpa import VElem, d_minus, d_plus
from compshuffle.dyck import DyckPath, enumerate_partial_paths, enumerate_paths, flip_corners, inv, parse_path, reverse_path
from compshuffle.qtring import ONE, q, t
from compshuffle.shapes import compositions, partitions
from compshuffle.symfn import Alphabet, SymFunc, plethysm_sym
from compshuffle.symfn.macdonald import nabla

WEIGHTS = (0, 1, q, 1 / t)


def s(*la):
    return SymFunc.elem("s", la)


def test_chi_examples(small_path):
    assert chi(small_path) == SymFunc({(3,): 1, (2, 1): 2 + q, (1, 1, 1): 3 + 3 * q}, "m")
    assert chi(small_path) == s(3) + s(2, 1).scale(1 + q) + s(1, 1, 1).scale(q)
    flipped = flip_corners(small_path, small_path.corners)
    assert chi(flipped) == s(3) + s(2, 1).scale(2 * q) + s(1, 1, 1).scale(q**2)
    assert chi(DyckPath("")) == SymFunc.one()


def test_chi_zero_examples(small_path):
    expected = s(2, 1) + s(1, 1, 1).scale(q)
    assert chi_zero(small_path) == expected
    assert chi_weighted(small_path, constant_weight(small_path, 0)) == expected
    assert chi_zero_direct(small_path) == expected
    assert chi_zero(parse_path("NE")) == s(1)


def test_weight_one_is_chi():
    for n in range(5):
        for p in enumerate_paths(n):
            assert chi_weighted(p, constant_weight(p, 1)) == chi(p)


def test_multiset_permutations():
    perms = list(multiset_permutations((2, 1)))
    assert perms == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert len(list(multiset_permutations((2, 2, 1)))) == 30


def test_symmetry_of_multiset_sums():
    # the inv generating function over rearrangements does not depend on
    # the order of the content vector
    for n in range(1, 6):
        for p in enumerate_paths(n):
            for la in partitions(n):
                base = chi_multiset(p, la)
                for c in set(permutations(la)):
                    assert chi_multiset(p, c) == base


def test_reverse_path_invariance():
    for n in range(7):
        for p in enumerate_paths(n):
            assert chi(p) == chi(reverse_path(p))


def test_no_attack_identity():
    X = Alphabet.X()
    for n in range(1, 5):
        for p in enumerate_paths(n):
            lhs = plethysm_sym(chi(p), X * (q - 1)).to("m")
            coeffs = {}
            for w in product(range(1, n + 1), repeat=n):
                if any(w[i - 1] == w[j - 1] for i, j in p.area_cells):
                    continue
                content = [w.count(x) for x in range(1, n + 1)]
                if any(a < b for a, b in zip(content, content[1:])):
                    continue
                la = tuple(c for c in content if c)
                coeffs[la] = coeffs.get(la, 0) + q ** inv(p, w)
            rhs = SymFunc(coeffs, "m").scale((q - 1) ** n)
            assert lhs == rhs, p.steps


def test_corner_recursion_against_brute_force():
    for n in range(1, 5):
        for p in enumerate_paths(n):
            for value in WEIGHTS:
                wt = constant_weight(p, value)
                assert chi_weighted(p, wt) == chi_weighted_bruteforce(p, wt), (p.steps, value)


def test_corner_recursion_each_corner():
    # both sides of the recursion at one corner, the rest weighted by another value
    for n in range(1, 6):
        for p in enumerate_paths(n):
            for c in p.corners:
                for w0 in WEIGHTS:
                    for w_rest in (0, q):
                        wt = {d: (w0 if d == c else w_rest) for d in p.corners}
                        rest = {d: w_rest for d in p.corners if d != c}
                        f = flip_corners(p, [c])
                        rest_f = {d: v for d, v in rest.items() if d in f.corners}
                        rhs = chi_weighted(p, rest).scale((q * w0 - 1) / (q - 1)) + chi_weighted(f, rest_f).scale(
                            (ONE - w0) / (q - 1)
                        )
                        if n <= 3:
                            assert chi_weighted_bruteforce(p, wt) == rhs
                        else:
                            assert chi_weighted(p, wt) == rhs


def test_chi_zero_routes_agree():
    for n in range(6):
        for p in enumerate_paths(n):
            z = chi_zero(p)
            assert z == chi_zero_direct(p)
            assert z == chi_weighted(p, constant_weight(p, 0))


def test_chi_partial_level_zero_and_one():
    for n in range(4):
        for p in enumerate_paths(n):
            assert chi_partial(p) == VElem.from_sym(chi(p))
    assert chi_partial(DyckPath("E", 1)) == VElem.one(1)


def test_chi_partial_recursions():
    for k in range(0, 4):
        for size in range(0, 5 - k + 1):
            if k + size > 5 or k + size == 0:
                continue
            for p in enumerate_partial_paths(k, size):
                if p.steps.startswith("E"):
                    rest = DyckPath(p.steps[1:], k - 1)
                    assert chi_partial(p) == d_plus(chi_partial(rest))
                else:
                    rest = DyckPath(p.steps[1:], k + 1)
                    assert chi_partial(p) == d_minus(chi_partial(rest))


def test_dalpha_bruteforce_values():
    assert dalpha_bruteforce((1,)) == s(1)
    # the path with touch' = (1,2) is NNEENE, with bounce 1
    assert dalpha_bruteforce((1, 2)) == s(2, 1).scale(t) + s(1, 1, 1).scale(q * t)
    assert dalpha_bruteforce((2, 1)) == s(2, 1).scale(q * t) + s(1, 1, 1).scale(q**2 * t)


def test_dalpha_sum_is_nabla_en():
    for n in range(1, 5):
        total = SymFunc.zero()
        for alpha in compositions(n):
            total = total + dalpha_bruteforce(alpha)
        assert total == nabla(SymFunc.elem("e", (n,))).scale((-1) ** n)


def test_suite():
    assert verify_charfn(4)["status"] == "pass"


def test_weight_on_non_corner_rejected(small_path):
    with pytest.raises(ValueError):
        chi_weighted(small_path, {(1, 2): 0})
