"""Partitions and compositions.

Shapes are plain tuples of positive integers.  A partition is weakly
decreasing; a composition is any tuple of positive parts.  Both serialize as
comma separated text ("3,1").
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from collections import Counter

Partition = tuple
Composition = tuple


def is_partition(parts) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def is_composition(parts) -> bool:
    return all(isinstance(p, int) and p > 0 for p in parts)


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """Partitions of n in reverse lexicographic order, largest first."""
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    """Compositions of n in lexicographic order by decreasing first part.

    For n = 3 this gives (3,), (2,1), (1,2), (1,1,1).
    """
    if n == 0:
        return ((),)
    out = []
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(sorted(out, key=lambda c: (len(c), [-p for p in c])))


def enumerate_shapes(n: int, kind: str) -> list:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "partition":
        return list(partitions(n))
    if kind == "composition":
        return list(compositions(n))
    raise ValueError(f"unknown shape kind {kind!r}")


def conjugate(mu) -> tuple:
    mu = tuple(mu)
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > i) for i in range(mu[0]))


def n_stat(mu) -> int:
    """sum_i (i-1) mu_i with rows numbered from 1."""
    return sum(i * p for i, p in enumerate(mu))


def arm_leg(mu, cell) -> tuple:
    """Arm and leg of ``cell = (row, col)`` (1-based, English convention).

    Row 1 is the top (longest) row.  The arm counts cells strictly to the
    right in the same row, the leg counts cells strictly below in the same
    column.  This is the convention under which the path formula for the
    modified Macdonald polynomials gives H_(2) = s_2 + q s_11 and
    H_(1,1) = s_2 + t s_11.
    """
    row, col = cell
    mu = tuple(mu)
    if not (1 <= row <= len(mu) and 1 <= col <= mu[row - 1]):
        raise ValueError(f"cell {cell} is outside the diagram of {mu}")
    arm = mu[row - 1] - col
    leg = conjugate(mu)[col - 1] - row
    return arm, leg


def size(shape) -> int:
    return sum(shape)


def z_lambda(la) -> int:
    """The centralizer order z_lambda = prod_i i^{m_i} m_i!."""
    out = 1
    for part, mult in Counter(la).items():
        out *= part**mult * factorial(mult)
    return out


def multinomial_rearrangements(la) -> int:
    """Number of distinct rearrangements of the parts of la."""
    out = factorial(len(la))
    for mult in Counter(la).values():
        out //= factorial(mult)
    return out


def sort_partition(parts) -> tuple:
    return tuple(sorted((p for p in parts if p), reverse=True))


def binom2(n: int) -> int:
    return comb(n, 2)


def parse_shape(text: str) -> tuple:
    """Parse "3,1" (empty string or "()" gives the empty shape)."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed shape {text!r}") from exc
    if not is_composition(parts):
        raise ValueError(f"shape parts must be positive: {text!r}")
    return parts


def shape_str(shape) -> str:
    return ",".join(str(p) for p in shape)
