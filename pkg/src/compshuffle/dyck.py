"""Dyck paths, partial Dyck paths and their statistics.

Paths are strings over N (north) and E (east).  Cells are named by the
coordinates of their top right corner, so row j of the grid consists of the
cells (i, j), i = 1, 2, ...  A pair (i, j) with i < j is also read as a pair of
row indices: the cell (i, j) is under the path exactly when rows i and j
attack each other.

A partial path of start height k runs from (0, k) to (n, n).  Its rows
1..k are the vertical segment from (0, 0) to (0, k), so all of its row
statistics are those of the full path N^k + steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterator


_PLUS_MINUS = {"+": "E", "-": "N", "−": "N"}


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class DyckPath:
    """A (partial) Dyck path from (0, start) to (n, n)."""

    steps: str
    start: int = 0

    def __post_init__(self):
        if self.start < 0:
            raise PathError("start height must be nonnegative")
        x, y = 0, self.start
        for pos, s in enumerate(self.steps):
            if s == "N":
                y += 1
            elif s == "E":
                x += 1
                if x > y:
                    raise PathError(f"path {self.steps!r} goes below the diagonal at step {pos + 1}")
            else:
                raise PathError(f"malformed step {s!r} in {self.steps!r}")
        if x != y:
            raise PathError(f"path {self.steps!r} ends at ({x},{y}), not on the diagonal")

    # -- basic shape ----------------------------------------------------------

    @property
    def n(self) -> int:
        """Side length of the bounding square."""
        return self.steps.count("E")

    @property
    def size(self) -> int:
        """Number of north steps, |pi|."""
        return self.steps.count("N")

    def __len__(self):
        return self.size

    def __str__(self):
        return self.steps

    @property
    def full_steps(self) -> str:
        return "N" * self.start + self.steps

    def plus_minus(self) -> str:
        return self.steps.replace("E", "+").replace("N", "-")

    def is_full(self) -> bool:
        return self.start == 0

    # -- row statistics -----------------------------------------------------

    @cached_property
    def coarea_seq(self) -> tuple:
        """x_j = 1 + number of east steps before the j-th north step."""
        out, east = [], 0
        for s in self.full_steps:
            if s == "E":
                east += 1
            else:
                out.append(east + 1)
        return tuple(out)

    @cached_property
    def area_seq(self) -> tuple:
        return tuple(j - x for j, x in enumerate(self.coarea_seq, start=1))

    @property
    def area(self) -> int:
        return sum(self.area_seq)

    @cached_property
    def area_cells(self) -> frozenset:
        """Cells (i, j), i < j, between the path and the diagonal."""
        return frozenset((i, j) for j, x in enumerate(self.coarea_seq, start=1) for i in range(x, j))

    @cached_property
    def dinv_pairs(self) -> frozenset:
        a = self.area_seq
        n = len(a)
        same = {(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1) if a[j - 1] == a[k - 1]}
        shifted = {(j, k) for j in range(1, n + 1) for k in range(1, j) if a[k - 1] == a[j - 1] + 1}
        return frozenset(same | shifted)

    @property
    def dinv(self) -> int:
        return len(self.dinv_pairs)

    @cached_property
    def touch(self) -> tuple:
        zeros = [j for j, a in enumerate(self.area_seq, start=1) if a == 0]
        return tuple(b - a for a, b in zip(zeros, zeros[1:] + [len(self.area_seq) + 1]))

    @cached_property
    def corners(self) -> frozenset:
        """Cells above the path whose south and east neighbours are below it.

        These are the east-north valleys: a valley at the lattice point (x, y)
        gives the corner cell (x, y + 1).
        """
        out = []
        x, y = 0, 0
        prev = None
        for s in self.full_steps:
            if prev == "E" and s == "N":
                out.append((x, y + 1))
            if s == "E":
                x += 1
            else:
                y += 1
            prev = s
        return frozenset(out)

    def statistics(self) -> dict:
        return {
            "path": self.steps,
            "area_seq": list(self.area_seq),
            "coarea_seq": list(self.coarea_seq),
            "area": self.area,
            "dinv_pairs": sorted(map(list, self.dinv_pairs)),
            "dinv": self.dinv,
            "touch": list(self.touch),
            "corners": sorted(map(list, self.corners)),
        }


# Partial paths are the same type; the alias documents intent at call sites.
PartialDyckPath = DyckPath


def parse_path(text: str, start_height: int = 0) -> DyckPath:
    """Parse a path over {N, E} or over {+, -} (plus is east)."""
    text = "".join(_PLUS_MINUS.get(c, c) for c in "".join(text.split()).upper())
    return DyckPath(text, start_height)


def path_from_area_seq(a) -> DyckPath:
    steps, east = [], 0
    for j, aj in enumerate(a, start=1):
        x = j - aj
        if x < 1 or x - 1 < east:
            raise PathError(f"{tuple(a)} is not an area sequence")
        steps.append("E" * (x - 1 - east) + "N")
        east = x - 1
    steps.append("E" * (len(a) - east))
    return DyckPath("".join(steps))


def path_from_area_cells(n: int, cells) -> DyckPath:
    """The unique path whose Area set is ``cells``; error if none exists."""
    counts = [0] * n
    for _, j in cells:
        counts[j - 1] += 1
    path = path_from_area_seq(counts)
    if path.area_cells != frozenset(cells):
        raise PathError("cell set is not the area of a Dyck path")
    return path


def reverse_path(p: DyckPath) -> DyckPath:
    swap = {"N": "E", "E": "N"}
    return DyckPath("".join(swap[s] for s in reversed(p.steps)))


def flip_corners(p: DyckPath, corners) -> DyckPath:
    """Turn the given corners inside out (replace the valley EN by NE)."""
    corners = set(corners)
    bad = corners - p.corners
    if bad:
        raise PathError(f"not corners of {p.steps}: {sorted(bad)}")
    steps = list(p.full_steps)
    x, y = 0, 0
    for idx, s in enumerate(p.full_steps):
        if idx > 0 and steps[idx - 1] == "E" and s == "N" and (x, y + 1) in corners:
            steps[idx - 1], steps[idx] = "N", "E"
        if s == "E":
            x += 1
        else:
            y += 1
    full = "".join(steps)
    if p.start:
        if not full.startswith("N" * p.start):
            raise PathError("flip would move the start point")
        return DyckPath(full[p.start:], p.start)
    return DyckPath(full)


# -- the (area, dinv) -> (bounce, area') map ----------------------------------


@dataclass(frozen=True)
class ZetaResult:
    pi_prime: DyckPath
    sigma: tuple


def reading_order(p: DyckPath) -> tuple:
    """sigma_j = position of row j when rows are sorted by (a_j, j)."""
    a = p.area_seq
    order = sorted(range(1, len(a) + 1), key=lambda j: (a[j - 1], j))
    sigma = [0] * len(a)
    for pos, j in enumerate(order, start=1):
        sigma[j - 1] = pos
    return tuple(sigma)


def zeta(p: DyckPath) -> ZetaResult:
    sigma = reading_order(p)
    cells = {(sigma[j - 1], sigma[k - 1]) for j, k in p.dinv_pairs}
    return ZetaResult(path_from_area_cells(p.n, cells), sigma)


def bounce_seq(p: DyckPath) -> tuple:
    """Block index (from 0) of every diagonal cell under the bounce path."""
    n = p.n
    if n == 0:
        return ()
    # north steps preceding the i-th east step
    north_before, north = [], 0
    for s in p.steps:
        if s == "N":
            north += 1
        else:
            north_before.append(north)
    b = []
    h, block = 0, 0
    while h < n:
        nxt = north_before[h]
        b.extend([block] * (nxt - h))
        h, block = nxt, block + 1
    return tuple(b)


def bounce(p: DyckPath) -> int:
    return sum(bounce_seq(p))


def touch_prime_data(p: DyckPath) -> tuple:
    """(l, (t_0, ..., t_l)) for the touch' statistic."""
    if p.n == 0:
        return 0, ()
    l = len(p.steps) - len(p.steps.lstrip("N"))
    rest = p.steps[l + 1:]
    ts = tuple(bounce(DyckPath("N" * (i + 1) + "E" + "N" * (l - i) + "E" + rest)) for i in range(l + 1))
    return l, ts


def touch_prime(p: DyckPath) -> tuple:
    _, ts = touch_prime_data(p)
    return tuple(a - b for a, b in zip(ts, ts[1:]))


# -- enumeration ------------------------------------------------------------


def _paths(n_remaining: int, e_remaining: int, height: int, prefix: list) -> Iterator[str]:
    # height = y - x of the current point
    if n_remaining == 0 and e_remaining == 0:
        yield "".join(prefix)
        return
    if n_remaining:
        prefix.append("N")
        yield from _paths(n_remaining - 1, e_remaining, height + 1, prefix)
        prefix.pop()
    if e_remaining and height > 0:
        prefix.append("E")
        yield from _paths(n_remaining, e_remaining - 1, height - 1, prefix)
        prefix.pop()


def enumerate_paths(n: int, touch: tuple | None = None) -> list:
    """All Dyck paths of length n (N before E lexicographically), optionally
    only those with the given touch' composition."""
    out = [DyckPath(s) for s in _paths(n, n, 0, [])]
    if touch is not None:
        touch = tuple(touch)
        out = [p for p in out if touch_prime(p) == touch]
    return out


def enumerate_partial_paths(k: int, size: int) -> list:
    """All partial paths from (0, k) with ``size`` north steps."""
    n = k + size
    return [DyckPath(s, k) for s in _paths(size, n, k, [])]


# -- labelled paths ---------------------------------------------------------


@dataclass(frozen=True)
class LabeledWord:
    path: DyckPath
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.path.area_seq):
            raise ValueError("one label per row is required")


def inv(p: DyckPath, w) -> int:
    """#{(i, j) in Area: w_i > w_j}."""
    return sum(1 for i, j in p.area_cells if w[i - 1] > w[j - 1])


def is_wp_prime(p: DyckPath, w) -> bool:
    """The corner-decrease condition w_i > w_j for every corner (i, j)."""
    return all(w[i - 1] > w[j - 1] for i, j in p.corners)


def is_wp(p: DyckPath, w) -> bool:
    """Labels strictly decrease up every column (word parking function)."""
    x = p.coarea_seq
    return all(w[j] > w[j + 1] for j in range(len(x) - 1) if x[j] == x[j + 1])


def dinv_labeled(p: DyckPath, w) -> int:
    return sum(1 for j, k in p.dinv_pairs if w[j - 1] > w[k - 1])


def wp_enumerate(p: DyckPath, max_label: int) -> list:
    """Every word with entries <= max_label satisfying the corner condition,
    paired with its inv count."""
    if max_label < 1:
        raise ValueError("max_label must be at least 1")
    out = []
    for w in product(range(1, max_label + 1), repeat=len(p.area_seq)):
        if is_wp_prime(p, w):
            out.append((LabeledWord(p, w), inv(p, w)))
    return out


def corner_subsets(p: DyckPath):
    cs = sorted(p.corners)
    for r in range(len(cs) + 1):
        yield from combinations(cs, r)


def path_word(p: DyckPath) -> str:
    """Operator word reading the path bottom-left to top-right: + for E, - for N."""
    return p.plus_minus()


# -- bijection check ---------------------------------------------------------


def verify_bijection(n_max: int) -> dict:
    """Check that zeta carries (area, dinv, touch) to (bounce, area, touch'),
    satisfies b_(sigma_i) = a_i and is injective, for every path of size <= n_max."""
    failures, checked = [], 0
    for n in range(n_max + 1):
        images = set()
        for p in enumerate_paths(n):
            checked += 1
            z = zeta(p)
            pp = z.pi_prime
            b = bounce_seq(pp)
            ok = (
                bounce(pp) == p.area
                and pp.area == p.dinv
                and touch_prime(pp) == p.touch
                and all(b[s - 1] == a for s, a in zip(z.sigma, p.area_seq))
            )
            if not ok:
                failures.append(p.steps)
            images.add(pp.steps)
        if len(images) != len(enumerate_paths(n)):
            failures.append(f"zeta not injective at n={n}")
    return {"n_max": n_max, "checked": checked, "failures": failures[:10], "status": "pass" if not failures else "fail"}
