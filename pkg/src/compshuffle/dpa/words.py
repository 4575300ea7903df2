"""Words in the generators of the Dyck path algebra, applied rightmost first.

Text form: whitespace separated tokens

    d+  d-  d+*  T1  T1^-1  y1  z1  [d-,d+]  corner  c:<scalar>

or a compact string over {+, -} where + is d+ and - is d-.  The token
``corner`` stands for (1/(q-1)) [d-, d+].
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..dyck import DyckPath
from ..qtring import QtScalar, parse_scalar
from . import operators as ops
from .velem import LevelError, VElem


@dataclass(frozen=True)
class Gen:
    name: str  # d+, d-, d+*, T, Tinv, y, z, comm, corner, scalar
    index: int = 0
    scalar: QtScalar | None = None

    def level_change(self) -> int:
        return {"d+": 1, "d+*": 1, "d-": -1}.get(self.name, 0)

    def __str__(self):
        if self.name in ("T", "y", "z"):
            return f"{self.name}{self.index}"
        if self.name == "Tinv":
            return f"T{self.index}^-1"
        if self.name == "comm":
            return "[d-,d+]"
        if self.name == "scalar":
            return f"c:{self.scalar}"
        return self.name


_TOKEN = re.compile(r"^(T|y|z)(\d+)(\^-1)?$")


def parse_word(text: str) -> tuple:
    text = text.strip()
    if text and set(text) <= set("+-− "):
        return tuple(Gen("d+" if c == "+" else "d-") for c in text if c != " ")
    out = []
    for tok in text.split():
        if tok in ("d+", "d-", "d+*", "corner"):
            out.append(Gen(tok))
        elif tok == "d-*":
            out.append(Gen("d-"))
        elif tok == "[d-,d+]":
            out.append(Gen("comm"))
        elif tok.startswith("c:"):
            out.append(Gen("scalar", scalar=parse_scalar(tok[2:])))
        else:
            m = _TOKEN.match(tok)
            if not m or (m.group(3) and m.group(1) != "T"):
                raise ValueError(f"unknown generator {tok!r}")
            out.append(Gen("Tinv" if m.group(3) else m.group(1), int(m.group(2))))
    return tuple(out)


def word_str(word) -> str:
    return " ".join(str(g) for g in word)


def apply_gen(g: Gen, F: VElem) -> VElem:
    if g.name == "d+":
        return ops.d_plus(F)
    if g.name == "d-":
        return ops.d_minus(F)
    if g.name == "d+*":
        return ops.d_plus_star(F)
    if g.name == "T":
        return ops.t_op(g.index, F)
    if g.name == "Tinv":
        return ops.t_op(g.index, F, inverse=True)
    if g.name == "y":
        return ops.y_mul(g.index, F)
    if g.name == "z":
        return ops.z_op(g.index, F)
    if g.name == "comm":
        return ops.commutator_minus_plus(F)
    if g.name == "corner":
        return ops.corner_op(F)
    if g.name == "scalar":
        return F.scale(g.scalar)
    raise ValueError(f"unknown generator {g.name!r}")


def check_levels(word, level: int) -> int:
    """Level reached after applying ``word`` to an element of V_level."""
    for g in reversed(tuple(word)):
        if g.name in ("d-", "comm", "corner") and level < 1:
            raise LevelError(f"{g} cannot act on V_{level}")
        if g.name in ("T", "Tinv") and not 1 <= g.index < level:
            raise LevelError(f"{g} cannot act on V_{level}")
        if g.name in ("y", "z") and not 1 <= g.index <= level:
            raise LevelError(f"{g} cannot act on V_{level}")
        level += g.level_change()
    return level


def apply_word(word, F: VElem | None = None) -> VElem:
    """Apply the generators right to left; the default input is 1 in V_0."""
    if isinstance(word, str):
        word = parse_word(word)
    F = VElem.one(0) if F is None else F
    check_levels(word, F.level)
    for g in reversed(tuple(word)):
        F = apply_gen(g, F)
    return F


def path_word(p: DyckPath) -> tuple:
    """The word d_{e_1} ... d_{e_2n}: + (d+) for east steps, - (d-) for north."""
    return tuple(Gen("d+" if s == "E" else "d-") for s in p.steps)


def corner_word(p: DyckPath) -> tuple:
    """The path word with each corner's pair d+ d- replaced by (1/(q-1))[d-, d+]."""
    out = []
    steps = p.steps
    i = 0
    while i < len(steps):
        if steps[i] == "E" and i + 1 < len(steps) and steps[i + 1] == "N":
            out.append(Gen("corner"))
            i += 2
        else:
            out.append(Gen("d+" if steps[i] == "E" else "d-"))
            i += 1
    return tuple(out)
