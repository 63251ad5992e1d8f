"""Generating sets of the liftable subgroup and normal generators of the lifting kernel."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .braid import ArcDescriptor, BraidWord, arc_to_word, conjugate_word


@dataclass(frozen=True)
class GeneratorEntry:
    name: str
    word: BraidWord
    family: str  # x, x3, y2, z2, w, s, B, lantern

    def line(self) -> str:
        return f"{self.name}: {self.word}"


def _check_dn(d: int, n: int) -> None:
    if d < 3:
        raise ValueError("degree must be at least 3")
    if n % 2 or n < 2 * d - 2:
        raise ValueError(f"degree {d} needs an even strand count >= {2 * d - 2}, got {n}")


def _x(i: int, n: int, power: int = 1) -> BraidWord:
    return BraidWord(n, ((i, 1),) * power)


def _x_entries(d: int, n: int, kernel: bool) -> list[GeneratorEntry]:
    out = []
    for i in range(n - 1):
        if i < 2 * d - 4 and i % 2:
            out.append(GeneratorEntry(f"x_{i}^3", _x(i, n, 3), "x3"))
        elif i < 2 * d - 4 or not kernel:
            out.append(GeneratorEntry(f"x_{i}", _x(i, n), "x"))
    return out


def _band_entries(d: int, n: int, kind: str, min_gap: int) -> list[GeneratorEntry]:
    out = []
    for i in range(1, 2 * d - 4, 2):
        for j in range(i + min_gap, 2 * d - 3, 2):
            arc = ArcDescriptor(kind, i, j)
            out.append(GeneratorEntry(f"{arc.name}^2", arc_to_word(arc, n) ** 2, f"{kind}2"))
    return out


def _w_entries(d: int, n: int) -> list[GeneratorEntry]:
    out = []
    for j in range(2, 2 * d - 3, 2):
        for i in range(0, j, 2):
            arc = ArcDescriptor("w", i, j)
            out.append(GeneratorEntry(arc.name, arc_to_word(arc, n), "w"))
    return out


def s1_word(d: int, n: int) -> BraidWord:
    return arc_to_word(ArcDescriptor("s", 2 * d - 4, 2 * d - 1), n)


def generating_set(d: int, n: int) -> list[GeneratorEntry]:
    """Generators of the liftable subgroup for the standard colouring of degree ``d`` on ``n`` strands."""
    _check_dn(d, n)
    out = _x_entries(d, n, kernel=False)
    out += _band_entries(d, n, "y", 3)
    out += _band_entries(d, n, "z", 7)
    out += _w_entries(d, n)
    if n >= 2 * d:  # s_1 ends at A_{2d-1}
        out.append(GeneratorEntry("s_1", s1_word(d, n), "s"))
    return out


def generator_count(d: int, n: int) -> int:
    if d < 5:
        raise ValueError("the closed form holds for d >= 5; list the set for d = 3, 4")
    return (3 * d * d - 17 * d + 28) // 2 + n


def _word(n: int, idx) -> BraidWord:
    return BraidWord(n, tuple((i, 1) for i in idx))


def kernel_parts(d: int, n: int) -> dict[str, BraidWord]:
    """The auxiliary words ``y``, ``u`` and ``d_{n-3}`` of the kernel generators."""
    _check_dn(d, n)
    if n < 2 * d + 2:
        raise ValueError(f"kernel words use x_{2 * d - 1}; need n >= {2 * d + 2}, got {n}")
    a = 2 * d - 4
    y = _word(n, [a + 3, a + 2, a + 1, a, a, a + 1, a + 2, a + 3])
    h = _word(n, [a + 1, a, a - 1, a - 1, a, a + 1, a + 1, a, a - 1])
    u = conjugate_word(_x(a + 2, n), h)
    # every index raised by one relative to unshifted_lantern_conjugate
    top = n - 3
    seq = list(range(top + 1, a - 1, -1)) + [a - 1, a - 1] + list(range(a, top + 1))
    seq += [top + 1, top + 1] + list(range(top, a - 2, -1))
    dn = conjugate_word(_x(top, n), _word(n, seq))
    return {"y": y, "u": u, "d": dn}


def unshifted_lantern_conjugate(d: int, n: int) -> BraidWord:
    """``[x_{n-4}](x_{n-3} .. x_{2d-4} x_{2d-5}^2 x_{2d-4} .. x_{n-3}^2 .. x_{2d-5})`` letter for letter.

    On homology this acts as ``x_{n-3}``; :func:`kernel_parts` uses every
    index raised by one, which acts as ``x_{n-2}``.
    """
    _check_dn(d, n)
    a = 2 * d - 4
    top = n - 4
    seq = list(range(top + 1, a - 1, -1)) + [a - 1, a - 1] + list(range(a, top + 1))
    seq += [top + 1, top + 1] + list(range(top, a - 2, -1))
    return conjugate_word(_x(top, n), _word(n, seq))


def b_word(d: int, n: int) -> BraidWord:
    """``(x_a x_{a+1} x_{a+2})^4 [u^-1]y^-1 u^-1`` with ``a = 2d - 4``."""
    parts = kernel_parts(d, n)
    a = 2 * d - 4
    chain = _word(n, [a, a + 1, a + 2]) ** 4
    ui, yi = parts["u"].inverse(), parts["y"].inverse()
    return chain * conjugate_word(ui, yi) * ui


def lantern_word(d: int, n: int) -> BraidWord:
    return kernel_parts(d, n)["d"] * BraidWord(n, ((n - 2, -1),))


def kernel_normal_gens(d: int, n: int) -> list[GeneratorEntry]:
    """Normal generators of the lifting kernel for the standard colouring."""
    _check_dn(d, n)
    if n < 2 * d + 2:
        raise ValueError(f"kernel words use x_{2 * d - 1}; need n >= {2 * d + 2}, got {n}")
    out = _x_entries(d, n, kernel=True)
    out += _band_entries(d, n, "y", 3)
    out += _band_entries(d, n, "z", 5)
    out += _w_entries(d, n)
    out.append(GeneratorEntry("B", b_word(d, n), "B"))
    out.append(GeneratorEntry("d_{n-3}x_{n-2}^{-1}", lantern_word(d, n), "lantern"))
    return out


def natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def sorted_entries(entries: list[GeneratorEntry]) -> list[GeneratorEntry]:
    return sorted(entries, key=lambda e: natural_key(e.name))
