"""Braid words, braid relations, half-twists about arcs, and the Hurwitz action.

A letter is ``(i, sign)`` for the Artin generator ``s_i`` (0-based, crossing
strands ``i`` and ``i+1``) raised to ``sign``.  Words are read left to right,
top to bottom.  The Hurwitz action of a positive ``s_i`` on the free group
``<a_0, ..., a_{n-1}>`` is::

    a_i     -> a_i a_{i+1} a_i^-1
    a_{i+1} -> a_i

and a word acts by ``endo(uv) = endo(u) ∘ endo(v)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Letter = tuple[int, int]
FreeWord = tuple[tuple[int, int], ...]


class StrandMismatch(ValueError):
    pass


class RelationError(ValueError):
    """A braid relation was requested where it does not apply."""


_TOKEN_RE = re.compile(r"s(\d+)(\^-1)?")


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 0 <= i < self.n - 1:
                raise ValueError(f"generator s{i} out of range for {self.n} strands")
            if s not in (1, -1):
                raise ValueError(f"bad sign {s}")
        object.__setattr__(self, "letters", letters)

    # -- construction -------------------------------------------------
    @classmethod
    def parse(cls, n: int, text: str) -> "BraidWord":
        letters = []
        for tok in text.split():
            m = _TOKEN_RE.fullmatch(tok)
            if m is None:
                raise ValueError(f"bad braid token {tok!r}")
            letters.append((int(m.group(1)), -1 if m.group(2) else 1))
        return cls(n, tuple(letters))

    @classmethod
    def from_exponents(cls, n: int, items: Iterable[tuple[int, int]]) -> "BraidWord":
        """Build from ``(index, exponent)`` pairs, e.g. ``[(0, 2), (1, -1)]``."""
        letters = []
        for i, e in items:
            s = 1 if e > 0 else -1
            letters.extend([(i, s)] * abs(e))
        return cls(n, tuple(letters))

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    def __str__(self) -> str:
        return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    # -- group operations ---------------------------------------------
    def _check(self, other: "BraidWord") -> None:
        if other.n != self.n:
            raise StrandMismatch(f"{self.n} vs {other.n} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else inverse(self)
        return BraidWord(self.n, base.letters * abs(k))

    def inverse(self) -> "BraidWord":
        return inverse(self)

    def is_positive(self) -> bool:
        return all(s > 0 for _, s in self.letters)

    def with_strands(self, n: int) -> "BraidWord":
        return BraidWord(n, self.letters)

    def shifted(self, offset: int, n: int | None = None) -> "BraidWord":
        return BraidWord(n if n is not None else self.n + offset,
                         tuple((i + offset, s) for i, s in self.letters))

    def strand_permutation(self) -> list[int]:
        """``perm[p]`` is the bottom position of the strand starting at top position ``p``."""
        pos = list(range(self.n))  # pos[strand] = current position
        at = list(range(self.n))  # at[position] = strand
        for i, _ in self.letters:
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            pos[a], pos[b] = i + 1, i
        return pos


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    a._check(b)
    return BraidWord(a.n, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.n, tuple((i, -s) for i, s in reversed(a.letters)))


def conjugate_word(k: BraidWord, h: BraidWord) -> BraidWord:
    """``[k]h = h^-1 k h``."""
    k._check(h)
    return BraidWord(k.n, inverse(h).letters + k.letters + h.letters)


def _reduce_letters(letters: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def free_reduce(a: BraidWord) -> BraidWord:
    return BraidWord(a.n, _reduce_letters(a.letters))


# -- braid relations ----------------------------------------------------

FAR_COMMUTE = "far-commute"
YANG_BAXTER = "yang-baxter"
INSERT_CANCEL = "insert-cancel"


def relation_step(a: BraidWord, position: int, which: str, insert: Letter | None = None) -> BraidWord:
    """Apply one braid relation at ``position``.

    ``insert-cancel`` deletes the inverse pair at ``position`` or, when
    ``insert`` is given, inserts ``insert`` followed by its inverse there.
    Yang-Baxter rewrites ``s_i s_j s_i -> s_j s_i s_j`` (``|i-j| = 1``, equal
    signs) in either direction.
    """
    L = list(a.letters)
    p = position
    if which == FAR_COMMUTE:
        if not 0 <= p < len(L) - 1:
            raise RelationError(f"no letter pair at {p}")
        (i, s), (j, t) = L[p], L[p + 1]
        if abs(i - j) < 2:
            raise RelationError(f"s{i} and s{j} do not commute")
        L[p], L[p + 1] = (j, t), (i, s)
    elif which == YANG_BAXTER:
        if not 0 <= p < len(L) - 2:
            raise RelationError(f"no letter triple at {p}")
        (i, s), (j, t), (k, u) = L[p:p + 3]
        if not (i == k and abs(i - j) == 1 and s == t == u):
            raise RelationError(f"no Yang-Baxter pattern at {p}")
        L[p:p + 3] = [(j, s), (i, s), (j, s)]
    elif which == INSERT_CANCEL:
        if insert is not None:
            g, s = insert
            if not 0 <= p <= len(L):
                raise RelationError(f"insertion point {p} out of range")
            if not 0 <= g < a.n - 1:
                raise RelationError(f"s{g} out of range")
            L[p:p] = [(g, s), (g, -s)]
        else:
            if not 0 <= p < len(L) - 1:
                raise RelationError(f"no letter pair at {p}")
            (i, s), (j, t) = L[p], L[p + 1]
            if i != j or s != -t:
                raise RelationError(f"letters at {p} do not cancel")
            del L[p:p + 2]
    else:
        raise ValueError(f"unknown relation {which!r}")
    return BraidWord(a.n, tuple(L))


# -- free group and the Hurwitz action ----------------------------------


def free_inverse(w: FreeWord) -> FreeWord:
    return tuple((g, -s) for g, s in reversed(w))


def free_mul(*words: FreeWord) -> FreeWord:
    out: list[tuple[int, int]] = []
    for w in words:
        for g, s in w:
            if out and out[-1][0] == g and out[-1][1] == -s:
                out.pop()
            else:
                out.append((g, s))
    return tuple(out)


def free_gen(i: int) -> FreeWord:
    return ((i, 1),)


def free_str(w: FreeWord) -> str:
    if not w:
        return "1"
    return " ".join(f"a{g}" if s > 0 else f"a{g}^-1" for g, s in w)


def hurwitz_endo(a: BraidWord) -> list[FreeWord]:
    """Images of ``a_0 .. a_{n-1}`` under the automorphism induced by ``a``."""
    imgs: list[FreeWord] = [free_gen(k) for k in range(a.n)]
    for i, s in a.letters:
        x, y = imgs[i], imgs[i + 1]
        if s > 0:
            imgs[i] = free_mul(x, y, free_inverse(x))
            imgs[i + 1] = x
        else:
            imgs[i] = y
            imgs[i + 1] = free_mul(free_inverse(y), x, y)
    return imgs


def apply_endo(images: Sequence[FreeWord], w: FreeWord) -> FreeWord:
    """Substitute ``images[g]`` for each generator ``a_g`` of ``w``."""
    parts = [images[g] if s > 0 else free_inverse(images[g]) for g, s in w]
    return free_mul(*parts)


def boundary_word(n: int) -> FreeWord:
    return tuple((k, 1) for k in range(n))


def is_conjugate_of_generator(w: FreeWord, g: int) -> bool:
    """True iff ``w`` is freely equal to ``u a_g u^-1`` for some ``u``."""
    w = free_mul(w)
    while len(w) >= 3 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return w == ((g, 1),)


# -- arcs ---------------------------------------------------------------

ARC_KINDS = ("x", "y", "z", "w", "s", "explicit")


@dataclass(frozen=True)
class ArcDescriptor:
    """An arc between marked points, encoded as a half-twist ``h^-1 s_core h``.

    ``x``: chain arc ``x_i`` (``j`` ignored).  ``y``/``z``: monotone arc from
    ``A_i`` to ``A_j`` passing in front of / behind every point in between.
    ``w``: the arc ``w_{i,j}``, whose endpoints are ``A_j`` and ``A_{j+1}``.
    ``s``: the special arc ``s_1`` of the degree ``(i + 4) / 2`` standard
    coloring, running from ``A_i`` to ``A_j = A_{i+3}``.  ``explicit``: the
    given ``conjugator`` and ``core``.
    """

    kind: str
    i: int
    j: int = -1
    conjugator: tuple[Letter, ...] = field(default=(), compare=True)
    core: int = -1

    def __post_init__(self) -> None:
        if self.kind not in ARC_KINDS:
            raise ValueError(f"unknown arc kind {self.kind!r}")
        if self.kind in ("y", "z") and not self.i < self.j:
            raise ValueError("y/z arcs need i < j")
        if self.kind == "w" and not (self.i < self.j - 1 and (self.j - self.i) % 2 == 0):
            raise ValueError("w arcs need i < j - 1 with j - i even")
        if self.kind == "s" and not (self.i % 2 == 0 and self.j == self.i + 3 and self.i >= 2):
            raise ValueError("s_1 runs from A_{2d-4} to A_{2d-1} with d >= 3")
        if self.kind == "explicit" and self.core < 0:
            raise ValueError("explicit arcs need a core generator")

    @property
    def name(self) -> str:
        if self.kind == "x":
            return f"x_{self.i}"
        if self.kind in ("y", "z", "w"):
            return f"{self.kind}_{{{self.i},{self.j}}}"
        if self.kind == "s":
            return "s_1"
        return f"arc[{self.core}]"

    def endpoints(self) -> tuple[int, int]:
        if self.kind == "x":
            return (self.i, self.i + 1)
        if self.kind == "w":
            return (self.j, self.j + 1)
        if self.kind == "explicit":
            n = self.max_strand() + 1
            h = BraidWord(n, self.conjugator)
            word = conjugate_word(BraidWord(n, ((self.core, 1),)), h)
            moved = [m for m, w in enumerate(hurwitz_endo(word)) if not is_conjugate_of_generator(w, m)]
            return (moved[0], moved[1])
        return (self.i, self.j)

    def max_strand(self) -> int:
        if self.kind == "x":
            return self.i + 1
        if self.kind == "w":
            return self.j + 1
        if self.kind == "explicit":
            return max([self.core + 1] + [g + 1 for g, _ in self.conjugator])
        return self.j

    def half_twist(self) -> tuple[tuple[Letter, ...], int]:
        """``(h, k)`` with half-twist ``h^-1 s_k h``."""
        if self.kind == "x":
            return (), self.i
        if self.kind in ("y", "z"):
            sides = "f" * (self.j - self.i - 1) if self.kind == "y" else "b" * (self.j - self.i - 1)
            return monotone_arc(self.i, self.j, sides)
        if self.kind == "w":
            return _w_conjugator(self.i, self.j), self.j
        if self.kind == "s":
            return s1_half_twist((self.i + 4) // 2)
        return tuple(self.conjugator), self.core


def monotone_arc(i: int, j: int, sides: str) -> tuple[tuple[Letter, ...], int]:
    """Trace a rightward arc from ``A_i`` to ``A_j``.

    ``sides[k]`` says whether the arc passes in front of (``'f'``) or behind
    (``'b'``) the point ``A_{i+1+k}``.  The endpoint ``A_j`` is dragged left
    one point at a time; each pass conjugates the chain generator by one
    crossing whose sign records the side.
    """
    if len(sides) != j - i - 1 or set(sides) - {"f", "b"}:
        raise ValueError(f"need {j - i - 1} sides from 'f'/'b', got {sides!r}")
    h = tuple((i + 1 + k, 1 if c == "f" else -1) for k, c in enumerate(sides))
    return h, i


def _w_conjugator(i: int, j: int) -> tuple[Letter, ...]:
    """``x_{j-1} .. x_{i+1} x_i^2 x_{i+1} .. x_{j-1}``.

    Each plat pair ``A_{k-1}, A_k`` between the ends is passed on one side,
    so both letters of a pair carry the same sign.  For ``j = i + 2`` this
    is ``x_{i+1} x_i^2 x_{i+1}``.
    """
    down = [(k, 1) for k in range(j - 1, i, -1)]
    return tuple(down + [(i, 1), (i, 1)] + down[::-1])


def alternating_w_conjugator(i: int, j: int) -> tuple[Letter, ...]:
    """The alternating-sign conjugator ``(x_{j-1} x_{j-2}^-1) .. (x_{i+1} x_i^2 x_{i+1}) .. (x_{j-2}^-1 x_{j-1})``.

    Kept for comparison: it splits plat pairs and is not liftable on the
    standard colouring once ``j - i >= 4``.
    """
    left: list[Letter] = []
    for k in range(j - 1, i + 2, -2):
        left += [(k, 1), (k - 1, -1)]
    core = [(i + 1, 1), (i, 1), (i, 1), (i + 1, 1)]
    right: list[Letter] = []
    for k in range(i + 2, j - 1, 2):
        right += [(k, -1), (k + 1, 1)]
    return tuple(left + core + right)


def s1_half_twist(d: int) -> tuple[tuple[Letter, ...], int]:
    """Half-twist ``(h, k)`` for the special arc ``s_1`` of the degree-``d`` standard colouring.

    The default arc leaves ``A_{2d-4}``, loops around the ``(2 3)``-coloured
    point ``A_{2d-5}``, then passes ``A_{2d-3}`` and ``A_{2d-2}`` on opposite
    sides to reach ``A_{2d-1}``.  Its lift closes up on sheets 1 and 3.  Replace via
    :func:`set_s1_candidate` to try another picture of the arc.
    """
    return _S1_CANDIDATE(d)


def _default_s1(d: int) -> tuple[tuple[Letter, ...], int]:
    a = 2 * d - 4
    return ((a, -1), (a - 1, -1), (a + 1, 1), (a + 2, -1)), a - 1


_S1_CANDIDATE = _default_s1


def set_s1_candidate(builder) -> None:
    """Install ``builder(d) -> (conjugator, core)`` as the ``s_1`` arc (``None`` restores the default)."""
    global _S1_CANDIDATE
    _S1_CANDIDATE = builder if builder is not None else _default_s1


def arc_to_word(arc: ArcDescriptor, n: int) -> BraidWord:
    if arc.max_strand() > n - 1:
        raise ValueError(f"{arc.name} needs more than {n} strands")
    h, k = arc.half_twist()
    hw = BraidWord(n, h)
    return conjugate_word(BraidWord(n, ((k, 1),)), hw)


def arc_conjugator(arc: ArcDescriptor, n: int) -> tuple[BraidWord, int]:
    h, k = arc.half_twist()
    return BraidWord(n, h), k
