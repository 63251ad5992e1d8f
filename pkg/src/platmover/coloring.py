"""Monodromy sequences, colour transport through braids, liftability, Types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .algebra import Permutation, Transposition, conjugate, product, shared_symbols
from .braid import ArcDescriptor, BraidWord, apply_endo, arc_conjugator, arc_to_word, hurwitz_endo


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class MonodromySequence:
    """One transposition per marked point, on the symbols ``1..degree``."""

    degree: int
    colors: tuple[Transposition, ...]

    def __post_init__(self) -> None:
        if self.degree < 3:
            raise ColoringError("colourings need degree >= 3")
        colors = tuple(self.colors)
        if not colors:
            raise ColoringError("a monodromy sequence needs at least one point")
        for c in colors:
            if not isinstance(c, Transposition):
                raise ColoringError(f"non-simple colour {c!r}")
            if c.j > self.degree:
                raise ColoringError(f"{c} is not in S_{self.degree}")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def of(cls, degree: int, pairs: Iterable[tuple[int, int]]) -> "MonodromySequence":
        return cls(degree, tuple(Transposition(a, b) for a, b in pairs))

    @classmethod
    def parse(cls, degree: int, text: str) -> "MonodromySequence":
        body = text.strip()
        if not body.startswith("colors"):
            raise ValueError("colour line must start with 'colors'")
        body = body[len("colors"):].strip()
        items = [tok.strip() + ")" for tok in body.split(")") if tok.strip()]
        return cls(degree, tuple(Transposition.parse(t) for t in items))

    def __str__(self) -> str:
        return "colors " + " ".join(str(c) for c in self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, k: int) -> Transposition:
        return self.colors[k]

    @property
    def n(self) -> int:
        return len(self.colors)

    def arrays(self) -> tuple[list[int], list[int]]:
        return [c.i for c in self.colors], [c.j for c in self.colors]

    @classmethod
    def from_arrays(cls, degree: int, lo: Sequence[int], hi: Sequence[int]) -> "MonodromySequence":
        return cls(degree, tuple(Transposition(a, b) for a, b in zip(lo, hi)))

    def is_plat_paired(self) -> bool:
        return self.n % 2 == 0 and all(self.colors[2 * p] == self.colors[2 * p + 1] for p in range(self.n // 2))

    def arcs(self) -> tuple[Transposition, ...]:
        """Plat-arc colours (one per adjacent pair)."""
        if not self.is_plat_paired():
            raise ColoringError("colouring is not plat-paired")
        return self.colors[::2]

    @classmethod
    def from_arcs(cls, degree: int, arcs: Sequence[Transposition]) -> "MonodromySequence":
        return cls(degree, tuple(c for a in arcs for c in (a, a)))


def _letters(word: BraidWord) -> tuple[list[int], list[int]]:
    return [i for i, _ in word.letters], [s for _, s in word.letters]


def transport(word: BraidWord, top: MonodromySequence) -> MonodromySequence:
    """Colours at the bottom of ``word`` given the colours at its top.

    A positive crossing sends ``(a, b)`` to ``(a b a, a)``, a negative one
    sends ``(a, b)`` to ``(b, b a b)``.
    """
    if word.n != top.n:
        raise ColoringError(f"word has {word.n} strands, colouring has {top.n}")
    idx, sgn = _letters(word)
    lo, hi = top.arrays()
    blo, bhi = kernels.transport(idx, sgn, lo, hi)
    return MonodromySequence.from_arrays(top.degree, blo, bhi)


def transport_levels(word: BraidWord, top: MonodromySequence) -> list[MonodromySequence]:
    """Colourings between consecutive letters: ``levels[k]`` sits above letter ``k``."""
    levels = [top]
    cur = top
    for letter in word.letters:
        cur = transport(BraidWord(word.n, (letter,)), cur)
        levels.append(cur)
    return levels


def total_monodromy(c: MonodromySequence) -> Permutation:
    """``c_0 ∘ c_1 ∘ ... ∘ c_{n-1}``."""
    return product(c.colors, c.degree)


def is_connected(c: MonodromySequence) -> bool:
    """Whether the graph on ``1..d`` with one edge per colour is connected."""
    parent = list(range(c.degree + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in c.colors:
        parent[find(t.i)] = find(t.j)
    roots = {find(s) for s in range(1, c.degree + 1)}
    return len(roots) == 1


def standard_coloring(d: int, n: int) -> MonodromySequence:
    if d < 3:
        raise ColoringError("standard colouring needs d >= 3")
    if n % 2 or n < 2 * d - 2:
        raise ColoringError(f"standard colouring of degree {d} needs even n >= {2 * d - 2}")
    colors = []
    for k in range(d - 1, 1, -1):
        t = Transposition(k, k + 1)
        colors += [t, t]
    colors += [Transposition(1, 2)] * (n - len(colors))
    return MonodromySequence(d, tuple(colors))


def is_liftable(word: BraidWord, c: MonodromySequence) -> bool:
    if word.n != c.n:
        raise ColoringError(f"word has {word.n} strands, colouring has {c.n}")
    idx, sgn = _letters(word)
    lo, hi = c.arrays()
    return bool(kernels.liftable(idx, sgn, lo, hi))


def _type_of_pair(a: Transposition, b: Transposition) -> int:
    return {2: 1, 0: 2, 1: 3}[shared_symbols(a, b)]


def half_twist_type(arc: ArcDescriptor, c: MonodromySequence) -> int:
    """Minimal positive power of the half-twist about ``arc`` that is liftable."""
    h, k = arc_conjugator(arc, c.n)
    seen = transport(h.inverse(), c)
    return _type_of_pair(seen[k], seen[k + 1])


def half_twist_type_by_definition(arc: ArcDescriptor, c: MonodromySequence) -> int:
    """Order of ``rho(t(a_p)) rho(a_p)`` for an endpoint ``p`` of the arc (reference route)."""
    word = arc_to_word(arc, c.n)
    p = arc.endpoints()[0]
    moved = monodromy_of_free_word(hurwitz_endo(word)[p], c)
    return product([moved, c[p]], c.degree).order()


def crossing_colors(word: BraidWord, top: MonodromySequence, position: int) -> tuple[Transposition, Transposition]:
    """Colours of the two strands entering the crossing at letter ``position``."""
    above = transport(BraidWord(word.n, word.letters[:position]), top)
    k = word.letters[position][0]
    return above[k], above[k + 1]


def monodromy_of_free_word(images_word, c: MonodromySequence) -> Permutation:
    """Sheet map of a free-group word, letters acting in path order."""
    out = Permutation.identity(c.degree)
    for g, _ in images_word:
        out = product([c[g], out], c.degree)
    return out


def transport_by_endo(word: BraidWord, top: MonodromySequence) -> MonodromySequence:
    """Reference route for :func:`transport` through the Hurwitz action."""
    imgs = hurwitz_endo(word)
    out = []
    for w in imgs:
        p = monodromy_of_free_word(w, top)
        cyc = p.cycles()
        if len(cyc) != 1 or len(cyc[0]) != 2:
            raise ColoringError("image of a generator is not a transposition")
        out.append(Transposition(*cyc[0]))
    return MonodromySequence(top.degree, tuple(out))


@dataclass(frozen=True)
class ColoredPlat:
    """A braid whose top and bottom are closed by plat arcs, with top colours."""

    word: BraidWord
    top: MonodromySequence

    def __post_init__(self) -> None:
        if self.word.n != self.top.n:
            raise ColoringError(f"word has {self.word.n} strands, colouring has {self.top.n}")
        if self.top.n % 2:
            raise ColoringError("plats need an even number of strands")
        if not self.top.is_plat_paired():
            raise ColoringError("top colours are not paired along plat arcs")
        if not total_monodromy(self.top).is_identity():
            raise ColoringError("total monodromy is not the identity")
        if not self.bottom().is_plat_paired():
            raise ColoringError("bottom colours are not paired along plat arcs")

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def degree(self) -> int:
        return self.top.degree

    def bottom(self) -> MonodromySequence:
        return transport(self.word, self.top)

    def is_liftable(self) -> bool:
        return is_liftable(self.word, self.top)

    def with_word(self, word: BraidWord) -> "ColoredPlat":
        return ColoredPlat(word, self.top)


__all__ = [
    "ColoringError",
    "ColoredPlat",
    "MonodromySequence",
    "apply_endo",
    "conjugate",
    "crossing_colors",
    "half_twist_type",
    "half_twist_type_by_definition",
    "is_connected",
    "is_liftable",
    "standard_coloring",
    "total_monodromy",
    "transport",
    "transport_by_endo",
    "transport_levels",
]
