"""Symmetric-group arithmetic on the symbols 1..d.

Composition is "right acts first": ``compose(p, q)(s) == p(q(s))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..d}; ``images[s - 1]`` is the image of symbol ``s``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        d = len(self.images)
        if d < 2:
            raise ValueError("degree must be at least 2")
        if sorted(self.images) != list(range(1, d + 1)):
            raise ValueError(f"not a bijection of 1..{d}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, degree + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, s: int) -> int:
        return self.images[s - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for s, t in enumerate(self.images, start=1):
            inv[t - 1] = s
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(t == s for s, t in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least symbol."""
        seen = set()
        out = []
        for s in range(1, self.degree + 1):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            t = self(s)
            while t != s:
                cyc.append(t)
                seen.add(t)
                t = self(t)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return lcm(*self.cycle_type())

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition ``(i j)`` of S_d, normalized so that ``i < j``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ValueError("a transposition needs two distinct symbols")
        if self.i > self.j:
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)
        if self.i < 1:
            raise ValueError("symbols are 1-based")

    @property
    def support(self) -> frozenset[int]:
        return frozenset((self.i, self.j))

    def __call__(self, s: int) -> int:
        if s == self.i:
            return self.j
        if s == self.j:
            return self.i
        return s

    def as_permutation(self, degree: int) -> Permutation:
        if self.j > degree:
            raise DegreeMismatch(f"{self} does not live in S_{degree}")
        return Permutation.from_cycles(degree, [(self.i, self.j)])

    def __str__(self) -> str:
        return f"({self.i} {self.j})"

    @classmethod
    def parse(cls, text: str) -> "Transposition":
        m = _TRANSPOSITION_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"bad transposition: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))


_TRANSPOSITION_RE = re.compile(r"\((\d+) (\d+)\)")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation "apply ``q``, then ``p``"."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")
    return Permutation(tuple(p(q(s)) for s in range(1, p.degree + 1)))


def conjugate(t: Transposition, by: Transposition, degree: int | None = None) -> Transposition:
    """``by * t * by``: the symbols of ``t`` relabelled through ``by``."""
    if degree is not None and max(t.j, by.j) > degree:
        raise DegreeMismatch(f"{t} or {by} outside S_{degree}")
    return Transposition(by(t.i), by(t.j))


def shared_symbols(t1: Transposition, t2: Transposition, degree: int | None = None) -> int:
    if degree is not None and max(t1.j, t2.j) > degree:
        raise DegreeMismatch(f"{t1} or {t2} outside S_{degree}")
    return len(t1.support & t2.support)


def product(perms: Iterable[Permutation | Transposition], degree: int) -> Permutation:
    """Left-to-right product ``p_0 ∘ p_1 ∘ ... ∘ p_k`` (the last factor acts first)."""
    out = Permutation.identity(degree)
    for p in perms:
        if isinstance(p, Transposition):
            p = p.as_permutation(degree)
        out = compose(out, p)
    return out
