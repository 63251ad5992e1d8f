"""Turn a connected plat colouring into the standard one with local arc moves.

The colouring is handled one plat arc at a time.  Two moves are allowed:
swap two neighbouring arcs (``reorder``) and conjugate an arc's colour by a
neighbour's colour (``recolor``).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .algebra import Transposition, conjugate
from .coloring import ColoringError, MonodromySequence, is_connected, standard_coloring

REORDER = "reorder"
RECOLOR = "recolor"


@dataclass(frozen=True)
class LocalMove:
    kind: str
    position: int
    by: int = -1  # neighbour arc for recolor

    def __post_init__(self) -> None:
        if self.kind not in (REORDER, RECOLOR):
            raise ValueError(f"unknown local move {self.kind!r}")
        if self.position < 0:
            raise ValueError("negative arc index")
        if self.kind == RECOLOR and abs(self.by - self.position) != 1:
            raise ValueError("recolor uses a neighbouring arc")

    def __str__(self) -> str:
        if self.kind == REORDER:
            return f"reorder {self.position}"
        return f"recolor {self.position} by {self.by}"

    @classmethod
    def parse(cls, text: str) -> "LocalMove":
        m = re.fullmatch(r"\s*reorder\s+(\d+)\s*", text)
        if m:
            return cls(REORDER, int(m.group(1)))
        m = re.fullmatch(r"\s*recolor\s+(\d+)\s+by\s+(\d+)\s*", text)
        if m:
            return cls(RECOLOR, int(m.group(1)), int(m.group(2)))
        raise ValueError(f"cannot parse local move {text!r}")


def format_script(script: list[LocalMove]) -> str:
    return "".join(f"{m}\n" for m in script)


def parse_script(text: str) -> list[LocalMove]:
    return [LocalMove.parse(line) for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def _apply_arcs(arcs: list[Transposition], m: LocalMove) -> None:
    p = m.position
    if m.kind == REORDER:
        if p + 1 >= len(arcs):
            raise IndexError(f"no arc after arc {p}")
        arcs[p], arcs[p + 1] = arcs[p + 1], arcs[p]
    else:
        if p >= len(arcs) or not 0 <= m.by < len(arcs):
            raise IndexError(f"arc index out of range in {m}")
        arcs[p] = conjugate(arcs[p], arcs[m.by])


def apply_local_move(c: MonodromySequence, m: LocalMove) -> MonodromySequence:
    arcs = list(c.arcs())
    _apply_arcs(arcs, m)
    return MonodromySequence.from_arcs(c.degree, arcs)


class _Recorder:
    def __init__(self, arcs: list[Transposition], limit: int) -> None:
        self.arcs = arcs
        self.script: list[LocalMove] = []
        self.limit = limit

    def do(self, m: LocalMove) -> None:
        if len(self.script) >= self.limit:
            raise RuntimeError(f"standardization exceeded {self.limit} moves")
        _apply_arcs(self.arcs, m)
        self.script.append(m)

    def move(self, src: int, dst: int) -> None:
        while src < dst:
            self.do(LocalMove(REORDER, src))
            src += 1
        while src > dst:
            self.do(LocalMove(REORDER, src - 1))
            src -= 1

    def recolor_by(self, q: int, r: int) -> int:
        """Bring arc ``q`` next to arc ``r`` and conjugate it by ``r``; returns its new index."""
        if q < r:
            self.move(q, r - 1)
            q, r = r - 1, r
        else:
            self.move(q, r + 1)
            q = r + 1
        self.do(LocalMove(RECOLOR, q, r))
        return q


def _shortest_path(edges: list[Transposition], src: int, dst: int) -> list[int]:
    """Lexicographically least shortest vertex path in the graph with the given edges."""
    adj: dict[int, set[int]] = {}
    for e in edges:
        adj.setdefault(e.i, set()).add(e.j)
        adj.setdefault(e.j, set()).add(e.i)
    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    if src not in dist:
        raise ColoringError(f"no path from {src} to {dst}")
    path = [src]
    while path[-1] != dst:
        u = path[-1]
        path.append(min(v for v in adj[u] if dist.get(v) == dist[u] - 1))
    return path


def move_bound(d: int, arcs: int) -> int:
    return 4 * d * (arcs + 1) * (arcs + d) + 16


def standardize(c: MonodromySequence) -> tuple[list[LocalMove], MonodromySequence]:
    """Local moves taking ``c`` to the standard colouring, and the result."""
    if not c.is_plat_paired():
        raise ColoringError("colouring is not plat-paired")
    if not is_connected(c):
        raise ColoringError("colouring is disconnected")
    d = c.degree
    rec = _Recorder(list(c.arcs()), move_bound(d, c.n // 2))
    arcs = rec.arcs
    for off, D in enumerate(range(d, 2, -1)):
        top = Transposition(D - 1, D)
        # step 1: put a (D-1 D) arc at `off`
        if top not in arcs[off:]:
            rest = [a for a in arcs[off:] if D not in a.support]
            reach = set(_reachable(rest, D - 1))
            q = next(k for k in range(off, len(arcs)) if D in arcs[k].support and arcs[k].i in reach)
            path = _shortest_path(rest, arcs[q].i, D - 1)
            for u, v in zip(path, path[1:]):
                edge = Transposition(u, v)
                r = next(k for k in range(off, len(arcs)) if arcs[k] == edge)
                q = rec.recolor_by(q, r)
        q = next(k for k in range(off, len(arcs)) if arcs[k] == top)
        rec.move(q, off)
        # step 2: recolour the other (D-1 D) arcs
        while True:
            q = next((k for k in range(off + 1, len(arcs)) if arcs[k] == top), None)
            if q is None:
                break
            r = next(
                k
                for k in range(off + 1, len(arcs))
                if arcs[k].support & {D - 1, D} and not arcs[k].support <= {D - 1, D}
            )
            rec.recolor_by(q, r)
        # step 3: recolour the remaining arcs (i D) by the arc at `off`
        while True:
            q = next((k for k in range(off + 1, len(arcs)) if D in arcs[k].support), None)
            if q is None:
                break
            rec.move(q, off + 1)
            rec.do(LocalMove(RECOLOR, off + 1, off))
    result = MonodromySequence.from_arcs(d, arcs)
    if result != standard_coloring(d, c.n):
        raise AssertionError(f"standardization ended at {result}")
    return rec.script, result


def _reachable(edges: list[Transposition], start: int) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for e in edges:
            if u in e.support:
                v = e.j if e.i == u else e.i
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return sorted(seen)


def replay(c: MonodromySequence, script: list[LocalMove]) -> MonodromySequence:
    for m in script:
        c = apply_local_move(c, m)
    return c


def neighbours(arcs: tuple[Transposition, ...]):
    """All colourings one local move away (as arc tuples)."""
    for p in range(len(arcs) - 1):
        for m in (LocalMove(REORDER, p), LocalMove(RECOLOR, p, p + 1), LocalMove(RECOLOR, p + 1, p)):
            nxt = list(arcs)
            _apply_arcs(nxt, m)
            yield m, tuple(nxt)


def reachable_set(start: tuple[Transposition, ...]) -> set[tuple[Transposition, ...]]:
    """Breadth-first closure under local moves (the moves are self-inverse)."""
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for _, nxt in neighbours(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen
