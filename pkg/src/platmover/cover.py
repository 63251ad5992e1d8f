"""The branched cover determined by a monodromy sequence and its first homology.

Chains live in a reduced complex: one generator per branch point, the lift
of ``a_m`` from the lesser to the greater sheet of its colour.  The cap
relations of the full fat graph are already eliminated there, so first
homology of the closed surface is ``ker(boundary) / span(boundary loops)``.
A :func:`cell_complex` of the unreduced fat graph is kept as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .braid import ArcDescriptor, BraidWord, FreeWord, apply_endo, arc_conjugator, free_gen, free_mul, hurwitz_endo
from .coloring import (
    ColoringError,
    MonodromySequence,
    half_twist_type,
    is_connected,
    is_liftable,
    total_monodromy,
    transport,
)
from .smith import Matrix, identity, inverse_unimodular, matmul, rank, smith_normal_form


class NotLiftable(ValueError):
    pass


@dataclass(frozen=True)
class CoverSurface:
    colors: MonodromySequence
    boundary: Matrix  # d x n, column m is hi_m - lo_m
    boundary_loops: tuple[tuple[int, ...], ...]  # one reduced cycle per sheet
    projection: Matrix  # 2g x n, cycles -> homology coordinates
    lift: Matrix  # n x 2g, homology coordinates -> representative cycles
    genus: int

    @property
    def degree(self) -> int:
        return self.colors.degree

    @property
    def n(self) -> int:
        return self.colors.n

    @property
    def rank(self) -> int:
        return 2 * self.genus

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus

    def project(self, cycle) -> tuple[int, ...]:
        return tuple(sum(r * x for r, x in zip(row, cycle)) for row in self.projection)


def build_cover(c: MonodromySequence) -> CoverSurface:
    if not is_connected(c):
        raise ColoringError("colouring is disconnected")
    if not total_monodromy(c).is_identity():
        raise ColoringError("total monodromy is not the identity")
    d, n = c.degree, c.n
    lo, hi = c.arrays()
    bd = [[0] * n for _ in range(d)]
    for m in range(n):
        bd[hi[m] - 1][m] += 1
        bd[lo[m] - 1][m] -= 1

    loop_word = [(m, 1) for m in range(n)]
    loops = []
    for s in range(1, d + 1):
        vec, end = kernels.lift_free_word(loop_word, lo, hi, s)
        assert end == s
        loops.append(tuple(vec))

    _, D, V = smith_normal_form(bd)
    rk = sum(1 for k in range(min(d, n)) if D[k][k])
    Vinv = inverse_unimodular(V)
    # boundary loops in kernel coordinates
    rel = matmul([row for row in Vinv[rk:]], [list(col) for col in zip(*loops)])
    if rel and rel[0]:
        U2, D2, _ = smith_normal_form(rel)
        r2 = sum(1 for k in range(min(len(D2), len(D2[0]))) if D2[k][k])
        if any(D2[k][k] != 1 for k in range(r2)):
            raise ArithmeticError("torsion in the homology of a closed surface")
    else:
        U2, r2 = identity(len(rel)), 0
    U2inv = inverse_unimodular(U2)
    projection = matmul(U2, Vinv[rk:])[r2:]
    kbasis = [row[rk:] for row in V]
    lift = [row[r2:] for row in matmul(kbasis, U2inv)]
    h1 = n - rk - r2
    if h1 % 2:
        raise ArithmeticError(f"odd first Betti number {h1}")
    return CoverSurface(c, bd, tuple(loops), projection, lift, h1 // 2)


def genus_formula(d: int, n: int) -> int:
    return n // 2 - (d - 1)


@dataclass(frozen=True)
class CellComplex:
    """The capped fat graph: sheets, lifted generator edges, cap and boundary faces."""

    vertices: int
    edges: tuple[tuple[int, int, int], ...]  # (branch point, start sheet, end sheet)
    faces: tuple[tuple[tuple[int, int], ...], ...]  # signed edge indices around each face

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - len(self.edges) + len(self.faces)

    def betti_1(self) -> int:
        nv, ne = self.vertices, len(self.edges)
        d1 = [[0] * ne for _ in range(nv)]
        for e, (_, s, t) in enumerate(self.edges):
            d1[t - 1][e] += 1
            d1[s - 1][e] -= 1
        d2 = [[0] * len(self.faces) for _ in range(ne)]
        for f, face in enumerate(self.faces):
            for e, sign in face:
                d2[e][f] += sign
        return ne - rank(d1) - rank(d2)


def cell_complex(c: MonodromySequence) -> CellComplex:
    """Unreduced complex of the closed cover, counted cell by cell."""
    d, n = c.degree, c.n
    edges = []
    index = {}
    for m in range(n):
        for s in range(1, d + 1):
            index[m, s] = len(edges)
            edges.append((m, s, c[m](s)))
    faces = []
    # cap disks: one per orbit of each branch point's colour
    for m in range(n):
        seen = set()
        for s in range(1, d + 1):
            if s in seen:
                continue
            orbit = [s]
            t = c[m](s)
            while t != s:
                orbit.append(t)
                t = c[m](t)
            seen.update(orbit)
            faces.append(tuple((index[m, u], 1) for u in orbit))
    # boundary disks: lifts of a_0 ... a_{n-1}
    seen = set()
    for s in range(1, d + 1):
        if s in seen:
            continue
        seen.add(s)
        face = []
        t = s
        for m in range(n):
            face.append((index[m, t], 1))
            t = c[m](t)
        faces.append(tuple(face))
        t = s
        # other starting sheets on the same boundary circle
        while True:
            for m in range(n):
                t = c[m](t)
            if t == s:
                break
            seen.add(t)
    return CellComplex(d, tuple(edges), tuple(faces))


def chain_matrix(word: BraidWord, cover: CoverSurface) -> Matrix:
    """Reduced chain map of ``word`` (bottom cover to top cover), as an ``n x n`` matrix."""
    if word.n != cover.n:
        raise ColoringError(f"word has {word.n} strands, cover has {cover.n} branch points")
    idx = [i for i, _ in word.letters]
    sgn = [s for _, s in word.letters]
    lo, hi = cover.colors.arrays()
    cols, _, _ = kernels.chain_matrix(idx, sgn, lo, hi)
    return [list(r) for r in zip(*cols)] if cols else []


def chain_matrix_by_endo(word: BraidWord, cover: CoverSurface) -> Matrix:
    """Reference route: lift each free-group image of a generator directly."""
    top = cover.colors
    bottom = transport(word, top)
    lo, hi = top.arrays()
    imgs = hurwitz_endo(word)
    cols = []
    for m, w in enumerate(imgs):
        vec, end = kernels.lift_free_word(w, lo, hi, bottom[m].i)
        assert end == bottom[m].j
        cols.append(vec)
    return [list(r) for r in zip(*cols)]


def homology_action(word: BraidWord, cover: CoverSurface) -> Matrix:
    """Action of a liftable braid on first homology of the closed cover."""
    if not is_liftable(word, cover.colors):
        raise NotLiftable("word does not preserve the colouring")
    return matmul(matmul(cover.projection, chain_matrix(word, cover)), cover.lift)


def is_identity_matrix(m: Matrix) -> bool:
    return all(v == int(r == c) for r, row in enumerate(m) for c, v in enumerate(row))


def transvection_rank(m: Matrix) -> int:
    """``rank(M - I)``."""
    diff = [[v - int(r == c) for c, v in enumerate(row)] for r, row in enumerate(m)]
    return rank(diff) if diff else 0


@dataclass(frozen=True)
class KernelReport:
    liftable: bool
    homology_trivial: bool


def kernel_check(word: BraidWord, cover: CoverSurface) -> KernelReport:
    if not is_liftable(word, cover.colors):
        return KernelReport(False, False)
    return KernelReport(True, is_identity_matrix(homology_action(word, cover)))


@dataclass(frozen=True)
class ArcLift:
    """Components of the preimage of an arc, as sheet itineraries."""

    components: tuple[tuple[int, ...], ...]
    closed: tuple[bool, ...]
    loop_class: tuple[int, ...] | None = field(default=None)


def arc_loop(arc: ArcDescriptor, n: int) -> FreeWord:
    """Free-group loop running once around both endpoints of the arc."""
    h, k = arc_conjugator(arc, n)
    return apply_endo(hurwitz_endo(h.inverse()), free_mul(free_gen(k), free_gen(k + 1)))


def lift_arc(arc: ArcDescriptor, cover: CoverSurface, want_loop: bool = True) -> ArcLift:
    c = cover.colors
    if want_loop and half_twist_type(arc, c) != 1:
        raise NotLiftable("only a Type 1 arc lifts to a closed curve")
    h, k = arc_conjugator(arc, cover.n)
    seen = transport(h.inverse(), c)
    a, b = seen[k], seen[k + 1]
    adj: dict[int, list[int]] = {s: [] for s in range(1, c.degree + 1)}
    for t in (a, b):
        adj[t.i].append(t.j)
        adj[t.j].append(t.i)
    comps: list[tuple[int, ...]] = []
    closed: list[bool] = []
    done: set[int] = set()
    for s in range(1, c.degree + 1):
        if s in done:
            continue
        # walk from an end of the path, or anywhere on a cycle
        members = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in members:
                    members.add(v)
                    stack.append(v)
        is_cycle = a == b and a.i in members
        start = min(members) if is_cycle else min(u for u in members if len(set(adj[u])) <= 1)
        order = [start]
        prev = None
        while True:
            nxt = [v for v in sorted(set(adj[order[-1]])) if v != prev and v not in order]
            if not nxt:
                break
            prev = order[-1]
            order.append(nxt[0])
        done.update(members)
        comps.append(tuple(order))
        closed.append(is_cycle)
    loop_class = None
    if any(closed) and want_loop:
        lo, hi = c.arrays()
        vec, end = kernels.lift_free_word(arc_loop(arc, cover.n), lo, hi, a.i)
        assert end == a.i
        loop_class = cover.project(vec)
    return ArcLift(tuple(comps), tuple(closed), loop_class)
