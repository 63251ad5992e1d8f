"""Covering-move rules, stabilization, and a checker for move scripts.

Rules are read from ``degree-<d>.rules`` files (in ``PLATMOVER_RULES`` or
the package's ``rules`` directory) and validated on load.  C and N are
local: their letters are relative to a two-strand window.  II, III and IV
use absolute strand indices and need the standard colouring across the
whole plat at the point of application.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import permutations

from .algebra import Transposition, shared_symbols
from .braid import (
    FAR_COMMUTE,
    INSERT_CANCEL,
    YANG_BAXTER,
    ArcDescriptor,
    BraidWord,
    Letter,
    RelationError,
    arc_to_word,
    free_reduce,
    relation_step,
)
from .coloring import (
    ColoredPlat,
    ColoringError,
    MonodromySequence,
    half_twist_type,
    is_connected,
    standard_coloring,
    transport,
)
from .cover import build_cover, kernel_check

STANDARD = "standard"
SHARE_ONE = "share-one"
DISJOINT = "disjoint"
WINDOWS = (STANDARD, SHARE_ONE, DISJOINT)


class MoveError(ValueError):
    pass


# -- rules --------------------------------------------------------------

_TOKEN = re.compile(r"s(\d+)(\^-1)?")


def parse_letters(text: str) -> tuple[Letter, ...]:
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise ValueError(f"bad braid token {tok!r}")
        out.append((int(m.group(1)), -1 if m.group(2) else 1))
    return tuple(out)


def format_letters(letters) -> str:
    return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in letters)


@dataclass(frozen=True)
class MoveRule:
    name: str
    lhs: tuple[Letter, ...]
    rhs: tuple[Letter, ...]
    window: str

    def __post_init__(self) -> None:
        if self.window not in WINDOWS:
            raise ValueError(f"unknown window {self.window!r}")
        if self.window != STANDARD and self.width != 2:
            raise ValueError(f"local rule {self.name} must act on two strands")

    @property
    def width(self) -> int:
        return max([i + 2 for i, _ in self.lhs + self.rhs] + [2])

    @property
    def family(self) -> str:
        return self.name.split("_")[0]

    def __str__(self) -> str:
        return f"rule {self.name} {{ lhs: {format_letters(self.lhs)}; rhs: {format_letters(self.rhs)}; window: {self.window}; }}"


_RULE_RE = re.compile(
    r"rule\s+(\S+)\s*\{\s*lhs:\s*([^;]*);\s*rhs:\s*([^;]*);\s*window:\s*([\w-]+)\s*;\s*\}", re.S
)


def parse_rules(text: str) -> dict[str, MoveRule]:
    body = "\n".join(line for line in text.splitlines() if not line.lstrip().startswith("#"))
    rules: dict[str, MoveRule] = {}
    pos = 0
    for m in _RULE_RE.finditer(body):
        if body[pos:m.start()].strip():
            raise ValueError(f"unparsed rule text: {body[pos:m.start()].strip()[:40]!r}")
        pos = m.end()
        name = m.group(1)
        if name in rules:
            raise ValueError(f"duplicate rule {name}")
        rules[name] = MoveRule(name, parse_letters(m.group(2)), parse_letters(m.group(3)), m.group(4))
    if body[pos:].strip():
        raise ValueError(f"unparsed rule text: {body[pos:].strip()[:40]!r}")
    return rules


def format_rules(rules: dict[str, MoveRule]) -> str:
    return "".join(f"{r}\n" for r in rules.values())


def normalize_positive(word: BraidWord, top: MonodromySequence) -> tuple[BraidWord, list[str]]:
    """Make ``word`` positive with C and N, returning the new word and the script doing it.

    A negative letter at a crossing of colours sharing one symbol becomes
    the square of the positive letter (insert a C cube, cancel); at a
    crossing of disjoint colours it is flipped by N.
    """
    letters = list(word.letters)
    cur = top
    steps: list[str] = []
    p = 0
    while p < len(letters):
        i, s = letters[p]
        if s < 0:
            shared = shared_symbols(cur[i], cur[i + 1])
            if shared == 1:
                steps += [f"C @{p + 1} s{i}", f"cancel @{p}"]
                letters[p:p + 1] = [(i, 1), (i, 1)]
                cur = transport(BraidWord(word.n, ((i, 1), (i, 1))), cur)
                p += 2
                continue
            if shared == 0:
                steps.append(f"N @{p}")
                letters[p] = (i, 1)
            else:
                raise MoveError(f"negative crossing of equal colours at letter {p}")
        cur = transport(BraidWord(word.n, (letters[p],)), cur)
        p += 1
    return BraidWord(word.n, tuple(letters)), steps


def iv_word(d: int) -> tuple[Letter, ...]:
    """Full twist of strands ``0 .. 2d-5``."""
    m = 2 * d - 4
    return tuple((k, 1) for k in range(m - 1)) * m


def builtin_rules(d: int) -> dict[str, MoveRule]:
    if d < 3:
        raise ValueError("rules need degree >= 3")
    n = 2 * d - 2
    std = standard_coloring(d, n)
    rules = {
        "C": MoveRule("C", (), ((0, 1),) * 3, SHARE_ONE),
        "N": MoveRule("N", ((0, 1),), ((0, -1),), DISJOINT),
    }
    for i in range(d - 2):
        rules[f"II_{i}"] = MoveRule(f"II_{i}", (), ((2 * i, 1),), STANDARD)
    for j in range(2, 2 * d - 3, 2):
        for i in range(0, j, 2):
            w = arc_to_word(ArcDescriptor("w", i, j), n)
            pos, _ = normalize_positive(w, std)
            rules[f"III_{i}_{j}"] = MoveRule(f"III_{i}_{j}", ((j, 1),), pos.letters, STANDARD)
    rules["IV"] = MoveRule("IV", (), iv_word(d), STANDARD)
    return rules


def _rules_dir() -> str | None:
    return os.environ.get("PLATMOVER_RULES")


def rules_text(d: int) -> str | None:
    name = f"degree-{d}.rules"
    override = _rules_dir()
    if override:
        path = os.path.join(override, name)
        if os.path.exists(path):
            with open(path) as fh:
                return fh.read()
        return None
    res = resources.files("platmover").joinpath("rules").joinpath(name)
    if res.is_file():
        return res.read_text()
    return None


@lru_cache(maxsize=None)
def _load_rules(d: int, source: str | None) -> dict[str, MoveRule]:
    rules = parse_rules(source) if source is not None else builtin_rules(d)
    for r in rules.values():
        rep = validate_rule(r, d, kernel=False)
        if not rep.ok:
            raise ValueError(f"rule {r.name} fails validation: {rep.problems}")
    return rules


def load_rules(d: int) -> dict[str, MoveRule]:
    """Rules for degree ``d``, from the rules directory or generated, validated on load."""
    return dict(_load_rules(d, rules_text(d)))


# -- rule validation ----------------------------------------------------


def window_colorings(d: int, window: str):
    """All pairs of colours allowed in a two-strand window."""
    ts = [Transposition(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    want = 1 if window == SHARE_ONE else 0
    for a in ts:
        for b in ts:
            if shared_symbols(a, b) == want:
                yield a, b


def kernel_placements(rule: MoveRule, d: int, n: int) -> list[tuple[BraidWord, str]]:
    """Ways to place ``rhs lhs^-1`` on the standard colouring as a braid on ``n`` strands.

    Local rules are conjugated onto every arc ``x``, ``y`` and ``z`` whose
    endpoint colours satisfy the window; plat rules sit at strand 0.
    """
    core = BraidWord(n, rule.rhs) * BraidWord(n, rule.lhs).inverse()
    if rule.window == STANDARD:
        return [(core, "plat")]
    std = standard_coloring(d, n)
    want = 3 if rule.window == SHARE_ONE else 2
    arcs = [ArcDescriptor("x", i) for i in range(n - 1)]
    arcs += [ArcDescriptor(k, i, j) for k in "yz" for i in range(n) for j in range(i + 2, n)]
    out = []
    for arc in arcs:
        if half_twist_type(arc, std) != want:
            continue
        h, k = arc.half_twist()
        hw = BraidWord(n, h)
        out.append((hw.inverse() * core.shifted(k, n) * hw, arc.name))
    return out


@dataclass
class RuleReport:
    name: str
    transport_ok: bool = True
    kernel_ok: bool = True
    positive_ok: bool = True
    checked_windows: int = 0
    placements: int = 0
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.transport_ok and self.kernel_ok and self.positive_ok


def validate_rule(rule: MoveRule, d: int, kernel: bool = True, n: int | None = None) -> RuleReport:
    rep = RuleReport(rule.name)
    if rule.window == STANDARD:
        n0 = max(2 * d - 2, rule.width + rule.width % 2)
        std = standard_coloring(d, n0)
        a = transport(BraidWord(n0, rule.lhs), std)
        b = transport(BraidWord(n0, rule.rhs), std)
        rep.checked_windows = 1
        if a != b:
            rep.transport_ok = False
            rep.problems.append("lhs and rhs transport the standard colouring differently")
        if rule.family in ("II", "III", "IV") and not BraidWord(n0, rule.rhs).is_positive():
            rep.positive_ok = False
            rep.problems.append("rhs is not positive")
    else:
        for a, b in window_colorings(d, rule.window):
            c = MonodromySequence(d, (a, b))
            rep.checked_windows += 1
            if transport(BraidWord(2, rule.lhs), c) != transport(BraidWord(2, rule.rhs), c):
                rep.transport_ok = False
                rep.problems.append(f"transport differs on {a} {b}")
                break
    if kernel:
        n = n or 2 * d + 2
        cover = build_cover(standard_coloring(d, n))
        for word, where in kernel_placements(rule, d, n):
            rep.placements += 1
            k = kernel_check(word, cover)
            if not (k.liftable and k.homology_trivial):
                rep.kernel_ok = False
                rep.problems.append(f"rhs lhs^-1 at {where}: liftable={k.liftable} trivial={k.homology_trivial}")
    return rep


# -- plat operations ----------------------------------------------------


def level_colors(plat: ColoredPlat, k: int) -> MonodromySequence:
    if not 0 <= k <= len(plat.word):
        raise MoveError(f"position {k} outside the word")
    return transport(BraidWord(plat.n, plat.word.letters[:k]), plat.top)


def _replace(plat: ColoredPlat, k: int, old: tuple[Letter, ...], new: tuple[Letter, ...]) -> ColoredPlat:
    L = plat.word.letters
    if L[k:k + len(old)] != old:
        raise MoveError(f"expected {format_letters(old) or 'the empty word'} at letter {k}")
    word = BraidWord(plat.n, L[:k] + new + L[k + len(old):])
    return ColoredPlat(word, plat.top)


def apply_rule(plat: ColoredPlat, rule: MoveRule, k: int, offset: int = 0, reverse: bool = False,
               mirror: bool = False) -> ColoredPlat:
    """Replace ``lhs`` by ``rhs`` (or back, with ``reverse``) starting at letter ``k``.

    Local rules are shifted to strands ``offset, offset+1``; ``mirror``
    flips every sign of both sides.
    """
    lhs, rhs = rule.lhs, rule.rhs
    if mirror:
        lhs = tuple((i, -s) for i, s in lhs)
        rhs = tuple((i, -s) for i, s in rhs)
    if rule.window == STANDARD:
        if offset:
            raise MoveError(f"{rule.name} is applied at strand 0")
        if rule.width > plat.n:
            raise MoveError(f"{rule.name} needs {rule.width} strands")
        if level_colors(plat, k) != standard_coloring(plat.degree, plat.n):
            raise MoveError(f"{rule.name} needs the standard colouring at letter {k}")
    else:
        if not 0 <= offset < plat.n - 1:
            raise MoveError(f"window at strand {offset} out of range")
        c = level_colors(plat, k)
        shared = shared_symbols(c[offset], c[offset + 1])
        want = 1 if rule.window == SHARE_ONE else 0
        if shared != want:
            raise MoveError(f"{rule.name} needs {rule.window} colours, found {c[offset]} {c[offset + 1]}")
        lhs = tuple((i + offset, s) for i, s in lhs)
        rhs = tuple((i + offset, s) for i, s in rhs)
    old, new = (rhs, lhs) if reverse else (lhs, rhs)
    out = _replace(plat, k, old, new)
    if out.bottom() != plat.bottom():
        raise MoveError(f"{rule.name} changed the bottom colours")
    return out


def _rules_for(plat: ColoredPlat) -> dict[str, MoveRule]:
    return load_rules(plat.degree)


def move_c(plat: ColoredPlat, k: int, offset: int | None = None, sign: int = 1) -> ColoredPlat:
    """Insert a cube ``s_offset^(3 sign)`` before letter ``k``, or delete the cube at ``k`` when ``offset`` is None."""
    rule = _rules_for(plat)["C"]
    if offset is None:
        if k + 3 > len(plat.word):
            raise MoveError(f"no cube at letter {k}")
        i, s = plat.word.letters[k]
        return apply_rule(plat, rule, k, i, reverse=True, mirror=s < 0)
    return apply_rule(plat, rule, k, offset, mirror=sign < 0)


def move_n(plat: ColoredPlat, k: int) -> ColoredPlat:
    if k >= len(plat.word):
        raise MoveError(f"no letter {k}")
    i, s = plat.word.letters[k]
    return apply_rule(plat, _rules_for(plat)["N"], k, i, reverse=s < 0)


def move_plat(plat: ColoredPlat, name: str, k: int, reverse: bool = False) -> ColoredPlat:
    rules = _rules_for(plat)
    if name not in rules or rules[name].window != STANDARD:
        raise MoveError(f"no plat move {name} in degree {plat.degree}")
    return apply_rule(plat, rules[name], k, reverse=reverse)


def stabilize_with(plat: ColoredPlat, i: int) -> ColoredPlat:
    """Add a split pair of strands at the right, coloured ``(i D+1)`` for degree ``D``."""
    D = plat.degree
    if not 1 <= i <= D:
        raise MoveError(f"stabilizing colour ({i} {D + 1}) needs 1 <= i <= {D}")
    t = Transposition(i, D + 1)
    top = MonodromySequence(D + 1, plat.top.colors + (t, t))
    return ColoredPlat(plat.word.with_strands(plat.n + 2), top)


def stabilize(plat: ColoredPlat, j: int) -> ColoredPlat:
    """The ``j``-th stabilization of the degree-raising sequence: colour ``(d-j d+1+j)``.

    ``d`` is the degree before the sequence started, so the current degree
    is taken to be ``d + j``.
    """
    base = plat.degree - j
    if j < 0 or base - j < 1:
        raise MoveError(f"no stabilization j={j} from degree {plat.degree}")
    return stabilize_with(plat, base - j)


def destabilize(plat: ColoredPlat, p: int) -> ColoredPlat:
    """Remove the split plat pair ``2p, 2p+1`` whose colour is the only one using the top symbol."""
    D = plat.degree
    if not 0 <= p < plat.n // 2:
        raise MoveError(f"no plat arc {p}")
    if D <= 3:
        raise MoveError("cannot destabilize below degree 3")
    touched = {2 * p - 1, 2 * p, 2 * p + 1}
    if any(i in touched for i, _ in plat.word.letters):
        raise MoveError(f"plat arc {p} is not split from the braid")
    arcs = list(plat.top.arcs())
    if D not in arcs[p].support or any(D in a.support for q, a in enumerate(arcs) if q != p):
        raise MoveError(f"plat arc {p} is not the only arc using sheet {D}")
    del arcs[p]
    letters = tuple((i - 2 if i > 2 * p + 1 else i, s) for i, s in plat.word.letters)
    top = MonodromySequence.from_arcs(D - 1, arcs)
    return ColoredPlat(BraidWord(plat.n - 2, letters), top)


def markov_stabilize(plat: ColoredPlat) -> ColoredPlat:
    """Add a ``(1 2)`` pair at the right, joined to the last strand by one crossing at the top."""
    if plat.top[plat.n - 1] != Transposition(1, 2):
        raise MoveError("Markov stabilization needs the last strand coloured (1 2)")
    t = Transposition(1, 2)
    top = MonodromySequence(plat.degree, plat.top.colors + (t, t))
    word = BraidWord(plat.n + 2, ((plat.n - 1, 1),) + plat.word.letters)
    return ColoredPlat(word, top)


def sphere_word(n: int) -> BraidWord:
    """Full twist of all strands: isotopic to the identity on the sphere."""
    return BraidWord(n, tuple((k, 1) for k in range(n - 1)) * n)


# -- scripts ------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    text: str

    def tokens(self) -> list[str]:
        return self.text.split()


def parse_script(text: str) -> list[Step]:
    steps = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            steps.append(Step(line))
    return steps


def _at(tok: str) -> int:
    if not tok.startswith("@"):
        raise MoveError(f"expected a position like @3, got {tok!r}")
    return int(tok[1:])


def _kv(tok: str, key: str) -> int:
    m = re.fullmatch(rf"{key}=(\d+)", tok)
    if m is None:
        raise MoveError(f"expected {key}=<n>, got {tok!r}")
    return int(m.group(1))


def _letter(tok: str) -> Letter:
    m = _TOKEN.fullmatch(tok)
    if m is None:
        raise MoveError(f"expected a generator like s3, got {tok!r}")
    return int(m.group(1)), -1 if m.group(2) else 1


def apply_step(plat: ColoredPlat, step: Step) -> ColoredPlat:
    t = step.tokens()
    op, args = t[0], t[1:]
    rev = bool(args) and args[-1] == "reverse"
    if rev:
        args = args[:-1]
    try:
        if op == "N":
            return move_n(plat, _at(args[0]))
        if op == "C":
            k = _at(args[0])
            if len(args) > 1:
                g, s = _letter(args[1])
                return move_c(plat, k, g, s)
            return move_c(plat, k)
        if op == "II":
            return move_plat(plat, f"II_{int(args[0])}", _at(args[1]), rev)
        if op == "III":
            return move_plat(plat, f"III_{int(args[0])}_{int(args[1])}", _at(args[2]), rev)
        if op == "IV":
            return move_plat(plat, "IV", _at(args[0]), rev)
        if op == "stab":
            if args[0].startswith("i="):
                return stabilize_with(plat, _kv(args[0], "i"))
            return stabilize(plat, _kv(args[0], "j"))
        if op == "destab":
            return destabilize(plat, _kv(args[0], "p"))
        if op == "markov":
            return markov_stabilize(plat)
        if op in ("yb", "comm", "cancel"):
            which = {"yb": YANG_BAXTER, "comm": FAR_COMMUTE, "cancel": INSERT_CANCEL}[op]
            ins = _letter(args[1]) if len(args) > 1 else None
            return plat.with_word(relation_step(plat.word, _at(args[0]), which, ins))
        if op == "sphere":
            k = _at(args[0])
            r = sphere_word(plat.n)
            if len(args) > 1 and args[1] == "inv":
                r = r.inverse()
            c = level_colors(plat, k)
            if transport(r, c) != c:
                raise MoveError(f"sphere slide changes the colours at letter {k}")
            L = plat.word.letters
            return plat.with_word(BraidWord(plat.n, L[:k] + r.letters + L[k:]))
        if op == "reduce":
            return plat.with_word(free_reduce(plat.word))
    except (IndexError, ValueError) as exc:
        if isinstance(exc, (MoveError, RelationError, ColoringError)):
            raise MoveError(str(exc)) from exc
        raise MoveError(f"malformed step {step.text!r}: {exc}") from exc
    raise MoveError(f"unknown step {op!r}")


@dataclass(frozen=True)
class TraceEntry:
    index: int
    step: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class ScriptResult:
    ok: bool
    end: ColoredPlat
    trace: tuple[TraceEntry, ...]

    @property
    def failed_step(self) -> int | None:
        return next((e.index for e in self.trace if not e.ok), None)


def verify_script(start: ColoredPlat, script) -> ScriptResult:
    """Run the steps in order, stopping at the first one that does not apply."""
    steps = parse_script(script) if isinstance(script, str) else list(script)
    cur = start
    trace: list[TraceEntry] = []
    for idx, st in enumerate(steps):
        st = st if isinstance(st, Step) else Step(str(st))
        try:
            nxt = apply_step(cur, st)
            if not is_connected(nxt.top):
                raise MoveError("step disconnected the colouring")
        except MoveError as exc:
            trace.append(TraceEntry(idx, st.text, False, str(exc)))
            return ScriptResult(False, cur, tuple(trace))
        cur = nxt
        trace.append(TraceEntry(idx, st.text, True, f"degree {cur.degree}, {cur.n} strands, {len(cur.word)} letters"))
    return ScriptResult(True, cur, tuple(trace))


# -- scripts for the kernel generators ----------------------------------


def band_square_script(kind: str, i: int, j: int, n: int) -> tuple[BraidWord, list[str]]:
    """Word ``t^2`` for the band arc and the N-script that undoes it."""
    arc = ArcDescriptor(kind, i, j)
    h, k = arc.half_twist()
    word = arc_to_word(arc, n) ** 2
    first_core = len(h) + 1 + 2 * len(h)  # second core letter in the unreduced square
    steps = [f"N @{first_core}"]
    # after N the cores cancel through the conjugators
    steps.append("reduce")
    return word, steps


def w_script(i: int, j: int, d: int, n: int) -> tuple[BraidWord, list[str]]:
    """Word ``w_{i,j}`` and the script reducing it with C, N, III and II."""
    word = arc_to_word(ArcDescriptor("w", i, j), n)
    _, steps = normalize_positive(word, standard_coloring(d, n))
    steps.append(f"III {i} {j} @0 reverse")
    if j < 2 * d - 4:
        steps.append(f"II {j // 2} @0 reverse")
    return word, steps


def degree_raise_script(d: int) -> list[str]:
    """Stabilizations ``(d-j d+1+j)`` for ``j = 0 .. d-3``."""
    return [f"stab j={j}" for j in range(d - 2)]


def standard_plat(d: int, n: int, word: BraidWord | None = None) -> ColoredPlat:
    return ColoredPlat(word or BraidWord.identity(n), standard_coloring(d, n))


def all_window_checks(d: int) -> dict[str, RuleReport]:
    return {name: validate_rule(r, d) for name, r in load_rules(d).items()}


def c_middle_label(i: int, j: int, k: int, d: int) -> Transposition:
    """Colour of the middle strand segment in the C cube on ``(i j), (j k)``."""
    c = MonodromySequence(d, (Transposition(i, j), Transposition(j, k)))
    return transport(BraidWord(2, ((0, 1),)), c)[0]


def distinct_triples(d: int):
    return permutations(range(1, d + 1), 3)
