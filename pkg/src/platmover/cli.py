"""Command-line front end: plat files, generator lists, homology, and move scripts.

Exit codes: 0 success, 1 validation failure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .algebra import Transposition
from .braid import ArcDescriptor, BraidWord
from .coloring import ColoredPlat, ColoringError, MonodromySequence, half_twist_type, is_connected, is_liftable
from .cover import build_cover, homology_action, is_identity_matrix
from .liftgen import generating_set, kernel_normal_gens, sorted_entries
from .moves import c_middle_label, load_rules, validate_rule, verify_script
from .standardize import format_script, standardize

HEADER = "platmover v1"
FIELDS = ("degree", "strands", "colors", "word")


class ParseError(ValueError):
    pass


@dataclass
class PlatFile:
    """A plat plus the layout of the file it came from (comment and blank lines kept in place)."""

    plat: ColoredPlat
    layout: list[str] = field(default_factory=lambda: [HEADER, *FIELDS])

    def field_line(self, name: str) -> str:
        if name == "degree":
            return f"degree {self.plat.degree}"
        if name == "strands":
            return f"strands {self.plat.n}"
        if name == "colors":
            return str(self.plat.top)
        word = str(self.plat.word)
        return f"word {word}" if word else "word"

    def emit(self) -> str:
        out = []
        for item in self.layout:
            if item in FIELDS:
                out.append(self.field_line(item))
            else:
                out.append(item)
        return "\n".join(out) + "\n"

    @classmethod
    def parse(cls, text: str) -> "PlatFile":
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        layout: list[str] = []
        values: dict[str, str] = {}
        seen_header = False
        for no, line in enumerate(lines, 1):
            if not line.strip() or line.lstrip().startswith("#"):
                layout.append(line)
                continue
            if not seen_header:
                if line.strip() != HEADER:
                    raise ParseError(f"line {no}: expected {HEADER!r}")
                seen_header = True
                layout.append(HEADER)
                continue
            key, _, rest = line.strip().partition(" ")
            if key not in FIELDS:
                raise ParseError(f"line {no}: unknown field {key!r}")
            if key in values:
                raise ParseError(f"line {no}: duplicate field {key!r}")
            values[key] = rest
            layout.append(key)
        if not seen_header:
            raise ParseError(f"missing {HEADER!r} header")
        missing = [k for k in FIELDS if k not in values and k != "word"]
        if missing:
            raise ParseError(f"missing field(s): {', '.join(missing)}")
        if "word" not in values:
            layout.append("word")
            values["word"] = ""
        try:
            d = int(values["degree"])
            n = int(values["strands"])
            colors = MonodromySequence.parse(d, "colors " + values["colors"])
            word = BraidWord.parse(n, values["word"])
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        if colors.n != n:
            raise PlatInvalid(f"colors has {colors.n} entries, strands is {n}")
        try:
            plat = ColoredPlat(word, colors)
        except ColoringError as exc:
            raise PlatInvalid(str(exc)) from exc
        return cls(plat, layout)


class PlatInvalid(ValueError):
    """The file parsed but does not describe a valid coloured plat."""


def parse_arc(text: str) -> ArcDescriptor:
    """``x I``, ``y I J``, ``z I J``, ``w I J``, ``s D`` (the s_1 arc of degree D) or ``explicit CORE <word>``."""
    parts = text.split()
    if not parts:
        raise ParseError("empty arc")
    kind = parts[0]
    try:
        if kind == "x" and len(parts) == 2:
            return ArcDescriptor("x", int(parts[1]))
        if kind in ("y", "z", "w") and len(parts) == 3:
            return ArcDescriptor(kind, int(parts[1]), int(parts[2]))
        if kind == "s" and len(parts) == 2:
            a = 2 * int(parts[1]) - 4
            return ArcDescriptor("s", a, a + 3)
        if kind == "explicit" and len(parts) >= 2:
            h = BraidWord.parse(10**6, " ".join(parts[2:])).letters
            return ArcDescriptor("explicit", 0, conjugator=h, core=int(parts[1]))
    except ValueError as exc:
        raise ParseError(f"bad arc {text!r}: {exc}") from exc
    raise ParseError(f"bad arc {text!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _out(args, text_lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _load(path: str) -> PlatFile:
    return PlatFile.parse(_read(path))


def cmd_validate(args) -> int:
    pf = _load(args.plat)
    p = pf.plat
    connected = is_connected(p.top)
    liftable = p.is_liftable()
    ok = connected
    _out(args, [f"valid {str(ok).lower()}", f"connected {str(connected).lower()}", f"liftable {str(liftable).lower()}"],
         {"valid": ok, "connected": connected, "liftable": liftable})
    return 0 if ok else 1


def cmd_standardize(args) -> int:
    pf = _load(args.plat)
    try:
        script, result = standardize(pf.plat.top)
    except ColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"script": [str(m) for m in script], "result": str(result)}, sort_keys=True))
    else:
        sys.stdout.write(format_script(script))
    return 0


def cmd_genus(args) -> int:
    pf = _load(args.plat)
    try:
        cover = build_cover(pf.plat.top)
    except ColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _out(args, [f"g={cover.genus}"], {"genus": cover.genus})
    return 0


def _gens(args, kernel: bool) -> int:
    try:
        entries = kernel_normal_gens(args.degree, args.strands) if kernel else generating_set(args.degree, args.strands)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    entries = sorted_entries(entries)
    _out(args, [e.line() for e in entries], {"generators": [{"name": e.name, "word": str(e.word)} for e in entries]})
    return 0


def cmd_gens(args) -> int:
    return _gens(args, args.kernel)


def cmd_kernel_gens(args) -> int:
    return _gens(args, True)


def cmd_type(args) -> int:
    pf = _load(args.plat)
    arc = parse_arc(args.arc)
    try:
        t = half_twist_type(arc, pf.plat.top)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _out(args, [f"type {t}"], {"arc": arc.name, "type": t})
    return 0


def cmd_lift(args) -> int:
    pf = _load(args.plat)
    p = pf.plat
    word = BraidWord.parse(p.n, args.word) if args.word is not None else p.word
    try:
        cover = build_cover(p.top)
    except ColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    liftable = is_liftable(word, p.top)
    payload = {"genus": cover.genus, "liftable": liftable, "kernel": False}
    lines = [f"genus {cover.genus}", f"liftable {str(liftable).lower()}"]
    if liftable:
        m = homology_action(word, cover)
        payload["kernel"] = is_identity_matrix(m)
        if args.homology:
            payload["matrix"] = m
            lines += [" ".join(str(v) for v in row) for row in m]
    lines.insert(2, f"kernel {str(payload['kernel']).lower()}")
    _out(args, lines, payload)
    return 0 if liftable else 1


def cmd_apply(args) -> int:
    pf = _load(args.plat)
    res = verify_script(pf.plat, _read(args.script))
    for e in res.trace:
        status = "ok" if e.ok else "FAIL"
        print(f"{e.index}: {e.step}: {status}: {e.detail}", file=sys.stderr)
    if not res.ok:
        return 1
    out = PlatFile(res.end, pf.layout).emit()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_verify_moves(args) -> int:
    degrees = args.degree or [3, 4, 5]
    jobs = []
    for d in degrees:
        rules = load_rules(d)
        jobs += [(d, r) for r in rules.values()]
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        reports = list(pool.map(lambda job: (job[0], validate_rule(job[1], job[0])), jobs))
    lines, rows, ok = [], [], True
    for d, rep in reports:
        ok &= rep.ok
        lines.append(
            f"d={d} {rep.name}: {'ok' if rep.ok else 'FAIL'} windows={rep.checked_windows} placements={rep.placements}"
            + ("" if rep.ok else " " + "; ".join(rep.problems))
        )
        rows.append({"degree": d, "rule": rep.name, "ok": rep.ok, "problems": rep.problems})
    for d in degrees:
        good = all(
            c_middle_label(i, j, k, d) == Transposition(i, k)
            for i in range(1, d + 1) for j in range(1, d + 1) for k in range(1, d + 1) if len({i, j, k}) == 3
        )
        ok &= good
        lines.append(f"d={d} C label (i k): {'ok' if good else 'FAIL'}")
        rows.append({"degree": d, "rule": "C-label", "ok": good, "problems": []})
    _out(args, lines, {"ok": ok, "rules": rows})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="platmover", description="Coloured plats, branched covers and covering moves.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    def plat_cmd(name: str, fn, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("plat", help="plat file ('-' for stdin)")
        p.set_defaults(func=fn)
        return p

    plat_cmd("validate", cmd_validate, "check plat invariants and liftability")
    plat_cmd("standardize", cmd_standardize, "local moves to the standard colouring")
    plat_cmd("genus", cmd_genus, "genus of the branched cover")
    p = plat_cmd("type", cmd_type, "Type of the half-twist about an arc")
    p.add_argument("--arc", required=True, help="e.g. 'x 3', 'y 1 4', 'w 0 2', 's 4'")
    p = plat_cmd("lift", cmd_lift, "homology action of a liftable braid")
    p.add_argument("--homology", action="store_true", help="print the matrix rows")
    p.add_argument("--word", help="braid word (default: the file's word)")
    p = plat_cmd("apply", cmd_apply, "run a move script and write the resulting plat")
    p.add_argument("script", help="script file")
    p.add_argument("-o", "--output", help="output plat file (default stdout)")

    for name, fn in (("gens", cmd_gens), ("kernel-gens", cmd_kernel_gens)):
        p = sub.add_parser(name, help="generators of the liftable subgroup" if name == "gens" else "kernel normal generators")
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--strands", type=int, required=True)
        if name == "gens":
            p.add_argument("--kernel", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify-moves", help="rule soundness sweep")
    p.add_argument("--degree", type=int, action="append", help="degree to check (repeatable; default 3, 4, 5)")
    p.add_argument("--workers", type=int, default=4)
    p.set_defaults(func=cmd_verify_moves)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PlatInvalid as exc:
        print(f"invalid plat: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
