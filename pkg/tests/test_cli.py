import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from platmover.cli import PlatFile, ParseError, main, parse_arc

FIX = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(p.name for p in FIX.glob("*.plat") if p.name not in ("unpaired.plat", "malformed.plat")))
def test_plat_file_round_trip(name):
    text = (FIX / name).read_text()
    assert PlatFile.parse(text).emit() == text


def test_plat_file_errors():
    with pytest.raises(ParseError):
        PlatFile.parse((FIX / "malformed.plat").read_text())
    with pytest.raises(ParseError):
        PlatFile.parse("degree 3\n")
    with pytest.raises(ParseError):
        PlatFile.parse("platmover v1\ndegree 3\nstrands 4\ncolors (1 2) (1 2) (2 3) (2 3)\nwidth 3\n")


def test_genus(capsys):
    code, out, _ = run(capsys, "genus", FIX / "standard-d3-n6.plat")
    assert code == 0 and out == "g=1\n"
    code, out, _ = run(capsys, "--json", "genus", FIX / "standard-d3-n6.plat")
    assert json.loads(out) == {"genus": 1}


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", FIX / "commented-d4-n10.plat")
    assert code == 0 and "liftable true" in out
    code, _, err = run(capsys, "validate", FIX / "unpaired.plat")
    assert code == 1 and "paired" in err
    code, _, _ = run(capsys, "validate", FIX / "malformed.plat")
    assert code == 2
    code, _, _ = run(capsys, "validate", FIX / "missing.plat")
    assert code == 2


def test_gens(capsys):
    code, out, _ = run(capsys, "gens", "--degree", 5, "--strands", 12)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 21
    assert lines[0].startswith("s_1: ") and all(": " in line for line in lines)
    code, out, _ = run(capsys, "gens", "--degree", 3, "--strands", 6)
    assert out.splitlines()[1] == "w_{0,2}: s1^-1 s0^-1 s0^-1 s1^-1 s2 s1 s0 s0 s1"
    code, out2, _ = run(capsys, "gens", "--degree", 3, "--strands", 6)
    assert out == out2
    code, out, _ = run(capsys, "kernel-gens", "--degree", 4, "--strands", 10)
    assert code == 0 and "B: " in out
    code, out2, _ = run(capsys, "gens", "--degree", 4, "--strands", 10, "--kernel")
    assert out == out2
    code, _, _ = run(capsys, "gens", "--degree", 4, "--strands", 5)
    assert code == 2
    code, out, _ = run(capsys, "--json", "gens", "--degree", 3, "--strands", 6)
    assert len(json.loads(out)["generators"]) == 7


def test_standardize(capsys):
    code, out, _ = run(capsys, "standardize", FIX / "nonstandard-d3-n4.plat")
    assert code == 0 and out
    code, out, _ = run(capsys, "standardize", FIX / "standard-d3-n6.plat")
    assert code == 0 and out == ""


def test_type(capsys):
    code, out, _ = run(capsys, "type", FIX / "commented-d4-n10.plat", "--arc", "y 1 4")
    assert code == 0 and out == "type 2\n"
    code, out, _ = run(capsys, "type", FIX / "commented-d4-n10.plat", "--arc", "x 1")
    assert out == "type 3\n"
    code, _, _ = run(capsys, "type", FIX / "commented-d4-n10.plat", "--arc", "q 1")
    assert code == 2
    assert parse_arc("s 4").name == "s_1"
    assert parse_arc("explicit 1 s2 s3").half_twist() == (((2, 1), (3, 1)), 1)


def test_lift(capsys):
    plat = FIX / "commented-d4-n10.plat"
    code, out, _ = run(capsys, "lift", plat, "--homology", "--word", "s4")
    lines = out.splitlines()
    assert code == 0 and lines[:3] == ["genus 2", "liftable true", "kernel false"]
    assert len(lines) == 3 + 4 and all(len(r.split()) == 4 for r in lines[3:])
    code, out, _ = run(capsys, "lift", plat, "--word", "s0")
    assert out.splitlines() == ["genus 2", "liftable true", "kernel true"]
    code, out, _ = run(capsys, "lift", plat, "--word", "s1")
    assert code == 1 and "liftable false" in out
    code, out, _ = run(capsys, "--json", "lift", plat, "--homology", "--word", "s2")
    data = json.loads(out)
    assert data["kernel"] and data["matrix"] == [[int(r == c) for c in range(4)] for r in range(4)]


def test_apply(capsys, tmp_path):
    dest = tmp_path / "out.plat"
    code, _, err = run(capsys, "apply", FIX / "y14-square-d4.plat", FIX / "y14-square.script", "-o", dest)
    assert code == 0 and "1: reduce: ok" in err
    assert dest.read_text().endswith("word\n")
    code, _, err = run(capsys, "apply", FIX / "standard-d3-n6.plat", FIX / "bad-c.script")
    assert code == 1 and "0: II 1 @0: FAIL" in err
    code, _, err = run(capsys, "apply", FIX / "commented-d4-n10.plat", FIX / "bad-c.script")
    assert code == 1 and "1: C @1 s0: FAIL" in err


def test_apply_keeps_comments(capsys, tmp_path):
    script = tmp_path / "s.script"
    script.write_text("II 0 @0\n")
    code, out, _ = run(capsys, "apply", FIX / "commented-d4-n10.plat", script)
    src = (FIX / "commented-d4-n10.plat").read_text()
    assert code == 0
    assert out == src.replace("word s0 s1 s1 s1 s4", "word s0 s0 s1 s1 s1 s4")


def test_module_entry_point():
    env = dict(os.environ, PYTHONPATH=str(Path(__file__).parents[1] / "src"))
    r = subprocess.run([sys.executable, "-m", "platmover", "genus", str(FIX / "standard-d3-n6.plat")],
                       capture_output=True, text=True, env=env)
    assert r.returncode == 0 and r.stdout == "g=1\n"
    r = subprocess.run([sys.executable, "-m", "platmover", "frobnicate"], capture_output=True, text=True, env=env)
    assert r.returncode == 2


def test_verify_moves(capsys):
    code, out, _ = run(capsys, "verify-moves", "--degree", 3, "--degree", 4)
    assert code == 0
    assert "d=4 III_0_4: ok" in out and "d=3 C label (i k): ok" in out
