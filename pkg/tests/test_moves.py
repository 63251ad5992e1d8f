
import pytest

from platmover.algebra import Transposition
from platmover.braid import BraidWord, free_reduce
from platmover.coloring import ColoredPlat, MonodromySequence, is_connected, standard_coloring, total_monodromy
from platmover.cover import build_cover, kernel_check
from platmover import moves
from platmover.moves import (
    MoveError,
    MoveRule,
    band_square_script,
    builtin_rules,
    c_middle_label,
    degree_raise_script,
    destabilize,
    format_rules,
    load_rules,
    markov_stabilize,
    move_c,
    move_n,
    move_plat,
    normalize_positive,
    parse_rules,
    stabilize,
    stabilize_with,
    standard_plat,
    validate_rule,
    verify_script,
    w_script,
)

T = Transposition


def plat(d, colors, word=""):
    c = MonodromySequence.of(d, colors)
    return ColoredPlat(BraidWord.parse(c.n, word), c)


def test_rule_text_round_trip():
    rules = builtin_rules(4)
    text = format_rules(rules)
    assert parse_rules(text) == rules
    assert str(rules["II_1"]) == "rule II_1 { lhs: ; rhs: s2; window: standard; }"
    with pytest.raises(ValueError):
        parse_rules("rule X { lhs: s0; rhs: s0 s0; window: sideways; }")
    with pytest.raises(ValueError):
        parse_rules("rule C { lhs: ; rhs: s0 s0 s0; window: share-one; } garbage")


def test_shipped_files_match_builders():
    for d in (3, 4, 5, 6):
        assert moves.rules_text(d) is not None
        assert parse_rules(moves.rules_text(d)) == builtin_rules(d)


def test_rules_env_directory(tmp_path, monkeypatch):
    good = builtin_rules(4)
    (tmp_path / "degree-4.rules").write_text(format_rules(good))
    monkeypatch.setenv("PLATMOVER_RULES", str(tmp_path))
    assert load_rules(4) == good
    # no file for degree 5 there: generated rules are used
    assert load_rules(5) == builtin_rules(5)
    bad = dict(good)
    bad["II_0"] = MoveRule("II_0", (), ((1, 1),), "standard")
    (tmp_path / "degree-4.rules").write_text(format_rules(bad))
    with pytest.raises(ValueError, match="II_0"):
        load_rules(4)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_rule_soundness(d):
    for rule in load_rules(d).values():
        rep = validate_rule(rule, d)
        assert rep.ok, (rule.name, rep.problems)
        assert rep.checked_windows > 0 or (d == 3 and rule.name == "N")


def test_window_transport_exhaustive_degree_six():
    for rule in load_rules(6).values():
        assert validate_rule(rule, 6, kernel=False).ok


def test_bad_rules_rejected():
    assert not validate_rule(MoveRule("N", ((0, 1),), ((0, -1),), "share-one"), 4, kernel=False).transport_ok
    rep = validate_rule(MoveRule("II_1", (), ((1, 1),), "standard"), 4)
    assert not rep.ok
    rep = validate_rule(MoveRule("II_2", (), ((4, 1),), "standard"), 4)
    assert rep.transport_ok and not rep.kernel_ok
    rep = validate_rule(MoveRule("II_0", (), ((0, -1),), "standard"), 4)
    assert not rep.positive_ok


def test_c_label():
    for d in (3, 4, 5):
        for i, j, k in moves.distinct_triples(d):
            assert c_middle_label(i, j, k, d) == T(min(i, k), max(i, k))


def test_c_round_trip_and_errors():
    p = plat(3, [(2, 3), (2, 3), (1, 2), (1, 2)], "s0")
    q = move_c(p, 1, 1)
    assert str(q.word) == "s0 s1 s1 s1"
    assert move_c(q, 1) == p
    assert move_c(move_c(p, 0, 1, -1), 0) == p
    p4 = plat(4, [(1, 2), (1, 2), (3, 4), (3, 4)] + [(1, 3), (1, 3)])
    with pytest.raises(MoveError, match="share-one"):
        move_c(p4, 0, 1)
    with pytest.raises(MoveError):
        move_c(p, 0, 0)  # equal colours


def test_n_involutive_and_transport():
    p = plat(4, [(1, 2), (1, 2), (3, 4), (3, 4), (2, 3), (2, 3)], "s1 s1")
    q = move_n(p, 0)
    assert str(q.word) == "s1^-1 s1"
    assert q.bottom() == p.bottom()
    assert move_n(q, 0) == p
    with pytest.raises(MoveError):
        move_n(plat(3, [(1, 2), (1, 2), (2, 3), (2, 3)], "s1 s1 s1"), 0)


def test_auxiliary_double_c():
    p = plat(3, [(2, 3), (2, 3), (1, 2), (1, 2)], "s1^-1 s0 s1^-1")
    res = verify_script(p, "C @1 s1\ncancel @0\nC @4 s1\ncancel @3\n")
    assert res.ok and str(res.end.word) == "s1 s1 s0 s1 s1"
    word, steps = normalize_positive(p.word, p.top)
    assert res.end.word == word and steps == ["C @1 s1", "cancel @0", "C @4 s1", "cancel @3"]


def test_plat_moves():
    d, n = 4, 10
    p = standard_plat(d, n)
    for i in range(d - 2):
        q = move_plat(p, f"II_{i}", 0)
        assert free_reduce(q.word) == BraidWord(n, ((2 * i, 1),))
        assert move_plat(q, f"II_{i}", 0, reverse=True) == p
    q = move_plat(p, "IV", 0)
    assert q.bottom() == p.top
    with pytest.raises(MoveError, match="standard"):
        move_plat(standard_plat(d, n, BraidWord.parse(n, "s3 s3 s3")), "II_0", 1)
    with pytest.raises(MoveError):
        move_plat(p, "II_2", 0)
    with pytest.raises(MoveError):
        move_plat(p, "III_1_4", 0)


def test_iii_reverse_needs_pattern():
    p = standard_plat(4, 10)
    with pytest.raises(MoveError):
        move_plat(p, "III_0_2", 0, reverse=True)


def test_positivity_up_to_c():
    for d in (3, 4, 5):
        for name, rule in load_rules(d).items():
            if rule.family in ("II", "III", "IV"):
                assert all(s > 0 for _, s in rule.rhs), name


def test_normalize_equal_colour_negative_fails():
    c = standard_coloring(3, 4)
    with pytest.raises(MoveError):
        normalize_positive(BraidWord.parse(4, "s0^-1"), c)


def test_verify_script_basics():
    p = standard_plat(4, 10)
    res = verify_script(p, "")
    assert res.ok and res.end == p and res.trace == ()
    res = verify_script(p, "# comment only\n\nII 1 @0\nN @0\n")
    assert not res.ok and res.failed_step == 1
    assert res.end == move_plat(p, "II_1", 0)
    assert not verify_script(p, "bogus @0").ok
    assert not verify_script(p, "II x @0").ok


def test_disjoint_c_fails_in_script():
    p = plat(4, [(1, 2), (1, 2), (3, 4), (3, 4), (2, 3), (2, 3)])
    res = verify_script(p, "C @0 s1")
    assert not res.ok and res.failed_step == 0 and "share-one" in res.trace[0].detail


def test_relation_steps_in_scripts():
    p = standard_plat(4, 10, BraidWord.parse(10, "s0 s4"))
    res = verify_script(p, "comm @0\ncancel @2 s6\ncancel @2\n")
    assert res.ok and str(res.end.word) == "s4 s0"
    p = standard_plat(3, 6, BraidWord.parse(6, "s2 s3 s2"))
    assert str(verify_script(p, "yb @0").end.word) == "s3 s2 s3"


@pytest.mark.parametrize("kind", ["y", "z"])
@pytest.mark.parametrize("d", [4, 5])
def test_band_square_scripts(kind, d):
    n = 2 * d + 2
    for i in range(1, 2 * d - 4, 2):
        for j in range(i + 3, 2 * d - 3, 2):
            word, steps = band_square_script(kind, i, j, n)
            res = verify_script(standard_plat(d, n, word), steps)
            assert res.ok and free_reduce(res.end.word) == BraidWord.identity(n)


@pytest.mark.parametrize("d", [4, 5])
def test_w_scripts_below_top(d):
    n = 2 * d + 2
    for j in range(2, 2 * d - 4, 2):
        for i in range(0, j, 2):
            word, steps = w_script(i, j, d, n)
            res = verify_script(standard_plat(d, n, word), steps)
            assert res.ok and res.end.word == BraidWord.identity(n), (i, j, res.trace[-1])


@pytest.mark.parametrize("d", [4, 5])
def test_w_scripts_at_top_stop_at_transvection(d):
    n = 2 * d + 2
    j = 2 * d - 4
    cov = build_cover(standard_coloring(d, n))
    for i in range(0, j, 2):
        word, steps = w_script(i, j, d, n)
        res = verify_script(standard_plat(d, n, word), steps)
        assert res.ok and res.end.word == BraidWord(n, ((j, 1),))
        assert not kernel_check(res.end.word, cov).homology_trivial


def test_stabilize_sequence_and_inverse():
    for d in (3, 4, 5, 6):
        p = standard_plat(d, 2 * d - 2)
        cur = p
        for j, step in enumerate(degree_raise_script(d)):
            nxt = verify_script(cur, step).end
            assert nxt.degree == cur.degree + 1 and nxt.n == cur.n + 2
            assert nxt.top[-1] == T(d - j, d + 1 + j)
            assert is_connected(nxt.top) and total_monodromy(nxt.top).is_identity()
            assert destabilize(nxt, nxt.n // 2 - 1) == cur
            cur = nxt
        assert cur.degree == 2 * d - 2


def test_stabilize_examples():
    p = standard_plat(4, 8, BraidWord.parse(8, "s1 s1 s1 s4"))
    q = stabilize(p, 0)
    assert q.degree == 5 and q.top[-1] == T(4, 5) and q.word.letters == p.word.letters
    assert stabilize_with(p, 1).top[-1] == T(1, 5)
    with pytest.raises(MoveError):
        stabilize_with(p, 6)


def test_destabilize_errors():
    p = stabilize(standard_plat(4, 6), 0)
    with pytest.raises(MoveError, match="split"):
        destabilize(p.with_word(BraidWord.parse(8, "s5 s5")), 3)
    with pytest.raises(MoveError, match="only arc"):
        destabilize(p, 0)
    with pytest.raises(MoveError):
        destabilize(standard_plat(3, 4), 1)


def test_markov():
    p = standard_plat(3, 6)
    q = markov_stabilize(p)
    assert q.n == 8 and q.top[-1] == T(1, 2) and q.top[-2] == T(1, 2)
    assert str(q.word) == "s5"
    with pytest.raises(MoveError):
        markov_stabilize(stabilize(p, 0))


def test_sphere_slide():
    p = standard_plat(3, 4)
    res = verify_script(p, "sphere @0\nsphere @0 inv\nreduce\n")
    assert res.ok and res.end == p
    q = verify_script(standard_plat(4, 10, BraidWord.parse(10, "s0 s3 s3 s3")), "sphere @2").end
    assert q.word.letters[:2] == ((0, 1), (3, 1)) and len(q.word) == 4 + 90
    assert kernel_check(moves.sphere_word(10), build_cover(standard_coloring(4, 10))).homology_trivial


def test_kernel_words_from_moves():
    # II_i and C realize x_{2i} and x_{2i+1}^3
    d, n = 4, 10
    p = standard_plat(d, n)
    q = verify_script(p, "II 1 @0\nC @1 s3").end
    assert str(q.word) == "s2 s3 s3 s3"
