import itertools
import random

import pytest

from platmover.algebra import Transposition
from platmover.coloring import ColoringError, MonodromySequence, is_connected, standard_coloring, total_monodromy
from platmover.standardize import (
    LocalMove,
    apply_local_move,
    format_script,
    move_bound,
    parse_script,
    reachable_set,
    replay,
    standardize,
)

T = Transposition


def arcs_seq(d, *pairs):
    return MonodromySequence.from_arcs(d, [T(*p) for p in pairs])


def all_connected(d, arcs):
    ts = [T(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    for combo in itertools.product(ts, repeat=arcs):
        c = MonodromySequence.from_arcs(d, combo)
        if is_connected(c):
            yield c


def test_local_move_examples():
    c = arcs_seq(4, (1, 2), (3, 4))
    assert apply_local_move(c, LocalMove("reorder", 0)) == arcs_seq(4, (3, 4), (1, 2))
    c = arcs_seq(3, (1, 2), (2, 3))
    assert apply_local_move(c, LocalMove("recolor", 0, 1)) == arcs_seq(3, (1, 3), (2, 3))
    c = arcs_seq(4, (1, 2), (3, 4))
    assert apply_local_move(c, LocalMove("recolor", 0, 1)) == c
    with pytest.raises(IndexError):
        apply_local_move(c, LocalMove("reorder", 1))
    with pytest.raises(ValueError):
        LocalMove("recolor", 0, 2)


def test_script_text_round_trip():
    script = [LocalMove("reorder", 2), LocalMove("recolor", 1, 0), LocalMove("recolor", 0, 1)]
    text = format_script(script)
    assert text == "reorder 2\nrecolor 1 by 0\nrecolor 0 by 1\n"
    assert parse_script(text) == script
    with pytest.raises(ValueError):
        LocalMove.parse("swap 1")


def test_standard_gives_empty_script():
    for d, n in ((3, 4), (4, 8), (5, 12)):
        script, result = standardize(standard_coloring(d, n))
        assert script == [] and result == standard_coloring(d, n)


@pytest.mark.parametrize("c", [arcs_seq(3, (1, 2), (2, 3)), arcs_seq(3, (1, 3), (2, 3), (1, 2))])
def test_examples_replay(c):
    script, result = standardize(c)
    assert result == standard_coloring(3, c.n)
    assert replay(c, script) == result
    assert result in {MonodromySequence.from_arcs(3, a) for a in reachable_set(c.arcs())}


def test_errors():
    with pytest.raises(ColoringError):
        standardize(arcs_seq(4, (1, 2), (3, 4)))
    with pytest.raises(ColoringError):
        standardize(MonodromySequence.of(3, [(1, 2), (2, 3), (2, 3), (1, 2)]))


def test_local_moves_preserve_invariants(rng):
    for _ in range(300):
        d = rng.randint(3, 5)
        combo = [T(*sorted(rng.sample(range(1, d + 1), 2))) for _ in range(4)]
        c = MonodromySequence.from_arcs(d, combo)
        p = rng.randrange(3)
        m = rng.choice([LocalMove("reorder", p), LocalMove("recolor", p, p + 1), LocalMove("recolor", p + 1, p)])
        e = apply_local_move(c, m)
        assert is_connected(e) == is_connected(c)
        assert total_monodromy(e).is_identity()
        assert e.degree == c.degree and e.n == c.n


@pytest.mark.parametrize("d,arcs", [(3, 2), (3, 3), (4, 3), (4, 4)])
def test_exhaustive_small(d, arcs):
    target = standard_coloring(d, 2 * arcs)
    reach = reachable_set(target.arcs())
    for c in all_connected(d, arcs):
        script, result = standardize(c)
        assert result == target and replay(c, script) == target
        assert c.arcs() in reach
        assert len(script) <= move_bound(d, arcs)
        assert standardize(result)[0] == []


def test_random_degree_five():
    rng = random.Random(5)
    ts = [T(i, j) for i in range(1, 6) for j in range(i + 1, 6)]
    done = 0
    while done < 200:
        c = MonodromySequence.from_arcs(5, [rng.choice(ts) for _ in range(6)])
        if not is_connected(c):
            continue
        script, result = standardize(c)
        assert replay(c, script) == standard_coloring(5, 12)
        done += 1
