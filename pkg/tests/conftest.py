import random

import pytest
from hypothesis import settings

from platmover.braid import BraidWord
from platmover.coloring import MonodromySequence
from platmover.algebra import Transposition

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple((rng.randrange(n - 1), rng.choice((1, -1))) for _ in range(length)))


def random_coloring(rng: random.Random, d: int, n: int) -> MonodromySequence:
    cols = []
    for _ in range(n):
        i, j = rng.sample(range(1, d + 1), 2)
        cols.append(Transposition(min(i, j), max(i, j)))
    return MonodromySequence(d, tuple(cols))


def random_liftable(rng: random.Random, gens, n: int, length: int) -> BraidWord:
    w = BraidWord.identity(n)
    for _ in range(length):
        g = rng.choice(gens).word
        w = w * (g if rng.random() < 0.5 else g.inverse())
    return w


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
