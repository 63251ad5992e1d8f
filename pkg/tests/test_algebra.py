import itertools

import pytest
from hypothesis import given, strategies as st

from platmover.algebra import DegreeMismatch, Permutation, Transposition, compose, conjugate, shared_symbols


def perms(d):
    return st.permutations(range(1, d + 1)).map(lambda m: Permutation(tuple(m)))


def test_compose_identity_and_involution():
    p = Permutation((2, 3, 1))
    assert compose(Permutation.identity(3), p) == p
    t = Transposition(1, 2).as_permutation(3)
    assert compose(t, t).is_identity()


def test_compose_order_three():
    r = compose(Transposition(1, 2).as_permutation(3), Transposition(2, 3).as_permutation(3))
    assert r.order() == 3
    # right factor acts first: 3 -> 2 -> 1
    assert r(3) == 1


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(3), Permutation.identity(4))


@pytest.mark.parametrize("i,j,k", list(itertools.permutations(range(1, 5), 3)))
def test_conjugate_chain_label(i, j, k):
    assert conjugate(Transposition(min(j, k), max(j, k)), Transposition(min(i, j), max(i, j))) == Transposition(min(i, k), max(i, k))


def test_conjugate_examples():
    assert conjugate(Transposition(1, 2), Transposition(3, 4)) == Transposition(1, 2)
    assert conjugate(Transposition(1, 2), Transposition(1, 2)) == Transposition(1, 2)


def test_shared_symbols():
    assert shared_symbols(Transposition(1, 2), Transposition(1, 2)) == 2
    assert shared_symbols(Transposition(1, 2), Transposition(2, 3)) == 1
    assert shared_symbols(Transposition(1, 2), Transposition(3, 4)) == 0


def test_transposition_normalized_and_text():
    t = Transposition(5, 4)
    assert (t.i, t.j) == (4, 5)
    assert str(t) == "(4 5)"
    assert Transposition.parse("(4 5)") == t
    with pytest.raises(ValueError):
        Transposition(2, 2)
    with pytest.raises(ValueError):
        Transposition.parse("(4  5)")


@given(perms(5), perms(5), perms(5))
def test_compose_associative(p, q, r):
    assert compose(p, compose(q, r)) == compose(compose(p, q), r)


@given(perms(6))
def test_inverse(p):
    assert compose(p, p.inverse()).is_identity()
    assert compose(p.inverse(), p).is_identity()


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_conjugate_is_transposition_and_shared_two_iff_equal(a, b, c, e):
    if a == b or c == e:
        return
    t, u = Transposition(a, b), Transposition(c, e)
    assert isinstance(conjugate(t, u), Transposition)
    assert (shared_symbols(t, u) == 2) == (t == u)
