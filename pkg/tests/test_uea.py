import itertools
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from currentweyl.uea import (anr_check, enumerate_servings, make_word, martini_check,
                             martini_word, normal_order_apply)


def bell_partial(n, m):
    """Set partitions of an n-set into at most m blocks, by the Stirling recurrence."""
    S = [[0] * (n + 1) for _ in range(n + 1)]
    S[0][0] = 1
    for i in range(1, n + 1):
        for k in range(1, i + 1):
            S[i][k] = k * S[i - 1][k] + S[i - 1][k - 1]
    return sum(S[n][k] for k in range(min(m, n) + 1))


def verma_scalar(n, m):
    """e^n f^{n+m} v in the sl_2 Verma module of highest weight 0: e f^k v = k(1-k) f^{k-1} v."""
    return prod((n + m - j) * (1 - (n + m - j)) for j in range(n))


def test_rewriting_examples():
    e1 = ("e", (1,))
    f = ("f", ())
    assert normal_order_apply([e1, f, f]) == {((1,),): -2}
    assert normal_order_apply([e1, f]) == {}
    assert normal_order_apply([f, f, f]) == {((), (), ()): 1}
    assert normal_order_apply([]) == {(): 1}
    assert normal_order_apply([("h", (1,)), f]) == {((1,),): -2}
    with pytest.raises(ValueError):
        make_word([("x", ())])


def test_servings():
    assert [s.glasses for s in enumerate_servings(1, 2)] == [((1, 2),)]
    assert [s.glasses for s in enumerate_servings(2, 2)] == [((), (1, 2)), ((1,), (2,))]
    assert [s.glasses for s in enumerate_servings(0, 0)] == [()]
    assert enumerate_servings(0, 2) == []
    for n in range(6):
        for m in range(5):
            assert len(enumerate_servings(m, n)) == bell_partial(n, m)


def test_martini_examples():
    rep = martini_check(1, 1)
    assert rep.passed and list(rep.table.values()) == [-2]
    for m in range(4):
        rep = martini_check(m, 0)
        assert rep.passed and list(rep.table.values()) == [1]
    rep = martini_check(1, 2)
    assert rep.passed and len(rep.table) == 1


@pytest.mark.parametrize("n,m", [(n, m) for n in range(5) for m in range(4) if n + m <= 6])
def test_martini_sums_to_verma_scalar(n, m):
    # sending every P_i to 1 maps the computation into the Verma module M(0)
    rep = martini_check(m, n)
    assert sum(rep.table.values()) == verma_scalar(n, m)


def test_martini_without_glasses():
    rep = martini_check(0, 2)
    assert rep.table == {} and rep.passed


def test_anr():
    assert anr_check(1).coefficient == -2
    rep = anr_check(2)
    assert rep.passed and list(rep.support) == [((1, 2),)]
    rep = anr_check(3)
    assert rep.passed and rep.coefficient < 0


def test_relabeling_symmetry():
    for n, m in [(2, 1), (3, 1), (3, 2), (2, 2)]:
        base = martini_check(m, n).table
        table = {s.f_product(): c for s, c in base.items()}
        for sigma in itertools.permutations(range(1, n + 1)):
            relabel = dict(zip(range(1, n + 1), sigma))
            for s, c in base.items():
                moved = tuple(sorted(tuple(sorted(relabel[i] for i in g)) for g in s.glasses))
                assert table[moved] == c


words = st.lists(st.tuples(st.sampled_from("ehf"), st.lists(st.integers(1, 3), max_size=2)),
                 max_size=6)


@given(words, st.integers(0, 2 ** 32))
def test_rewriting_is_confluent(word, seed):
    assert normal_order_apply(word, "random", seed) == normal_order_apply(word)


@given(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2 ** 32))
def test_martini_confluent(n, m, seed):
    assert normal_order_apply(martini_word(n, m), "random", seed) == \
        normal_order_apply(martini_word(n, m))
