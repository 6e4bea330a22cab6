from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from currentweyl.exactla import (DEFAULT_PRIMES, Echelon, RankProvenance, ReductionError,
                                 SparseMatrix, crosscheck_rank, nullity, rank, reduce_mod,
                                 to_scalar)


def dense_rank(rows):
    """Textbook Gaussian elimination over Fractions, independent of the sparse code."""
    m = [[Fraction(v) for v in r] for r in rows]
    rk, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rk < len(m) and col < ncols:
        piv = next((i for i in range(rk, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][col] != 0:
                f = m[i][col] / m[rk][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
        col += 1
    return rk


small_matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_zero_and_identity():
    assert rank(SparseMatrix(3, 3)) == 0
    assert rank(SparseMatrix.identity(4)) == 4
    assert crosscheck_rank(SparseMatrix.identity(3)) == 3
    assert crosscheck_rank(SparseMatrix(0, 0)) == 0


def test_dependent_rows():
    m = SparseMatrix.from_dense([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    assert rank(m, DEFAULT_PRIMES[0]) == 1
    assert nullity(m) == 2


def test_entries_are_normalized():
    m = SparseMatrix(2, 2, {(0, 0): Fraction(4, 2), (1, 1): 0})
    assert m.entries == {(0, 0): 2}
    assert to_scalar(Fraction(6, -4)) == Fraction(-3, 2)
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_reduction_error_on_denominator():
    p = DEFAULT_PRIMES[0]
    with pytest.raises(ReductionError):
        reduce_mod(Fraction(1, p), p)
    with pytest.raises(ReductionError):
        rank(SparseMatrix(1, 1, {(0, 0): Fraction(1, p)}), p)


def test_crosscheck_escalates_when_prime_kills_entry():
    p1, p2 = DEFAULT_PRIMES
    # [[p1]] has rank 0 mod p1 and rank 1 mod p2 and over Q
    m = SparseMatrix(1, 1, {(0, 0): p1})
    prov = RankProvenance((p1, p2))
    assert rank(m, p1) == 0
    assert crosscheck_rank(m, p1, p2, prov) == 1
    assert prov.escalated and prov.escalations == 1


def test_crosscheck_escalates_on_reduction_error():
    p1, p2 = DEFAULT_PRIMES
    prov = RankProvenance((p1, p2))
    m = SparseMatrix(2, 2, {(0, 0): Fraction(1, p1), (1, 1): 1})
    assert crosscheck_rank(m, p1, p2, prov) == 2
    assert prov.escalated


def test_crosscheck_rejects_equal_primes():
    with pytest.raises(ValueError):
        crosscheck_rank(SparseMatrix.identity(2), 7, 7)


def test_echelon_add_reports_growth():
    e = Echelon()
    assert e.add({0: 1, 1: 1})
    assert not e.add({0: 2, 1: 2})
    assert e.add({1: Fraction(1, 3)})
    assert e.rank == 2


@given(small_matrices)
def test_rank_matches_dense_oracle(rows):
    assert rank(SparseMatrix.from_dense(rows)) == dense_rank(rows)


@given(small_matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_permutation(rows, rnd):
    base = rank(SparseMatrix.from_dense(rows))
    rows = [list(r) for r in rows]
    rnd.shuffle(rows)
    perm = list(range(len(rows[0])))
    rnd.shuffle(perm)
    permuted = [[r[j] for j in perm] for r in rows]
    assert rank(SparseMatrix.from_dense(permuted)) == base


@given(small_matrices, st.data())
def test_rank_invariant_under_row_scaling(rows, data):
    base = rank(SparseMatrix.from_dense(rows))
    i = data.draw(st.integers(0, len(rows) - 1))
    c = data.draw(st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool))
    scaled = [list(r) for r in rows]
    scaled[i] = [c * v for v in scaled[i]]
    assert rank(SparseMatrix.from_dense(scaled)) == base


@given(small_matrices, st.sampled_from([2, 3, 5, 7]))
def test_prime_rank_is_lower_bound(rows, p):
    m = SparseMatrix.from_dense(rows)
    assert rank(m, p) <= rank(m)


@given(st.integers(1, 20).flatmap(
    lambda r: st.integers(1, 20).flatmap(
        lambda c: st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c),
                           min_size=r, max_size=r))))
def test_large_prime_rank_equals_rational_rank(rows):
    m = SparseMatrix.from_dense(rows)
    assert rank(m, 1000003) == rank(m) == crosscheck_rank(m)
