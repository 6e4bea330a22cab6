"""Acceptance criteria 1-11; each test records one PASS/FAIL line for the terminal summary.

All comparisons are exact (integers or rationals).  Runtime budgets are asserted.
Set CURRENTWEYL_SKIP_HEAVY=1 to skip the n=3 case of the conjecture report.
"""
import functools
import itertools
import os
import time
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from currentweyl.coinvariants import RankConfig, coinvariant_dims
from currentweyl.combinat import (catalan, compositions, enumerate_parking_functions,
                                  higher_catalan, hoggatt_conjecture_dim, narayana, partitions,
                                  q_factorial, raney_weight_census)
from currentweyl.exactla import SparseMatrix, rank
from currentweyl.polyring import (Poly, permute_blocks, polarized_power_sum, reynolds,
                                  young_subgroup)
from currentweyl.symfunc import SymFuncExpr, kostka, parking_weight_character, tensor_sign
from currentweyl.uea import enumerate_servings, martini_check, normal_order_apply
from currentweyl.weylmod import (origin_weyl_character, points_weyl_character,
                                 truncation_stability_check, verify_tensor_factorization)

TWO_PRIME = RankConfig()
MIN_PROPERTY_CASES = 100


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_01_d1_closed_forms(acceptance):
    def run():
        bad = []
        for n in range(6):
            for r in range(1, 4):
                ch = origin_weyl_character(n, 1, r)
                expect = {c: factorial(n) // prod(factorial(x) for x in c)
                          for c in compositions(n, r + 1)}
                if ch.entries != expect or ch.total != (r + 1) ** n:
                    bad.append((n, r))
        return bad
    bad, secs = _timed(run)
    ok = not bad and secs < 30
    acceptance(1, _verdict(ok), f"d=1 totals (r+1)^n and multinomial weights, n<=5 r<=3 "
               f"({secs:.1f}s, budget 30s, failures {bad})")
    assert not bad
    assert secs < 30


def test_criterion_02_catalan_narayana(acceptance):
    def run():
        bad = []
        for n in range(5):
            ch = origin_weyl_character(n, 2, 1, TWO_PRIME)
            if ch.total != factorial(2 * n + 2) // (factorial(n + 1) * factorial(n + 2)):
                bad.append((n, "total"))
            if [ch[(n - i, i)] for i in range(n + 1)] != [narayana(n, i) for i in range(n + 1)]:
                bad.append((n, "weights"))
        return bad
    bad, secs = _timed(run)
    acceptance(2, _verdict(not bad and secs < 600),
               f"d=2 sl2 totals Catalan, weights Narayana, n<=4 ({secs:.1f}s, budget 600s, "
               f"failures {bad})")
    assert not bad
    assert secs < 600


def test_criterion_03_higher_catalan(acceptance):
    r = 2

    def run():
        return [n for n in range(4)
                if origin_weyl_character(n, 2, r, TWO_PRIME).total != factorial((r + 1) * (n + 1))
                // (factorial(n + 1) * factorial(r * (n + 1) + 1))]
    bad, secs = _timed(run)
    acceptance(3, _verdict(not bad and secs < 600),
               f"d=2 sl3 totals higher Catalan 1,3,12,55, n<=3 ({secs:.1f}s, failures {bad})")
    assert not bad
    assert secs < 600


def test_criterion_04_three_way(acceptance):
    cases = [(n, 1) for n in range(5)] + [(n, 2) for n in range(4)]
    bad = []
    for n, r in cases:
        a = origin_weyl_character(n, 2, r).entries
        b = raney_weight_census(n, r)
        c = parking_weight_character(n, r)
        if not a == b == c:
            bad.append((n, r))
    acceptance(4, _verdict(not bad),
               f"coinvariant = Raney census = Frobenius chain, {len(cases)} (n, r) cases "
               f"(failures {bad})")
    assert not bad


def test_criterion_05_chevalley(acceptance):
    totals = [coinvariant_dims(n, 1).total == factorial(n) for n in range(1, 7)]
    graded = [coinvariant_dims(n, 1).by_degree() == q_factorial(n) for n in range(1, 6)]
    ok = all(totals) and all(graded)
    acceptance(5, _verdict(ok), "d=1 quotient total n! (n<=6), graded dims [n]_q! (n<=5)")
    assert ok


def test_criterion_06_parking_count(acceptance):
    rows = [(n, coinvariant_dims(n, 2).total, len(enumerate_parking_functions(n)), (n + 1) ** (n - 1))
            for n in range(1, 5)]
    ok = all(a == b == c for _, a, b, c in rows)
    acceptance(6, _verdict(ok), "d=2 quotient total = |PF_n| = (n+1)^(n-1), n<=4: "
               + ", ".join(str(a) for _, a, _, _ in rows))
    assert ok


def _criterion_7_cases():
    for r in (1, 2):
        for n in range(1, 5):
            for ms in itertools.combinations_with_replacement([0, 1, 2], n):
                yield r, ms


def test_criterion_07_tensor_factorization(acceptance):
    def run():
        bad = []
        for r, ms in _criterion_7_cases():
            rep = verify_tensor_factorization(ms, r)
            if not (rep.passed and rep.total_factorizes):
                bad.append((r, ms))
        # the power-sum route never uses the idempotent block structure
        for r, ms in _criterion_7_cases():
            if len(ms) <= 3:
                rep = verify_tensor_factorization(ms, r, route="power-sum-monomial")
                if not rep.passed:
                    bad.append((r, ms, "power-sum"))
        return bad
    bad, secs = _timed(run)
    n_cases = sum(1 for _ in _criterion_7_cases())
    acceptance(7, _verdict(not bad and secs < 300),
               f"characters factorize over distinct points, {n_cases} multisets from {{0,1,2}}, "
               f"n<=4, r<=2, independent route for n<=3 ({secs:.1f}s, failures {bad})")
    assert not bad
    assert secs < 300


def test_criterion_08_truncation(acceptance):
    bad = [(r, ms) for r, ms in _criterion_7_cases() if not truncation_stability_check(ms, r)]
    acceptance(8, _verdict(not bad), f"characters stable from N=n to N=n+1 on every "
               f"criterion-7 case (failures {bad})")
    assert not bad


def test_criterion_09_martini(acceptance):
    def run():
        bad = []
        for n in range(7):
            for m in range(7 - n):
                rep = martini_check(m, n)
                if not rep.passed:
                    bad.append((n, m))
                if set(rep.table) != set(enumerate_servings(m, n)):
                    bad.append((n, m, "servings"))
        return bad
    bad, secs = _timed(run)
    acceptance(9, _verdict(not bad and secs < 60),
               f"support = servings, integral, sign (-1)^n for m>0, n+m<=6 ({secs:.1f}s, "
               f"failures {bad})")
    assert not bad
    assert secs < 60


def test_criterion_10_conjecture_report(acceptance):
    ns = [2] if os.environ.get("CURRENTWEYL_SKIP_HEAVY") else [2, 3]
    parts = []
    start = time.perf_counter()
    for n in ns:
        ch = origin_weyl_character(n, 3, 1)
        got = [ch[(n - i, i)] for i in range(n + 1)]
        want = [hoggatt_conjecture_dim(n, i, 3) for i in range(n + 1)]
        parts.append(f"n={n} computed {got} formula {want} "
                     f"{'match' if got == want else 'mismatch'}")
    secs = time.perf_counter() - start
    skipped = "" if len(ns) == 2 else " (n=3 skipped)"
    # an open conjecture: reported, never asserted
    acceptance(10, "REPORT", f"d=3 sl2 weight dims vs conjectured formula: {'; '.join(parts)}"
               f"{skipped} ({secs:.1f}s)")


# -- criterion 11: property suites --------------------------------------------

def _counted(fn):
    calls = []

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        calls.append(1)
        return fn(*args, **kwargs)
    wrapper.calls = calls
    return wrapper


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                           min_size=r, max_size=r)))
polys3 = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 6),
                         st.fractions(min_value=-3, max_value=3, max_denominator=4),
                         min_size=1, max_size=5).map(lambda t: Poly(t, 3, 2))
polys4 = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 4),
                         st.integers(-5, 5), min_size=1, max_size=5).map(lambda t: Poly(t, 4, 1))
sym_exprs = st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.sampled_from("hesm"),
    st.dictionaries(st.sampled_from(list(partitions(n))),
                    st.fractions(min_value=-4, max_value=4, max_denominator=3), max_size=4)))
partition_pairs = st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.sampled_from(list(partitions(n))), st.sampled_from(list(partitions(n)))))
words = st.lists(st.tuples(st.sampled_from("ehf"), st.lists(st.integers(1, 3), max_size=2)),
                 min_size=1, max_size=7)


@_counted
def _rank_invariance(rows, rnd, c):
    base = rank(SparseMatrix.from_dense(rows))
    rows = [list(r) for r in rows]
    rnd.shuffle(rows)
    perm = list(range(len(rows[0])))
    rnd.shuffle(perm)
    rows = [[r[j] for j in perm] for r in rows]
    rows[0] = [c * v for v in rows[0]]
    assert rank(SparseMatrix.from_dense(rows)) == base


@_counted
def _power_sum_invariance(alpha, sigma, p):
    ps = polarized_power_sum(alpha, 3)
    assert permute_blocks(sigma, ps) == ps
    assert permute_blocks(sigma, ps * p) == ps * permute_blocks(sigma, p)


@_counted
def _reynolds_idempotent(p, comp):
    q = reynolds(comp, p)
    assert reynolds(comp, q) == q
    assert all(permute_blocks(s, q) == q for s in young_subgroup(comp))


@_counted
def _omega_involution(data):
    x = SymFuncExpr(*data)
    assert tensor_sign(tensor_sign(x)) == x


@_counted
def _kostka_dominance(pair):
    lam, mu = pair
    assert (kostka(lam, mu) == 0) != lam.dominates(mu)


@_counted
def _confluence(word, seed):
    assert normal_order_apply(word, "random", seed) == normal_order_apply(word)


PROPERTIES = {
    "rank invariance": (_rank_invariance,
                        (matrices, st.randoms(use_true_random=False),
                         st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool))),
    "power-sum invariance": (_power_sum_invariance,
                             (st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda a: sum(a)),
                              st.permutations(range(3)), polys3)),
    "Reynolds idempotence": (_reynolds_idempotent,
                             (polys4, st.sampled_from([(4,), (2, 2), (1, 3), (2, 1, 1), (0, 3, 1)]))),
    "omega involution": (_omega_involution, (sym_exprs,)),
    "Kostka dominance": (_kostka_dominance, (partition_pairs,)),
    "rewriting confluence": (_confluence, (words, st.integers(0, 2 ** 32))),
}


def test_criterion_11_property_suites(acceptance):
    counts, failures = {}, []
    for name, (fn, strategies) in PROPERTIES.items():
        before = len(fn.calls)
        prop = settings(max_examples=MIN_PROPERTY_CASES, deadline=None, database=None)(
            given(*strategies)(fn))
        try:
            prop()
        except Exception as exc:  # noqa: BLE001 - reported, then re-raised below
            failures.append(f"{name}: {type(exc).__name__}")
        counts[name] = len(fn.calls) - before
    short = [k for k, v in counts.items() if v < MIN_PROPERTY_CASES]
    ok = not failures and not short
    acceptance(11, _verdict(ok), "property suites, cases run: "
               + ", ".join(f"{k} {v}" for k, v in counts.items())
               + (f"; failures {failures}" if failures else ""))
    assert not failures
    assert not short, f"fewer than {MIN_PROPERTY_CASES} cases: {short}"
