"""Acceptance gate: one test per criterion, each with its runtime budget.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the summary for one PASS/FAIL line per criterion.
"""
import time
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import pytest

from binhopf import (
    BULLET, Forest, LinComb, Tensor, antipode, antipode_by_total_cuts, canonicalize,
    comb_coproduct_formula, comb_tree, coproduct, counit, enumerate_forests,
    enumerate_labelled_trees, enumerate_trees, growth, iterated_coproduct, prelie,
    prelie_exponential, pruning, star, triangle_monomials, triangle_recursive,
)
from binhopf.duality import adjointness_failures, duality_check, duality_sweep
from binhopf.hopf import clear_caches
from binhopf.linear import multiply_legs
from binhopf.prelie import associator
from binhopf.trees import leaf_labels


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        clear_caches()
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, *_):
        self.elapsed = time.perf_counter() - self.start
        if exc_type is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def tree_lc(*pairs):
    return LinComb([(Forest([canonicalize(x)]), c) for c, x in pairs])


def forest_lc(*pairs):
    return LinComb([(Forest([canonicalize(x) for x in f]), c) for c, f in pairs])


def trees_upto(n):
    return [t for k in range(1, n + 1) for t in enumerate_trees(k)]


def forests_upto(n):
    return [f for k in range(n + 1) for f in enumerate_forests(k)]


def convolve_with_antipode(f, side):
    acc = LinComb()
    for (a, b), c in coproduct(f).items():
        if side == "left":
            acc = acc + c * multiply_legs(Tensor([((x, b), v) for x, v in antipode(a).items()]))
        else:
            acc = acc + c * multiply_legs(Tensor([((a, x), v) for x, v in antipode(b).items()]))
    return acc


# -- 1 ---------------------------------------------------------------------------


def test_c01_tree_counts():
    with Budget(5):
        assert [len(enumerate_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]


def test_c01_forest_counts():
    # Stated target. The true counts for n = 1..8 are 1, 2, 3, 6, 10, 20, 37, 76
    # (multisets of binary trees); see the decisions ledger.
    with Budget(5):
        assert [len(enumerate_forests(n)) for n in range(1, 9)] == [1, 1, 2, 3, 6, 10, 20, 37]


# -- 2 ---------------------------------------------------------------------------


def test_c02_golden_terms():
    with Budget(1):
        t = canonicalize([["a", "b"], "c"])
        cop = coproduct(t)
        expected = Tensor([((x, y), 1) for x, y in [
            ("1", "((a b) c)"), ("a", "(b c)"), ("b", "(a c)"), ("c", "(a b)"),
            ("(a b)", "c"), ("a, c", "b"), ("b, c", "a"), ("((a b) c)", "1"),
        ]])
        assert cop == expected and len(cop) == 8
        assert antipode("a") == tree_lc((-1, "a"))
        assert antipode("(a b)") == tree_lc((-1, "(a b)")) + forest_lc((2, ["a", "b"]))
        assert antipode(t) == tree_lc((-1, "((a b) c)")) + forest_lc(
            (1, ["a", "(b c)"]), (1, ["b", "(a c)"]), (2, ["c", "(a b)"]), (-4, ["a", "b", "c"]))
        assert prelie(t, "(d e)") == tree_lc(
            (1, "(((a b) (d e)) c)"), (1, "((a b) ((d e) c))"), (1, "(((a (d e)) b) c)"),
            (1, "((a ((d e) b)) c)"), (1, "(((a b) c) (d e))"))


# -- 3 ---------------------------------------------------------------------------


def test_c03_coassociativity():
    with Budget(60):
        # trees_upto(8) holds 48 trees; the criterion's "45" is a miscount
        pool = trees_upto(8) + [t for n in range(1, 6) for t in enumerate_labelled_trees("abcde"[:n])]
        for t in pool:
            assert iterated_coproduct(t, 2, "left") == iterated_coproduct(t, 2, "right"), t


# -- 4 ---------------------------------------------------------------------------


def test_c04_hopf_axioms():
    with Budget(60):
        for f in forests_upto(6):
            one = LinComb.of(f)
            d = coproduct(f)
            left = LinComb([(b, c * counit(LinComb.of(a))) for (a, b), c in d.items()])
            right = LinComb([(a, c * counit(LinComb.of(b))) for (a, b), c in d.items()])
            assert left == one == right, f
            unit = LinComb.one() * counit(one)
            assert convolve_with_antipode(f, "left") == unit == convolve_with_antipode(f, "right"), f


# -- 5 ---------------------------------------------------------------------------


def test_c05_antipode_total_cuts():
    with Budget(30):
        masses = {}
        for n in range(1, 8):
            for t in enumerate_trees(n):
                s = antipode(t)
                assert s == antipode_by_total_cuts(t), t
                for f, c in s.items():
                    assert c * (-1) ** len(f) > 0, (t, f)
                assert s.abs_mass() == 3 ** (n - 1)
                masses[n] = s.abs_mass()
        assert masses[7] == 729


# -- 6 ---------------------------------------------------------------------------


def test_c06_subset_bijection():
    with Budget(10):
        for n in range(1, 7):
            labels = "abcdef"[:n]
            subsets = {frozenset(s) for r in range(n + 1) for s in combinations(labels, r)}
            for t in enumerate_labelled_trees(labels):
                d = coproduct(t)
                assert len(d) == 2 ** n
                assert all(c == 1 for _, c in d.items())
                pruned = [frozenset(x for tr in a.trees for x in leaf_labels(tr)) for (a, _), _ in d.items()]
                assert set(pruned) == subsets and len(pruned) == len(subsets)


# -- 7 ---------------------------------------------------------------------------


def test_c07_prelie():
    with Budget(120):
        ts = trees_upto(5)
        for x in ts:
            for y in ts:
                for z in ts:
                    if x.n_leaves + y.n_leaves + z.n_leaves <= 7:
                        assert associator(x, y, z) == associator(x, z, y), (x, y, z)
        c3 = comb_tree(3)
        assert prelie(comb_tree(2), BULLET) == LinComb.of(c3, 3)
        assert prelie(BULLET, comb_tree(2)) == LinComb.of(c3, 1)
        fs = forests_upto(5)
        for a in fs:
            for b in fs:
                if a.n_leaves + b.n_leaves > 5:
                    continue
                ab = star(a, b)
                for c in fs:
                    if a.n_leaves + b.n_leaves + c.n_leaves <= 5:
                        assert star(ab, c) == star(a, star(b, c)), (a, b, c)


# -- 8 ---------------------------------------------------------------------------


def test_c08_guin_oudom():
    with Budget(60):
        fs = forests_upto(6)
        for a in fs:
            for b in fs:
                if a.n_leaves + b.n_leaves <= 6:
                    assert triangle_monomials(a, b) == triangle_recursive(a, b), (a, b)


# -- 9 ---------------------------------------------------------------------------


def test_c09_duality():
    with Budget(180):
        reports = duality_sweep(5)
        bad = [str(r) for r in reports if not r.passed]
        assert not bad, bad[:3]
        r = duality_check("(* *)", "*, *, (* *)", "((((* *) *) (* *)) *)")
        assert (r.n_count, r.m_count, r.lhs, r.rhs) == (14, 7, 56, 56)


# -- 10 --------------------------------------------------------------------------


def test_c10_growth_pruning():
    with Budget(30):
        assert adjointness_failures(7, max_power=1) == []
        assert adjointness_failures(7, max_power=3) == []
        for k in range(1, 8):
            for t in enumerate_trees(k):
                x = LinComb.of(t)
                for _ in range(k - 1):
                    x = pruning(x)
                assert x == LinComb.of(BULLET, factorial(k)), t
        x = LinComb.of(BULLET)
        seen = []
        for n in range(2, 6):
            x = growth(x)
            seen.append(tuple(x[t] for t in enumerate_trees(n)))
        assert seen == [(1,), (3,), (12, 3), (60, 15, 30)]


# -- 11 --------------------------------------------------------------------------


def test_c11_exponential():
    with Budget(10):
        w = prelie_exponential(6)
        for t in trees_upto(6):
            assert w[t] == Fraction(1, t.aut_order), t
        assert len(w) == len(trees_upto(6))
        display = [w[t] for t in trees_upto(5)]
        assert display == [Fraction(x) for x in ("1", "1/2", "1/2", "1/2", "1/8", "1/2", "1/8", "1/4")]


# -- 12 --------------------------------------------------------------------------


def test_c12_comb_formula():
    with Budget(10):
        for n in range(2, 9):
            assert comb_coproduct_formula(n) == coproduct(comb_tree(n)), n


# -- 13 --------------------------------------------------------------------------


def test_c13_character_morphism():
    with Budget(10):
        # unlabelled: phi(F) = x^deg F, and the binomial coproduct splits x^n
        for f in forests_upto(6):
            n = f.n_leaves
            by_split = [0] * (n + 1)
            for (a, b), c in coproduct(f).items():
                assert a.n_leaves + b.n_leaves == n
                by_split[a.n_leaves] += c
            assert by_split == [comb(n, k) for k in range(n + 1)], f


def test_budget_helper_reports_overrun():
    with pytest.raises(AssertionError):
        with Budget(0):
            sum(range(100))
