from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings

from binhopf import (
    TOTAL_CUT, BinaryAdmissibleCut, CutSubset, Forest, LinComb, Tensor, antipode,
    antipode_by_total_cuts, canonicalize, comb_coproduct_formula, comb_tree, coproduct,
    coproduct_tree, counit, cut_for_subset, enumerate_binary_admissible_cuts, enumerate_labelled_trees,
    enumerate_total_cuts, enumerate_trees, iterated_coproduct, leaf_character,
)
from binhopf.errors import ResourceLimit
from binhopf.hopf import binomial_coproduct, character_tensor
from binhopf.linear import multiply_legs
from binhopf.trees import leaf_labels
from strategies import forests, trees


def tensor_of(*terms):
    return Tensor([((a, b), c) for c, a, b in terms])


# -- composition oracle: CK cuts, then contract and discard novel leaves --------


def nested(t):
    return t.label if t.is_leaf else tuple(nested(c) for c in t.children)


def edges(x, path=()):
    if isinstance(x, str):
        return []
    out = []
    for i, c in enumerate(x):
        out.append(path + (i,))
        out += edges(c, path + (i,))
    return out


def subtree(x, path):
    for i in path:
        x = x[i]
    return x


def remainder(x, cut, path=()):
    """Remainder after removing cut subtrees; 'NOVEL' marks a vertex that lost all children."""
    if path in cut:
        return None
    if isinstance(x, str):
        return x
    kids = [remainder(c, cut, path + (i,)) for i, c in enumerate(x)]
    if any(k == "NOVEL" for k in kids):
        return "NOVEL"
    kept = [k for k in kids if k is not None]
    if not kept:
        return "NOVEL"
    return kept[0] if len(kept) == 1 else tuple(kept)


def ck_composition_coproduct(t):
    x = nested(t)
    es = edges(x)
    out = Counter()
    out[(Forest([t]), Forest())] += 1
    for r in range(len(es) + 1):
        for cut in combinations(es, r):
            if any(a != b and b[:len(a)] == a for a in cut for b in cut):
                continue  # two cut edges on one path
            rem = remainder(x, set(cut))
            if rem == "NOVEL":
                continue
            pruned = Forest([canonicalize(subtree(x, p)) for p in cut])
            out[(pruned, Forest([canonicalize(rem)]))] += 1
    return Tensor(out, rank=2)


def test_matches_composition_oracle_up_to_four_leaves():
    pool = [t for n in range(1, 5) for t in enumerate_trees(n)]
    pool += [t for n in range(1, 5) for t in enumerate_labelled_trees("abcd"[:n])]
    pool += [canonicalize(s) for s in ["((a a) (a b))", "((a b) (a b))", "(((a a) b) a)"]]
    for t in pool:
        assert coproduct(t) == ck_composition_coproduct(t), t


# -- goldens ------------------------------------------------------------------


def test_three_leaf_coproduct_golden():
    got = coproduct("((a b) c)")
    expected = tensor_of(
        (1, "1", "((a b) c)"), (1, "a", "(b c)"), (1, "b", "(a c)"), (1, "c", "(a b)"),
        (1, "(a b)", "c"), (1, "a, c", "b"), (1, "b, c", "a"), (1, "((a b) c)", "1"),
    )
    assert got == expected
    assert len(got) == 8


def test_small_coproducts():
    assert coproduct("a") == tensor_of((1, "1", "a"), (1, "a", "1"))
    assert coproduct_tree("(* *)") == tensor_of((1, "1", "(* *)"), (2, "*", "*"), (1, "(* *)", "1"))
    assert coproduct("*, *") == tensor_of((1, "1", "*, *"), (2, "*", "*"), (1, "*, *", "1"))
    assert coproduct(LinComb.one()) == tensor_of((1, "1", "1"))
    assert str(coproduct(comb_tree(3))) == \
        "1 1 ⨂ ((* *) *) + 3 * ⨂ (* *) + 1 (* *) ⨂ * + 2 *, * ⨂ * + 1 ((* *) *) ⨂ 1"


def test_antipode_goldens():
    assert antipode("a") == LinComb({"a": -1})
    assert antipode("(a b)") == LinComb({"(a b)": -1, "a, b": 2})
    assert antipode("((a b) c)") == LinComb({
        "((a b) c)": -1, "a, (b c)": 1, "b, (a c)": 1, "c, (a b)": 2, "a, b, c": -4,
    })
    assert antipode(LinComb.one()) == LinComb.one()


def test_counit():
    assert counit(LinComb.one()) == 1
    assert counit("(a b)") == 0
    assert counit(LinComb({"1": 3, "a": 2})) == 3


# -- properties -----------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(trees(6))
def test_coassociative(t):
    assert iterated_coproduct(t, 2, "left") == iterated_coproduct(t, 2, "right")


@settings(max_examples=40, deadline=None)
@given(forests(3, 3))
def test_multiplicative_and_graded(f):
    d = coproduct(f)
    assert d.mass() == 2 ** f.n_leaves
    for (a, b), _ in d.items():
        assert a.n_leaves + b.n_leaves == f.n_leaves
    expected = Tensor([((Forest(), Forest()), 1)])
    for t in f.trees:
        prod: dict = {}
        for (a1, b1), c1 in expected._t.items():
            for (a2, b2), c2 in coproduct(t)._t.items():
                k = (tuple(sorted(a1 + a2)), tuple(sorted(b1 + b2)))
                prod[k] = prod.get(k, 0) + c1 * c2
        expected = Tensor._wrap(prod, rank=2)
    assert d == expected


@settings(max_examples=40, deadline=None)
@given(forests(3, 4))
def test_antipode_axiom(f):
    d = coproduct(f)
    unit = LinComb.one() * counit(LinComb.of(f))
    left = multiply_legs(Tensor._wrap(_apply_left(antipode, d), rank=2))
    swapped = Tensor._wrap({(b, a): c for (a, b), c in d._t.items()}, rank=2)
    right = multiply_legs(Tensor._wrap(_apply_left(antipode, swapped), rank=2))
    assert left == unit == right


def _apply_left(op, t):
    out: dict = {}
    for (a, b), c in t._t.items():
        for k, v in op(LinComb._wrap({a: 1}))._t.items():
            out[(k, b)] = out.get((k, b), 0) + c * v
    return out


def test_iterated_coproduct_mass():
    for t in enumerate_trees(5):
        for k in (1, 2, 3):
            d = iterated_coproduct(t, k)
            assert d.rank == k + 1
            assert d.mass() == (k + 1) ** 5
            assert d == iterated_coproduct(t, k, "right")
    with pytest.raises(ResourceLimit):
        iterated_coproduct("a", 9)
    with pytest.raises(ValueError):
        iterated_coproduct("a", 0)


def test_antipode_total_cut_expansion():
    for n in range(1, 8):
        for t in enumerate_trees(n):
            s = antipode(t)
            assert s == antipode_by_total_cuts(t)
            assert s.abs_mass() == 3 ** (n - 1)
            for f, c in s.items():
                assert (c < 0) == (len(f) % 2 == 1)


def test_total_cut_witnesses_rebuild_antipode():
    for t in [canonicalize("((a b) c)"), canonicalize("((a b) (c d))"), comb_tree(5)]:
        cuts = enumerate_total_cuts(t)
        assert len(cuts) == 3 ** (t.n_leaves - 1)
        acc = LinComb()
        for cut in cuts:
            f = cut.forest()
            acc = acc + LinComb.of(f, (-1) ** len(f))
        assert acc == antipode(t)


# -- cuts and subsets -----------------------------------------------------------


def test_admissible_cut_counts():
    assert len(enumerate_binary_admissible_cuts("(a b)")) == 3
    assert len(enumerate_binary_admissible_cuts("a")) == 1
    assert len(enumerate_binary_admissible_cuts("((a b) c)")) == 7
    for t in enumerate_trees(6):
        cuts = enumerate_binary_admissible_cuts(t)
        assert len(cuts) == 2 ** 6 - 1 == len(set(cuts))
        assert all(c.is_valid() for c in cuts)


def test_cuts_reproduce_coproduct():
    for t in enumerate_labelled_trees("abcde")[:30] + enumerate_trees(6):
        terms = Counter(c.apply() for c in enumerate_binary_admissible_cuts(t))
        terms[(Forest([t]), Forest())] += 1
        assert Tensor(terms, rank=2) == coproduct(t)


def test_invalid_cuts_detected():
    t = canonicalize("((a b) c)")
    assert not BinaryAdmissibleCut(t, frozenset({1, 2})).is_valid()  # same path
    assert not BinaryAdmissibleCut(t, frozenset({2, 3})).is_valid()  # both children
    assert not BinaryAdmissibleCut(t, frozenset({0})).is_valid()


def test_cut_for_subset_examples():
    t = canonicalize("((a b) c)")
    assert cut_for_subset(t, {0, 1}).edges == {1}
    assert cut_for_subset(t, set()).edges == frozenset()
    assert cut_for_subset(t, {0, 2}).edges == {2, 4}
    assert cut_for_subset(CutSubset(t, frozenset({0, 1, 2}))) is TOTAL_CUT


def test_subset_bijection_labelled():
    for n in range(1, 6):
        for t in enumerate_labelled_trees("abcde"[:n]):
            labels = leaf_labels(t)
            seen = set()
            for r in range(n):
                for s in combinations(range(n), r):
                    cut = cut_for_subset(t, s)
                    assert cut.is_valid()
                    pruned, _ = cut.apply()
                    got = sorted(x for tr in pruned.trees for x in leaf_labels(tr))
                    assert got == sorted(labels[i] for i in s)
                    seen.add(cut.edges)
            assert len(seen) == 2 ** n - 1


# -- comb trees and the character -------------------------------------------------


def test_comb_formula():
    for n in range(2, 9):
        direct = coproduct(comb_tree(n))
        assert comb_coproduct_formula(n) == direct
        assert comb_coproduct_formula(n, combined=True) == direct


def test_leaf_character():
    assert leaf_character("((a b) c)") == (("a", 1), ("b", 1), ("c", 1))
    assert leaf_character(enumerate_trees(4)[0]) == (("*", 4),)
    assert binomial_coproduct((("x", 2),)) == {((), (("x", 2),)): 1, ((("x", 1),), (("x", 1),)): 2,
                                                ((("x", 2),), ()): 1}


@settings(max_examples=60, deadline=None)
@given(forests(3, 4))
def test_character_is_a_morphism(f):
    assert character_tensor(coproduct(f)) == binomial_coproduct(leaf_character(f))


def test_limits():
    big = comb_tree(17)
    with pytest.raises(ResourceLimit):
        enumerate_binary_admissible_cuts(big)
    with pytest.raises(ResourceLimit):
        enumerate_total_cuts(big)
