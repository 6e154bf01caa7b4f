"""The Hopf algebra of binary forests under binary-admissible cuts.

A binary-admissible cut never severs two edges on one root-to-leaf path and
never severs both children of a vertex. Cutting yields the pruned forest (left
leg) and the remainder contracted back to a full binary tree (right leg). The
terms of the coproduct of a tree are in bijection with subsets of its leaves,
which is how :func:`coproduct_tree` computes them.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterable

from binhopf._backend import kernels
from binhopf._table import TABLE
from binhopf.config import LIMITS
from binhopf.errors import BadIndex, ResourceLimit
from binhopf.linear import LinComb, Tensor, apply_leg, as_lincomb
from binhopf.trees import (
    BULLET, Forest, Tree, as_forest, canonicalize, edge_parents, edge_subtrees, node,
)

_coproduct_memo: dict = {}
_forest_memo: dict = {}
_antipode_memo: dict = {}
_total_cut_memo: dict = {}


def clear_caches():
    for memo in (_coproduct_memo, _forest_memo, _antipode_memo, _total_cut_memo):
        memo.clear()


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def tree_terms(t: int) -> dict:
    """Raw coproduct of tree id ``t``: ``{(pruned ids, remainder id or -1): count}``."""
    return kernels.coproduct_tree(TABLE, t, _coproduct_memo)


def forest_terms(ids: tuple) -> dict:
    """Raw coproduct of a forest: ``{(pruned ids, remainder ids): count}``."""
    out = _forest_memo.get(ids)
    if out is not None:
        return out
    out = {((), ()): 1}
    for t in ids:
        new: dict = {}
        for (pt, rt), ct in tree_terms(t).items():
            rt = () if rt < 0 else (rt,)
            for (p, r), c in out.items():
                key = (_merge(p, pt), _merge(r, rt))
                new[key] = new.get(key, 0) + c * ct
        out = new
    _forest_memo[ids] = out
    return out


def coproduct_tree(t) -> Tensor:
    """Coproduct of a single tree; pruned forest on the left, remainder on the right.

    >>> print(coproduct_tree(canonicalize("(* *)")))
    1 1 ⨂ (* *) + 2 * ⨂ * + 1 (* *) ⨂ 1
    """
    t = canonicalize(t)
    raw = {(p, () if r < 0 else (r,)): c for (p, r), c in tree_terms(t.id).items()}
    return Tensor._wrap(raw, rank=2)


def coproduct(f) -> Tensor:
    """Coproduct extended multiplicatively to forests and linearly to combinations."""
    f = as_lincomb(f)
    out: dict = {}
    for ids, c in f._t.items():
        for k, m in forest_terms(ids).items():
            out[k] = out.get(k, 0) + c * m
    return Tensor._wrap(out, rank=2)


def counit(f):
    """Coefficient of the empty forest."""
    return as_lincomb(f)._t.get((), 0)


def iterated_coproduct(f, k: int, nesting: str = "left") -> Tensor:
    """The k-th iterated coproduct, a tensor with ``k + 1`` legs.

    ``nesting="left"`` applies the coproduct repeatedly to the first leg,
    ``"right"`` to the last; coassociativity makes them agree.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > LIMITS.max_iterated:
        raise ResourceLimit(f"k={k} exceeds max_iterated={LIMITS.max_iterated}")
    if nesting not in ("left", "right"):
        raise ValueError("nesting must be 'left' or 'right'")
    t = coproduct(f)
    for _ in range(k - 1):
        t = apply_leg(coproduct, t, 0 if nesting == "left" else t.rank - 1)
    return t


# -- antipode ---------------------------------------------------------------


def _antipode_tree(t: int) -> dict:
    out = _antipode_memo.get(t)
    if out is not None:
        return out
    out = {(t,): -1}
    for (p, r), c in tree_terms(t).items():
        if not p or r < 0:
            continue
        for f, cf in _antipode_forest(p).items():
            key = _merge(f, (r,))
            out[key] = out.get(key, 0) - c * cf
    out = {k: v for k, v in out.items() if v}
    _antipode_memo[t] = out
    return out


def _antipode_forest(ids: tuple) -> dict:
    out = {(): 1}
    for t in ids:
        st = _antipode_tree(t)
        new: dict = {}
        for f, c in out.items():
            for g, d in st.items():
                key = _merge(f, g)
                new[key] = new.get(key, 0) + c * d
        out = new
    return out


def antipode(f) -> LinComb:
    """Antipode by the recursion S(T) = -T - sum S(pruned) remainder over reduced terms.

    Multiplicative on forests, S(1) = 1.
    """
    f = as_lincomb(f)
    out: dict = {}
    for ids, c in f._t.items():
        for k, v in _antipode_forest(ids).items():
            out[k] = out.get(k, 0) + c * v
    return LinComb._wrap(out)


def antipode_by_total_cuts(t) -> LinComb:
    """Antipode of a tree as a signed sum over its 3^(n-1) binary-total cuts."""
    t = canonicalize(t)
    out: dict = {}
    for (root, severed), c in kernels.total_cuts(TABLE, t.id, _total_cut_memo).items():
        forest = tuple(sorted(severed + (root,)))
        sign = -1 if len(forest) % 2 else 1
        out[forest] = out.get(forest, 0) + sign * c
    return LinComb._wrap(out)


# -- cut witnesses ----------------------------------------------------------


@dataclass(frozen=True)
class BinaryAdmissibleCut:
    """A set of real edges (indices as in :class:`~binhopf.trees.EdgeRef`) of ``tree``."""

    tree: Tree
    edges: frozenset[int]

    def is_valid(self) -> bool:
        parents = edge_parents(self.tree)
        if 0 in self.edges or any(not 0 < e < len(parents) for e in self.edges):
            return False
        for e in self.edges:
            up = parents[e]
            while up is not None:
                if up in self.edges:
                    return False
                up = parents[up]
        siblings = Counter(parents[e] for e in self.edges)
        return all(v < 2 for v in siblings.values())

    def apply(self) -> tuple[Forest, Forest]:
        """(pruned forest, remainder) of this cut."""
        return _apply_edge_cut(self.tree, self.edges)


class _TotalCut:
    """Marker for the total cut, whose term is ``T ⊗ 1``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOTAL_CUT"


TOTAL_CUT = _TotalCut()


def _apply_edge_cut(t: Tree, edges) -> tuple[Forest, Forest]:
    pruned = []
    counter = [0]

    def walk(v):
        me = counter[0]
        counter[0] += 1
        if me in edges:
            pruned.append(v)
            counter[0] += 2 * TABLE.nleaves[v] - 2
            return -1
        a = TABLE.left[v]
        if a < 0:
            return v
        ra, rb = walk(a), walk(TABLE.right[v])
        if ra < 0:
            return rb
        if rb < 0:
            return ra
        return kernels.intern_node(TABLE, ra, rb)

    root = walk(t.id)
    rem = () if root < 0 else (root,)
    return Forest.from_ids(tuple(sorted(pruned))), Forest.from_ids(rem)


@dataclass(frozen=True)
class CutSubset:
    """A set of leaf positions (left to right in canonical order) of ``tree``."""

    tree: Tree
    leaves: frozenset[int]


def cut_for_subset(t, leaves: Iterable[int] = ()):
    """The unique binary-admissible cut pruning exactly the given leaf positions.

    Accepts a :class:`CutSubset` or a tree plus positions. Returns
    :data:`TOTAL_CUT` when every leaf is selected.
    """
    if isinstance(t, CutSubset):
        t, leaves = t.tree, t.leaves
    t = canonicalize(t)
    chosen = set(leaves)
    n = t.n_leaves
    if any(not 0 <= i < n for i in chosen):
        raise BadIndex(f"leaf positions out of range for {n} leaves")
    edges: set[int] = set()
    state = {"edge": 0, "leaf": 0}

    def walk(v):
        # returns (edge index above v, every leaf below v chosen)
        me = state["edge"]
        state["edge"] += 1
        a = TABLE.left[v]
        if a < 0:
            pos = state["leaf"]
            state["leaf"] += 1
            return me, pos in chosen
        ea, fa = walk(a)
        eb, fb = walk(TABLE.right[v])
        if fa and fb:
            return me, True
        if fa:
            edges.add(ea)
        if fb:
            edges.add(eb)
        return me, False

    _, full = walk(t.id)
    if full:
        return TOTAL_CUT
    return BinaryAdmissibleCut(t, frozenset(edges))


def enumerate_binary_admissible_cuts(t) -> list[BinaryAdmissibleCut]:
    """All binary-admissible cuts (the empty cut included; the total cut excluded)."""
    t = canonicalize(t)
    if t.n_leaves > LIMITS.max_cut_leaves:
        raise ResourceLimit(f"{t.n_leaves} leaves exceeds max_cut_leaves={LIMITS.max_cut_leaves}")
    counter = [0]

    def walk(v) -> tuple[int, list[frozenset]]:
        me = counter[0]
        counter[0] += 1
        a = TABLE.left[v]
        if a < 0:
            return me, [frozenset()]
        ea, inner_a = walk(a)
        eb, inner_b = walk(TABLE.right[v])
        out = [x | y for x in inner_a for y in inner_b]
        out += [y | {ea} for y in inner_b]
        out += [x | {eb} for x in inner_a]
        return me, out

    _, cuts = walk(t.id)
    return sorted((BinaryAdmissibleCut(t, c) for c in cuts), key=lambda c: sorted(c.edges))


@dataclass(frozen=True)
class BinaryTotalCut:
    """One choice per internal node (preorder): ``"keep"``, ``"left"`` or ``"right"``.

    ``"left"`` severs the edge to the first canonical child.
    """

    tree: Tree
    choices: tuple[str, ...]

    @property
    def edges(self) -> frozenset[int]:
        subs = edge_subtrees(self.tree)
        parents = edge_parents(self.tree)
        internal = [i for i, s in enumerate(subs) if not s.is_leaf]
        children = {i: [j for j, p in enumerate(parents) if p == i] for i in internal}
        cut = set()
        for i, choice in zip(internal, self.choices):
            if choice == "left":
                cut.add(children[i][0])
            elif choice == "right":
                cut.add(children[i][1])
        return frozenset(cut)

    def forest(self) -> Forest:
        """Components after severing, each contracted to a full binary tree."""
        comps = []
        counter = [0]
        choices = iter(self.choices)

        def walk(v):
            counter[0] += 1
            a = TABLE.left[v]
            if a < 0:
                return v
            choice = next(choices)
            ra = walk(a)
            rb = walk(TABLE.right[v])
            if choice == "left":
                comps.append(ra)
                return rb
            if choice == "right":
                comps.append(rb)
                return ra
            return kernels.intern_node(TABLE, ra, rb)

        comps.append(walk(self.tree.id))
        return Forest.from_ids(tuple(sorted(comps)))


def enumerate_total_cuts(t) -> list[BinaryTotalCut]:
    t = canonicalize(t)
    if t.n_leaves > LIMITS.max_cut_leaves:
        raise ResourceLimit(f"{t.n_leaves} leaves exceeds max_cut_leaves={LIMITS.max_cut_leaves}")
    return [BinaryTotalCut(t, c) for c in product(("keep", "left", "right"), repeat=t.n_internal)]


# -- comb trees -------------------------------------------------------------


def comb_tree(n: int) -> Tree:
    """The unlabelled comb C_n: C_1 = *, C_n = (C_{n-1} *)."""
    if n < 1:
        raise ValueError("n must be positive")
    t = BULLET
    for _ in range(n - 1):
        t = node(t, BULLET)
    return t


def _comb_forest(k: int, bullets: int) -> Forest:
    trees = [BULLET] * bullets
    if k:
        trees.append(comb_tree(k))
    return Forest(trees)


def comb_coproduct_formula(n: int, combined: bool = False) -> Tensor:
    """Closed-form coproduct of C_n as binomial sums over the basis C_k C_1^i.

    ``combined=True`` evaluates the variant where the two bullet-only sums are
    merged by Pascal's rule. Valid for n >= 2.
    """
    if n < 2:
        raise ValueError("formula holds for n >= 2")
    terms: Counter = Counter()
    f = _comb_forest

    def add(c, left, right):
        terms[(left, right)] += c

    if not combined:
        for i in range(n - 1):
            add(comb(n - 2, i), f(0, i), f(n - i, 0))
        for j in range(n - 1):
            add(2 * comb(n - 2, j), f(0, j + 1), f(n - j - 1, 0))
    else:
        for i in range(1, n - 1):
            add(comb(n - 2, i - 1) + comb(n - 1, i), f(0, i), f(n - i, 0))
        add(2, f(0, n - 1), f(1, 0))
        add(1, f(0, 0), f(n, 0))
    for k in range(2, n):
        for ell in range(n - k):
            add(comb(n - k - 1, ell), f(k, ell), f(n - k - ell, 0))
    add(1, f(n, 0), f(0, 0))
    return Tensor(terms, rank=2)


# -- leaf character ---------------------------------------------------------

Monomial = tuple  # sorted ((label, exponent), ...)


def leaf_character(f) -> Monomial:
    """Monomial prod X_label^(number of leaves with that label)."""
    counts: Counter = Counter()
    for t in as_forest(f).ids:
        counts.update(_labels_of(t))
    return tuple(sorted(counts.items()))


def _labels_of(t: int) -> list[str]:
    a = TABLE.left[t]
    if a < 0:
        return [TABLE.label[t]]
    return _labels_of(a) + _labels_of(TABLE.right[t])


def character_tensor(t: Tensor) -> dict:
    """(phi ⊗ phi) applied to a rank-2 tensor: ``{(mono, mono): coef}``."""
    out: dict = {}
    for (a, b), c in t._t.items():
        key = (leaf_character(Forest.from_ids(a)), leaf_character(Forest.from_ids(b)))
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def binomial_coproduct(mono: Monomial) -> dict:
    """Coproduct in k[X_1..X_m] with every X_i primitive."""
    out = {((), ()): 1}
    for label, e in mono:
        new: dict = {}
        for (l, r), c in out.items():
            for k in range(e + 1):
                left = l + ((label, k),) if k else l
                right = r + ((label, e - k),) if e - k else r
                new[(left, right)] = new.get((left, right), 0) + c * comb(e, k)
        out = new
    return out
