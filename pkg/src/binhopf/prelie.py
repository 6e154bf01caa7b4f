"""Edge-insertion pre-Lie product, simultaneous grafting and the star product.

Inserting ``s`` at an edge of ``t`` splits the edge with a new vertex and hangs
``s`` from it. Every tree has a ghost edge above its root, so inserting there
gives ``(t s)``. Grafting a forest ``B`` into ``A`` sends each tree of ``B`` to
some edge of ``A``; trees sharing an edge are stacked as a ladder, listed top
to bottom. Copies of identical inserted trees are always kept distinct.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial

from binhopf._backend import kernels
from binhopf._table import TABLE
from binhopf.config import LIMITS
from binhopf.errors import BadIndex, ResourceLimit
from binhopf.linear import LinComb, Tensor, as_lincomb
from binhopf.trees import (
    BULLET, EdgeRef, Forest, Tree, as_forest, canonicalize, node, rebuild,
)

E0 = "e0"
"""Skip sentinel: the inserted tree stays a free component."""


def insert_at_edge(t, e, s) -> Tree:
    """Split edge ``e`` of ``t`` (0 is the ghost edge) and hang ``s`` from the new vertex.

    >>> str(insert_at_edge("((a b) c)", 1, "(d e)"))
    '(((a b) (d e)) c)'
    """
    t, s = canonicalize(t), canonicalize(s)
    if isinstance(e, EdgeRef):
        if e.component_index != 0:
            raise BadIndex("a tree has only component 0")
        e = e.edge_index
    return rebuild(t, e, lambda x: node(s, x))


def _tree_prelie(t: int, s: int) -> dict:
    return {(x,): c for x, c in kernels.prelie_tree(TABLE, t, s).items()}


def prelie(t, s) -> LinComb:
    """``t ◁ s``: sum of insertions of ``s`` at every edge of ``t``, ghost edge included.

    Non-tree arguments fall back to :func:`triangle`.
    """
    if isinstance(t, (Tree, str)) and isinstance(s, (Tree, str)):
        try:
            t, s = canonicalize(t), canonicalize(s)
        except ValueError:
            return triangle(t, s)
        return LinComb._wrap(_tree_prelie(t.id, s.id))
    return triangle(t, s)


# -- counting and guards ----------------------------------------------------


def _edge_total(base: tuple) -> int:
    return sum(2 * TABLE.nleaves[t] - 1 for t in base)


def count_grafts(base, inserted, allow_skip: bool = False) -> int:
    """Number of grafts of ``inserted`` into ``base`` (distinguished copies)."""
    edges = _edge_total(as_forest(base).ids)
    k = len(as_forest(inserted))

    def rising(j):
        out = 1
        for i in range(j):
            out *= edges + i
        return out

    if not allow_skip:
        return rising(k)
    return sum(comb(k, j) * rising(j) for j in range(k + 1))


def _guard(base: tuple, inserted: tuple, allow_skip: bool):
    n = count_grafts(Forest.from_ids(base), Forest.from_ids(inserted), allow_skip)
    if n > LIMITS.max_grafts:
        raise ResourceLimit(f"{n} grafts exceeds max_grafts={LIMITS.max_grafts}")


# -- explicit grafts --------------------------------------------------------


@dataclass(frozen=True)
class Graft:
    """One graft of ``inserted`` into ``base``.

    ``assignment[i]`` is the EdgeRef receiving inserted tree ``i`` (or :data:`E0`);
    ``orders`` lists, per targeted edge, its inserted indices from top to bottom.
    Component indices follow ``base.trees``.
    """

    base: Forest
    inserted: tuple[Tree, ...]
    assignment: tuple
    orders: tuple[tuple[EdgeRef, tuple[int, ...]], ...] = field(default=())

    def outcome(self) -> Forest:
        return graft_outcome(self)

    def __str__(self):
        parts = [f"({e.component_index},{e.edge_index})←[{','.join(str(self.inserted[i]) for i in o)}]"
                 for e, o in self.orders]
        skipped = [str(self.inserted[i]) for i, a in enumerate(self.assignment) if a == E0]
        if skipped:
            parts.append(f"e0←[{','.join(skipped)}]")
        return " ".join(parts) if parts else "∅"


def enumerate_grafts(base, inserted, allow_skip: bool = False) -> list[Graft]:
    """Every graft, with all linear orders on shared edges."""
    base, ins = as_forest(base), as_forest(inserted)
    _guard(base.ids, ins.ids, allow_skip)
    trees = ins.trees
    targets: list = [EdgeRef(c, e) for c, t in enumerate(base.trees) for e in range(t.n_edges + 1)]
    if allow_skip:
        targets.append(E0)
    out = []
    for assignment in product(targets, repeat=len(trees)):
        groups: dict = {}
        for i, a in enumerate(assignment):
            if a != E0:
                groups.setdefault(a, []).append(i)
        edges = sorted(groups)
        for orders in product(*(permutations(groups[e]) for e in edges)):
            out.append(Graft(base, tuple(trees), assignment, tuple(zip(edges, orders))))
    return out


def graft_outcome(g: Graft) -> Forest:
    by_comp: dict[int, dict[int, tuple[int, ...]]] = {}
    for e, order in g.orders:
        by_comp.setdefault(e.component_index, {})[e.edge_index] = order
    comps = []
    for c, t in enumerate(g.base.trees):
        plan = by_comp.get(c, {})
        counter = [0]

        def walk(v):
            me = counter[0]
            counter[0] += 1
            a = TABLE.left[v]
            x = v if a < 0 else kernels.intern_node(TABLE, walk(a), walk(TABLE.right[v]))
            for i in reversed(plan.get(me, ())):
                x = kernels.intern_node(TABLE, g.inserted[i].id, x)
            return x

        comps.append(walk(t.id))
    comps += [g.inserted[i].id for i, a in enumerate(g.assignment) if a == E0]
    return Forest.from_ids(tuple(sorted(comps)))


# -- simultaneous grafting and star -----------------------------------------


def triangle_monomials(a, b) -> LinComb:
    """``A ◁ B`` on forests: sum of outcomes of all grafts of ``B`` into ``A``."""
    return LinComb._wrap(_triangle_monomials(as_forest(a).ids, as_forest(b).ids))


def _triangle_monomials(a: tuple, b: tuple) -> dict:
    _guard(a, b, False)
    return kernels.graft_forest(TABLE, a, b, False)


def _star_monomials(a: tuple, b: tuple) -> dict:
    _guard(a, b, True)
    return kernels.graft_forest(TABLE, a, b, True)


def _bilinear(fn, a, b) -> LinComb:
    a, b = as_lincomb(a), as_lincomb(b)
    out: dict = {}
    for ka, ca in a._t.items():
        for kb, cb in b._t.items():
            for k, c in fn(ka, kb).items():
                out[k] = out.get(k, 0) + ca * cb * c
    return LinComb._wrap(out)


def triangle(a, b) -> LinComb:
    """``◁`` extended bilinearly to linear combinations of forests."""
    return _bilinear(_triangle_monomials, a, b)


def star(a, b) -> LinComb:
    """Grossman-Larson type product: grafts where inserted trees may also stay free."""
    return _bilinear(_star_monomials, a, b)


def associator(a, b, c) -> LinComb:
    return triangle(triangle(a, b), c) - triangle(a, triangle(b, c))


def lie_bracket(a, b) -> LinComb:
    return triangle(a, b) - triangle(b, a)


# -- shuffle coproduct ------------------------------------------------------


def _shuffle_ids(ids: tuple) -> dict:
    out = {((), ()): 1}
    for t in ids:
        new: dict = {}
        for (l, r), c in out.items():
            for key in ((tuple(sorted(l + (t,))), r), (l, tuple(sorted(r + (t,))))):
                new[key] = new.get(key, 0) + c
        out = new
    return out


def shuffle_coproduct(f) -> Tensor:
    """Every tree primitive: sum over index subsets I of x_I ⊗ x_rest."""
    f = as_lincomb(f)
    out: dict = {}
    for ids, c in f._t.items():
        for k, m in _shuffle_ids(ids).items():
            out[k] = out.get(k, 0) + c * m
    return Tensor._wrap(out, rank=2)


# -- recursive oracle -------------------------------------------------------


def triangle_recursive(a, b) -> LinComb:
    """``A ◁ B`` from the Guin-Oudom rules alone, without enumerating grafts.

    A ◁ 1 = A, 1 ◁ B = 0, tree ◁ tree = :func:`prelie`,
    X ◁ (B' Y) = (X ◁ B') ◁ Y - X ◁ (B' ◁ Y), and
    (A1 A') ◁ C = sum over splittings of C of (A1 ◁ C') (A' ◁ C'').
    """
    memo: dict = {}

    def lin(x: dict, y: dict) -> dict:
        out: dict = {}
        for kx, cx in x.items():
            for ky, cy in y.items():
                for k, c in rec(kx, ky).items():
                    out[k] = out.get(k, 0) + cx * cy * c
        return {k: v for k, v in out.items() if v}

    def rec(x: tuple, y: tuple) -> dict:
        key = (x, y)
        if key in memo:
            return memo[key]
        if not y:
            out = {x: 1}
        elif not x:
            out = {}
        elif len(x) == 1 and len(y) == 1:
            out = _tree_prelie(x[0], y[0])
        elif len(x) == 1:
            rest, last = y[:-1], (y[-1],)
            first = lin(rec(x, rest), {last: 1})
            second = lin({x: 1}, rec(rest, last))
            out = dict(first)
            for k, v in second.items():
                out[k] = out.get(k, 0) - v
        else:
            head, tail = x[:1], x[1:]
            out = {}
            for (c1, c2), m in _shuffle_ids(y).items():
                for k1, v1 in rec(head, c1).items():
                    for k2, v2 in rec(tail, c2).items():
                        k = tuple(sorted(k1 + k2))
                        out[k] = out.get(k, 0) + m * v1 * v2
        out = {k: v for k, v in out.items() if v}
        memo[key] = out
        return out

    a, b = as_lincomb(a), as_lincomb(b)
    return LinComb._wrap(lin(a._t, b._t))


# -- growth, pruning, exponential -------------------------------------------


def _per_component(f: LinComb, tree_map) -> LinComb:
    out: dict = {}
    for ids, c in f._t.items():
        for i, t in enumerate(ids):
            if i and ids[i - 1] == t:
                continue
            mult = ids.count(t)
            rest = ids[:i] + ids[i + 1:]
            for x, m in tree_map(t).items():
                k = tuple(sorted(rest + (x,)))
                out[k] = out.get(k, 0) + c * mult * m
    return LinComb._wrap(out)


def growth(f) -> LinComb:
    """``F ◁ •``: add one leaf in every possible way (a derivation on forests)."""
    b = BULLET.id
    return _per_component(as_lincomb(f), lambda t: kernels.prelie_tree(TABLE, t, b))


def pruning(f) -> LinComb:
    """Remove one leaf in every possible way; a lone leaf maps to 0."""
    def prune(t):
        return {x: c for x, c in kernels.prune_tree(TABLE, t).items() if x >= 0}

    return _per_component(as_lincomb(f), prune)


def prelie_exponential(max_degree: int) -> LinComb:
    """Truncation of W(•) = Σ_k (1/k!) 𝔑^(k-1)(•) to degrees 1..max_degree."""
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    if max_degree > LIMITS.max_exp_degree:
        raise ResourceLimit(f"degree {max_degree} exceeds max_exp_degree={LIMITS.max_exp_degree}")
    term = LinComb.of(BULLET)
    out = term
    for k in range(2, max_degree + 1):
        term = growth(term)
        out = out + term * Fraction(1, factorial(k))
    return out
