"""Canonical nonplanar rooted full binary trees and forests of them.

Trees are hash-consed in :data:`binhopf._table.TABLE`, so isomorphic trees are
the same object and compare in O(1). Children are kept in canonical order:
the child with the lexicographically smaller encoding comes first, where

    enc(leaf l) = "L:" + l
    enc(node)   = "(" + enc(a) + "," + enc(b) + ")"

Unlabelled trees are trees whose leaves all carry the label ``"*"``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from binhopf._backend import kernels
from binhopf._table import TABLE
from binhopf.config import LIMITS
from binhopf.errors import BadIndex, BadLabel, MalformedTree, NonBinaryInput, ResourceLimit

UNLABELLED = "*"
_LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")

_objects: list[Tree | None] = []


def validate_label(label) -> str:
    if not isinstance(label, str) or not (label == UNLABELLED or _LABEL_RE.match(label)):
        raise BadLabel(f"invalid leaf label {label!r}")
    return label


class Tree:
    """An isomorphism class of nonplanar rooted full binary trees.

    Build trees with :func:`leaf`, :func:`node` or :func:`canonicalize`;
    never instantiate directly.
    """

    __slots__ = ("id",)

    def __init__(self, tid: int):
        self.id = tid

    @classmethod
    def _of(cls, tid: int) -> Tree:
        n = len(_objects)
        if tid >= n:
            _objects.extend([None] * (tid + 1 - n))
        obj = _objects[tid]
        if obj is None:
            obj = _objects[tid] = cls(tid)
        return obj

    @property
    def is_leaf(self) -> bool:
        return TABLE.left[self.id] < 0

    @property
    def label(self) -> str | None:
        return TABLE.label[self.id]

    @property
    def children(self) -> tuple[Tree, Tree] | tuple[()]:
        a = TABLE.left[self.id]
        if a < 0:
            return ()
        return Tree._of(a), Tree._of(TABLE.right[self.id])

    @property
    def enc(self) -> str:
        return TABLE.enc[self.id]

    @property
    def n_leaves(self) -> int:
        return TABLE.nleaves[self.id]

    @property
    def n_internal(self) -> int:
        return TABLE.nleaves[self.id] - 1

    @property
    def n_edges(self) -> int:
        """Real edges; the ghost root edge is not counted."""
        return 2 * TABLE.nleaves[self.id] - 2

    @property
    def aut_order(self) -> int:
        return 1 << TABLE.twins[self.id]

    @property
    def sort_key(self) -> tuple[int, str]:
        return TABLE.nleaves[self.id], TABLE.enc[self.id]

    def __eq__(self, other):
        if isinstance(other, Tree):
            return self.id == other.id
        return NotImplemented

    def __hash__(self):
        return hash(self.id)

    def __lt__(self, other: Tree) -> bool:
        return self.sort_key < other.sort_key

    def __reduce__(self):
        return canonicalize, (str(self),)

    def __str__(self):
        return _text(self.id)

    def __repr__(self):
        return f"Tree({str(self)!r})"


def _text(t: int) -> str:
    a = TABLE.left[t]
    if a < 0:
        return TABLE.label[t]
    return "(" + _text(a) + " " + _text(TABLE.right[t]) + ")"


def leaf(label: str = UNLABELLED) -> Tree:
    return Tree._of(kernels.intern_leaf(TABLE, validate_label(label)))


def node(a: Tree, b: Tree) -> Tree:
    return Tree._of(kernels.intern_node(TABLE, a.id, b.id))


BULLET = leaf()


def canonicalize(raw) -> Tree:
    """Canonical representative of an unordered rooted full binary tree.

    ``raw`` is a :class:`Tree`, tree text such as ``"((a b) c)"``, or a nested
    structure where a string is a leaf label and a list or tuple holds the
    children of an internal node.

    >>> canonicalize("(c (b a))") is canonicalize([["a", "b"], "c"])
    True
    """
    if isinstance(raw, Tree):
        return raw
    if isinstance(raw, str):
        from binhopf.text import parse_tree

        return parse_tree(raw)
    return Tree._of(_canon_nested(raw))


def _canon_nested(raw) -> int:
    if isinstance(raw, str):
        return kernels.intern_leaf(TABLE, validate_label(raw))
    if isinstance(raw, Tree):
        return raw.id
    if not isinstance(raw, (list, tuple)):
        raise MalformedTree(f"cannot interpret {raw!r} as a tree")
    if len(raw) != 2:
        raise MalformedTree(f"internal node has {len(raw)} children, expected 2")
    return kernels.intern_node(TABLE, _canon_nested(raw[0]), _canon_nested(raw[1]))


def contract_to_binary(raw) -> Tree | None:
    """Project an at-most-binary tree to its full binary contraction.

    Every vertex with a single child is replaced by that child, so a unary
    chain above a leaf collapses to the leaf. ``None`` (the empty tree) maps
    to ``None``. Raw format as in :func:`canonicalize`, except that internal
    vertices may have one child.
    """
    if raw is None:
        return None
    return Tree._of(_contract(raw))


def _contract(raw) -> int:
    if isinstance(raw, str):
        return kernels.intern_leaf(TABLE, validate_label(raw))
    if isinstance(raw, Tree):
        return raw.id
    if not isinstance(raw, (list, tuple)):
        raise MalformedTree(f"cannot interpret {raw!r} as a tree")
    if len(raw) > 2:
        raise NonBinaryInput(f"vertex has {len(raw)} children")
    if len(raw) == 0:
        raise MalformedTree("unlabelled childless vertex")
    if len(raw) == 1:
        return _contract(raw[0])
    return kernels.intern_node(TABLE, _contract(raw[0]), _contract(raw[1]))


# -- edges and leaves -------------------------------------------------------


@dataclass(frozen=True, order=True)
class EdgeRef:
    """An insertion target: edge ``edge_index`` of forest component ``component_index``.

    Index 0 is the ghost edge above the root; real edges follow in depth-first
    preorder over the canonical tree.
    """

    component_index: int
    edge_index: int


def edge_subtrees(t: Tree) -> list[Tree]:
    """The subtree hanging below each edge, indexed like :class:`EdgeRef`.

    Entry 0 is ``t`` itself (the ghost edge); the list has ``2n - 1`` entries.
    """
    out: list[int] = []

    def walk(v):
        out.append(v)
        a = TABLE.left[v]
        if a >= 0:
            walk(a)
            walk(TABLE.right[v])

    walk(t.id)
    return [Tree._of(v) for v in out]


def edge_parents(t: Tree) -> list[int | None]:
    """Edge index of the parent edge of each edge (``None`` for the ghost edge)."""
    parents: list[int | None] = []

    def walk(v, up):
        me = len(parents)
        parents.append(up)
        a = TABLE.left[v]
        if a >= 0:
            walk(a, me)
            walk(TABLE.right[v], me)

    walk(t.id, None)
    return parents


def leaf_edges(t: Tree) -> list[int]:
    """Edge index above each leaf, in leaf-position order (left to right)."""
    return [i for i, s in enumerate(edge_subtrees(t)) if s.is_leaf]


def leaf_labels(t: Tree) -> list[str]:
    return [s.label for s in edge_subtrees(t) if s.is_leaf]


def rebuild(t: Tree, edge_index: int, fn) -> Tree:
    """Replace the subtree below edge ``edge_index`` by ``fn(subtree)``."""
    counter = [0]

    def walk(v):
        me = counter[0]
        counter[0] += 1
        if me == edge_index:
            skip(v)
            return fn(Tree._of(v)).id
        a = TABLE.left[v]
        if a < 0:
            return v
        return kernels.intern_node(TABLE, walk(a), walk(TABLE.right[v]))

    def skip(v):
        a = TABLE.left[v]
        if a >= 0:
            counter[0] += 2 * TABLE.nleaves[v] - 2

    if not 0 <= edge_index < 2 * t.n_leaves - 1:
        raise BadIndex(f"edge index {edge_index} out of range for {t}")
    return Tree._of(walk(t.id))


def remove_leaf(t: Tree, position: int) -> Tree | None:
    """Delete the leaf at ``position`` (left-to-right order) and contract.

    Returns ``None`` when ``t`` is a single leaf.
    """
    if not 0 <= position < t.n_leaves:
        raise BadIndex(f"leaf position {position} out of range for {t}")
    seen = [0]

    def walk(v):
        a = TABLE.left[v]
        if a < 0:
            hit = seen[0] == position
            seen[0] += 1
            return -1 if hit else v
        ra = walk(a)
        rb = walk(TABLE.right[v])
        if ra < 0:
            return rb
        if rb < 0:
            return ra
        return kernels.intern_node(TABLE, ra, rb)

    r = walk(t.id)
    return None if r < 0 else Tree._of(r)


# -- forests ----------------------------------------------------------------


class Forest:
    """A multiset of trees; the monomial basis of the algebra.

    ``ids`` holds the component tree ids sorted ascending, which is the
    hashing key. ``trees`` lists the components sorted by (n_leaves, enc).
    The empty forest is the unit ``1``.
    """

    __slots__ = ("ids", "_hash")

    def __init__(self, trees: Iterable[Tree] = ()):
        ids = tuple(sorted(canonicalize(t).id for t in trees))
        self.ids = ids
        self._hash = hash(ids)

    @classmethod
    def from_ids(cls, ids: tuple[int, ...]) -> Forest:
        obj = object.__new__(cls)
        obj.ids = ids
        obj._hash = hash(ids)
        return obj

    @property
    def trees(self) -> list[Tree]:
        return sorted(Tree._of(t) for t in self.ids)

    @property
    def n_leaves(self) -> int:
        nl = TABLE.nleaves
        return sum(nl[t] for t in self.ids)

    @property
    def aut_order(self) -> int:
        return aut_order_forest(self)

    @property
    def enc(self) -> str:
        return ";".join(t.enc for t in self.trees)

    @property
    def sort_key(self) -> tuple[int, str]:
        return self.n_leaves, self.enc

    def union(self, other: Forest) -> Forest:
        return Forest.from_ids(tuple(sorted(self.ids + other.ids)))

    __mul__ = union

    def __len__(self):
        return len(self.ids)

    def __iter__(self):
        return iter(self.trees)

    def __bool__(self):
        return bool(self.ids)

    def __eq__(self, other):
        if isinstance(other, Forest):
            return self.ids == other.ids
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Forest) -> bool:
        return self.sort_key < other.sort_key

    def __reduce__(self):
        return Forest, (tuple(self.trees),)

    def __str__(self):
        if not self.ids:
            return "1"
        return ", ".join(str(t) for t in self.trees)

    def __repr__(self):
        return f"Forest({str(self)!r})"


EMPTY_FOREST = Forest()


def as_forest(x) -> Forest:
    if isinstance(x, Forest):
        return x
    if isinstance(x, Tree):
        return Forest.from_ids((x.id,))
    if isinstance(x, str):
        from binhopf.text import parse_forest

        return parse_forest(x)
    return Forest(x)


def forest_aut_order(ids: Sequence[int]) -> int:
    twins = TABLE.twins
    s = 1
    for t, a in Counter(ids).items():
        s *= factorial(a) << (twins[t] * a)
    return s


def aut_order_forest(f) -> int:
    """Symmetry coefficient: product of a_i! * s_{T_i}^{a_i} over distinct components."""
    return forest_aut_order(as_forest(f).ids)


# -- enumeration ------------------------------------------------------------


def _trees_by_size(n: int) -> list[list[int]]:
    bullet = BULLET.id
    by = [[], [bullet]]
    for m in range(2, n + 1):
        found = set()
        for i in range(1, m // 2 + 1):
            for x in by[i]:
                for y in by[m - i]:
                    found.add(kernels.intern_node(TABLE, x, y))
        by.append(sorted(found, key=TABLE.enc.__getitem__))
    return by


def enumerate_trees(n: int, labels: str = UNLABELLED) -> list[Tree]:
    """All binary trees with ``n`` leaves, every leaf labelled ``labels``, sorted by encoding.

    >>> [len(enumerate_trees(n)) for n in range(1, 9)]
    [1, 1, 1, 2, 3, 6, 11, 23]
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > LIMITS.max_tree_leaves:
        raise ResourceLimit(f"n={n} exceeds max_tree_leaves={LIMITS.max_tree_leaves}")
    shapes = _trees_by_size(n)[n]
    if labels == UNLABELLED:
        return [Tree._of(t) for t in shapes]
    x = kernels.intern_leaf(TABLE, validate_label(labels))
    memo: dict[int, int] = {}

    def relabel(v):
        if v not in memo:
            a = TABLE.left[v]
            memo[v] = x if a < 0 else kernels.intern_node(TABLE, relabel(a), relabel(TABLE.right[v]))
        return memo[v]

    return sorted((Tree._of(relabel(t)) for t in shapes), key=lambda t: t.enc)


def enumerate_forests(n: int) -> list[Forest]:
    """All unlabelled forests with ``n`` leaves in total."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > LIMITS.max_forest_leaves:
        raise ResourceLimit(f"n={n} exceeds max_forest_leaves={LIMITS.max_forest_leaves}")
    by = _trees_by_size(n)
    pool = [t for m in range(1, n + 1) for t in by[m]]
    size = TABLE.nleaves
    out = []

    def go(start, remaining, acc):
        if remaining == 0:
            out.append(Forest.from_ids(tuple(sorted(acc))))
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if size[t] <= remaining:
                acc.append(t)
                go(i, remaining - size[t], acc)
                acc.pop()

    go(0, n, [])
    out.sort(key=lambda f: f.enc)
    return out


def enumerate_labelled_trees(labels: Sequence[str]) -> list[Tree]:
    """All binary trees whose leaves carry exactly the given distinct labels."""
    labels = [validate_label(x) for x in labels]
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")
    if not labels:
        raise ValueError("need at least one label")
    if len(labels) > LIMITS.max_tree_leaves:
        raise ResourceLimit("too many labels")

    def build(items):
        if len(items) == 1:
            return [kernels.intern_leaf(TABLE, items[0])]
        first, rest = items[0], items[1:]
        out = []
        # splits with `first` on the left side, right side nonempty
        for mask in range(1 << len(rest)):
            left = [first] + [x for i, x in enumerate(rest) if mask >> i & 1]
            right = [x for i, x in enumerate(rest) if not mask >> i & 1]
            if not right:
                continue
            for a in build(left):
                for b in build(right):
                    out.append(kernels.intern_node(TABLE, a, b))
        return out

    return sorted({Tree._of(t) for t in build(list(labels))})
