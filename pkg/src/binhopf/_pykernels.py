"""Pure-Python combinatorial kernels.

This module and ``_ckernels.pyx`` implement the same functions with the same
signatures; ``binhopf._backend`` picks one at import time. All functions take
the :class:`~binhopf._table.TreeTable` explicitly and work on integer tree ids.
A forest is a tuple of tree ids sorted ascending. An empty remainder is ``-1``.
"""
from itertools import permutations


def intern_leaf(table, label):
    t = table.leaves.get(label)
    if t is None:
        t = table.new_leaf(label)
    return t


def intern_node(table, a, b):
    t = table.pairs.get((a, b) if a <= b else (b, a))
    if t is None:
        t = table.new_node(a, b)
    return t


def coproduct_tree(table, t, memo):
    """Coproduct terms of one tree as ``{(pruned, remainder): multiplicity}``.

    Recursion over leaf subsets: a child whose leaves are all selected is
    pruned whole, unless its sibling is too, in which case the parent goes.
    """
    out = memo.get(t)
    if out is not None:
        return out
    a = table.left[t]
    if a < 0:
        out = {((), t): 1, ((t,), -1): 1}
    else:
        b = table.right[t]
        terms_a = coproduct_tree(table, a, memo)
        terms_b = coproduct_tree(table, b, memo)
        out = {}
        for (pa, ra), ca in terms_a.items():
            for (pb, rb), cb in terms_b.items():
                if ra < 0:
                    if rb < 0:
                        continue
                    rem = rb
                elif rb < 0:
                    rem = ra
                else:
                    rem = intern_node(table, ra, rb)
                if not pa:
                    pruned = pb
                elif not pb:
                    pruned = pa
                else:
                    pruned = tuple(sorted(pa + pb))
                key = (pruned, rem)
                out[key] = out.get(key, 0) + ca * cb
        out[((t,), -1)] = 1
    memo[t] = out
    return out


def total_cuts(table, t, memo):
    """Binary-total cuts of ``t`` as ``{(root part, severed parts): count}``.

    Each internal node keeps both children or severs exactly one; unary
    vertices left behind are contracted away.
    """
    out = memo.get(t)
    if out is not None:
        return out
    a = table.left[t]
    if a < 0:
        out = {(t, ()): 1}
    else:
        b = table.right[t]
        cuts_a = total_cuts(table, a, memo)
        cuts_b = total_cuts(table, b, memo)
        out = {}
        for (ra, pa), ca in cuts_a.items():
            for (rb, pb), cb in cuts_b.items():
                c = ca * cb
                rest = pa + pb
                key = (intern_node(table, ra, rb), tuple(sorted(rest)))
                out[key] = out.get(key, 0) + c
                key = (rb, tuple(sorted(rest + (ra,))))
                out[key] = out.get(key, 0) + c
                key = (ra, tuple(sorted(rest + (rb,))))
                out[key] = out.get(key, 0) + c
    memo[t] = out
    return out


def _insert_everywhere(table, t, s, acc):
    acc.append(intern_node(table, t, s))
    a = table.left[t]
    if a < 0:
        return
    b = table.right[t]
    below = []
    _insert_everywhere(table, a, s, below)
    for x in below:
        acc.append(intern_node(table, x, b))
    below = []
    _insert_everywhere(table, b, s, below)
    for y in below:
        acc.append(intern_node(table, a, y))


def prelie_tree(table, t, s):
    """Insert ``s`` at every edge of ``t``, ghost root edge included."""
    acc = []
    _insert_everywhere(table, t, s, acc)
    out = {}
    for x in acc:
        out[x] = out.get(x, 0) + 1
    return out


def _remove_each_leaf(table, t, acc):
    a = table.left[t]
    if a < 0:
        acc.append(-1)
        return
    b = table.right[t]
    below = []
    _remove_each_leaf(table, a, below)
    for x in below:
        acc.append(b if x < 0 else intern_node(table, x, b))
    below = []
    _remove_each_leaf(table, b, below)
    for y in below:
        acc.append(a if y < 0 else intern_node(table, a, y))


def prune_tree(table, t):
    """Delete each leaf in turn and contract; ``-1`` marks the empty tree."""
    acc = []
    _remove_each_leaf(table, t, acc)
    out = {}
    for x in acc:
        out[x] = out.get(x, 0) + 1
    return out


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _graft_below(table, t, inserted, mask, memo):
    if mask == 0:
        return {t: 1}
    a = table.left[t]
    if a < 0:
        return {}
    b = table.right[t]
    out = {}
    sub = mask
    while True:
        ga = graft_tree(table, a, inserted, sub, memo)
        if ga:
            gb = graft_tree(table, b, inserted, mask ^ sub, memo)
            for x, cx in ga.items():
                for y, cy in gb.items():
                    z = intern_node(table, x, y)
                    out[z] = out.get(z, 0) + cx * cy
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return out


def graft_tree(table, t, inserted, mask, memo):
    """Outcomes of grafting the trees selected by ``mask`` into ``t``.

    Targets are all edges of ``t`` plus the edge above its root. Trees sharing
    an edge form a ladder; every linear order is a separate graft.
    """
    key = (t, mask)
    out = memo.get(key)
    if out is not None:
        return out
    out = {}
    top = mask
    while True:
        below = _graft_below(table, t, inserted, mask ^ top, memo)
        if below:
            if top == 0:
                for x, c in below.items():
                    out[x] = out.get(x, 0) + c
            else:
                for order in permutations(_bits(top)):
                    for x, c in below.items():
                        y = x
                        for i in reversed(order):
                            y = intern_node(table, inserted[i], y)
                        out[y] = out.get(y, 0) + c
        if top == 0:
            break
        top = (top - 1) & mask
    memo[key] = out
    return out


def graft_forest(table, base, inserted, allow_skip):
    """Outcomes of grafting the forest ``inserted`` into the forest ``base``.

    Every inserted tree goes to an edge of some base component, or (only if
    ``allow_skip``) stays a free component. Returns ``{forest: count}``.
    """
    k = len(inserted)
    full = (1 << k) - 1
    memo = {}
    states = {0: {(): 1}}
    for comp in base:
        new_states = {}
        for used, partials in states.items():
            free = full ^ used
            sub = free
            while True:
                g = graft_tree(table, comp, inserted, sub, memo)
                if g:
                    acc = new_states.get(used | sub)
                    if acc is None:
                        acc = new_states[used | sub] = {}
                    for pf, c1 in partials.items():
                        for x, c2 in g.items():
                            key = pf + (x,)
                            acc[key] = acc.get(key, 0) + c1 * c2
                if sub == 0:
                    break
                sub = (sub - 1) & free
        states = new_states
    out = {}
    for used, partials in states.items():
        free = full ^ used
        if free and not allow_skip:
            continue
        extra = tuple([inserted[i] for i in _bits(free)])
        for pf, c in partials.items():
            key = tuple(sorted(pf + extra))
            out[key] = out.get(key, 0) + c
    return out
