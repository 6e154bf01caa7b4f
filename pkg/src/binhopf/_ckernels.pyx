# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled combinatorial kernels.

Same functions and signatures as ``_pykernels``; see that module for the
data conventions. The tree table's column lists are read once per call and
indexed with C integers.
"""
from itertools import permutations


cpdef Py_ssize_t intern_leaf(object table, str label):
    t = table.leaves.get(label)
    if t is None:
        t = table.new_leaf(label)
    return t


cdef inline Py_ssize_t _node(object table, dict pairs, Py_ssize_t a, Py_ssize_t b):
    cdef object t
    if a <= b:
        t = pairs.get((a, b))
    else:
        t = pairs.get((b, a))
    if t is None:
        t = table.new_node(a, b)
    return t


cpdef Py_ssize_t intern_node(object table, Py_ssize_t a, Py_ssize_t b):
    return _node(table, table.pairs, a, b)


cdef inline void _bump(dict d, object key, object c):
    cdef object old = d.get(key)
    if old is None:
        d[key] = c
    else:
        d[key] = old + c


cdef dict _coproduct(object table, dict pairs, list left, list right,
                     Py_ssize_t t, dict memo):
    cdef dict out = memo.get(t)
    if out is not None:
        return out
    cdef Py_ssize_t a = left[t], b, ra, rb, rem
    cdef tuple pa, pb, pruned
    cdef dict terms_a, terms_b
    cdef object ka, kb, ca, cb
    if a < 0:
        out = {((), t): 1, ((t,), -1): 1}
    else:
        b = right[t]
        terms_a = _coproduct(table, pairs, left, right, a, memo)
        terms_b = _coproduct(table, pairs, left, right, b, memo)
        out = {}
        for ka, ca in terms_a.items():
            pa = ka[0]
            ra = ka[1]
            for kb, cb in terms_b.items():
                pb = kb[0]
                rb = kb[1]
                if ra < 0:
                    if rb < 0:
                        continue
                    rem = rb
                elif rb < 0:
                    rem = ra
                else:
                    rem = _node(table, pairs, ra, rb)
                if not pa:
                    pruned = pb
                elif not pb:
                    pruned = pa
                else:
                    pruned = tuple(sorted(pa + pb))
                _bump(out, (pruned, rem), ca * cb)
        out[((t,), -1)] = 1
    memo[t] = out
    return out


def coproduct_tree(table, Py_ssize_t t, dict memo):
    return _coproduct(table, table.pairs, table.left, table.right, t, memo)


cdef dict _total(object table, dict pairs, list left, list right,
                 Py_ssize_t t, dict memo):
    cdef dict out = memo.get(t)
    if out is not None:
        return out
    cdef Py_ssize_t a = left[t], b, ra, rb
    cdef tuple pa, pb, rest
    cdef dict cuts_a, cuts_b
    cdef object ka, kb, ca, cb, c
    if a < 0:
        out = {(t, ()): 1}
    else:
        b = right[t]
        cuts_a = _total(table, pairs, left, right, a, memo)
        cuts_b = _total(table, pairs, left, right, b, memo)
        out = {}
        for ka, ca in cuts_a.items():
            ra = ka[0]
            pa = ka[1]
            for kb, cb in cuts_b.items():
                rb = kb[0]
                pb = kb[1]
                c = ca * cb
                rest = pa + pb
                _bump(out, (_node(table, pairs, ra, rb), tuple(sorted(rest))), c)
                _bump(out, (rb, tuple(sorted(rest + (ra,)))), c)
                _bump(out, (ra, tuple(sorted(rest + (rb,)))), c)
    memo[t] = out
    return out


def total_cuts(table, Py_ssize_t t, dict memo):
    return _total(table, table.pairs, table.left, table.right, t, memo)


cdef void _insert_everywhere(object table, dict pairs, list left, list right,
                             Py_ssize_t t, Py_ssize_t s, list acc):
    acc.append(_node(table, pairs, t, s))
    cdef Py_ssize_t a = left[t], b
    if a < 0:
        return
    b = right[t]
    cdef list below = []
    _insert_everywhere(table, pairs, left, right, a, s, below)
    for x in below:
        acc.append(_node(table, pairs, x, b))
    below = []
    _insert_everywhere(table, pairs, left, right, b, s, below)
    for y in below:
        acc.append(_node(table, pairs, a, y))


def prelie_tree(table, Py_ssize_t t, Py_ssize_t s):
    cdef list acc = []
    _insert_everywhere(table, table.pairs, table.left, table.right, t, s, acc)
    cdef dict out = {}
    for x in acc:
        _bump(out, x, 1)
    return out


cdef void _remove_each_leaf(object table, dict pairs, list left, list right,
                            Py_ssize_t t, list acc):
    cdef Py_ssize_t a = left[t], b, x
    if a < 0:
        acc.append(-1)
        return
    b = right[t]
    cdef list below = []
    _remove_each_leaf(table, pairs, left, right, a, below)
    for x in below:
        acc.append(b if x < 0 else _node(table, pairs, x, b))
    below = []
    _remove_each_leaf(table, pairs, left, right, b, below)
    for x in below:
        acc.append(a if x < 0 else _node(table, pairs, a, x))


def prune_tree(table, Py_ssize_t t):
    cdef list acc = []
    _remove_each_leaf(table, table.pairs, table.left, table.right, t, acc)
    cdef dict out = {}
    for x in acc:
        _bump(out, x, 1)
    return out


cdef list _bits(Py_ssize_t mask):
    cdef list out = []
    cdef Py_ssize_t i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


cdef dict _graft_below(object table, dict pairs, list left, list right, tuple inserted,
                       Py_ssize_t t, Py_ssize_t mask, dict memo):
    if mask == 0:
        return {t: 1}
    cdef Py_ssize_t a = left[t], b, sub
    if a < 0:
        return {}
    b = right[t]
    cdef dict out = {}, ga, gb
    cdef object x, y, cx, cy
    sub = mask
    while True:
        ga = _graft(table, pairs, left, right, inserted, a, sub, memo)
        if ga:
            gb = _graft(table, pairs, left, right, inserted, b, mask ^ sub, memo)
            for x, cx in ga.items():
                for y, cy in gb.items():
                    _bump(out, _node(table, pairs, x, y), cx * cy)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return out


cdef dict _graft(object table, dict pairs, list left, list right, tuple inserted,
                 Py_ssize_t t, Py_ssize_t mask, dict memo):
    cdef tuple key = (t, mask)
    cdef dict out = memo.get(key)
    if out is not None:
        return out
    out = {}
    cdef dict below
    cdef Py_ssize_t top = mask, y, i, j
    cdef tuple order
    cdef object x, c
    while True:
        below = _graft_below(table, pairs, left, right, inserted, t, mask ^ top, memo)
        if below:
            if top == 0:
                for x, c in below.items():
                    _bump(out, x, c)
            else:
                for order in permutations(_bits(top)):
                    for x, c in below.items():
                        y = x
                        for j in range(len(order) - 1, -1, -1):
                            i = order[j]
                            y = _node(table, pairs, inserted[i], y)
                        _bump(out, y, c)
        if top == 0:
            break
        top = (top - 1) & mask
    memo[key] = out
    return out


def graft_tree(table, Py_ssize_t t, tuple inserted, Py_ssize_t mask, dict memo):
    return _graft(table, table.pairs, table.left, table.right, inserted, t, mask, memo)


def graft_forest(table, tuple base, tuple inserted, bint allow_skip):
    cdef dict pairs = table.pairs
    cdef list left = table.left, right = table.right
    cdef Py_ssize_t k = len(inserted)
    cdef Py_ssize_t full = (1 << k) - 1, used, free, sub
    cdef dict memo = {}, states = {0: {(): 1}}, new_states, partials, g, acc
    cdef dict out = {}
    cdef tuple pf, extra
    cdef object comp, x, c1, c2, c
    for comp in base:
        new_states = {}
        for used, partials in states.items():
            free = full ^ used
            sub = free
            while True:
                g = _graft(table, pairs, left, right, inserted, comp, sub, memo)
                if g:
                    acc = new_states.get(used | sub)
                    if acc is None:
                        acc = {}
                        new_states[used | sub] = acc
                    for pf, c1 in partials.items():
                        for x, c2 in g.items():
                            _bump(acc, pf + (x,), c1 * c2)
                if sub == 0:
                    break
                sub = (sub - 1) & free
        states = new_states
    for used, partials in states.items():
        free = full ^ used
        if free and not allow_skip:
            continue
        extra = tuple([inserted[i] for i in _bits(free)])
        for pf, c in partials.items():
            _bump(out, tuple(sorted(pf + extra)), c)
    return out
