"""Time the compiled kernels against the pure-Python ones on identical workloads.

    python benchmarks/bench_kernels.py [--max-leaves 11] [--repeat 3]

Each run starts from a fresh tree table, so interning costs are included.
Results from both backends are compared for equality before timing is reported.
"""
import argparse
import time

from binhopf import _pykernels
from binhopf._table import TreeTable

try:
    from binhopf import _ckernels
except ImportError:
    _ckernels = None


def all_trees(k, table, n):
    bullet = k.intern_leaf(table, "*")
    by_size = [[], [bullet]]
    for m in range(2, n + 1):
        row = []
        for i in range(1, m // 2 + 1):
            for a in by_size[i]:
                for b in by_size[m - i]:
                    if i == m - i and b < a:
                        continue
                    row.append(k.intern_node(table, a, b))
        by_size.append(sorted(set(row)))
    return [t for row in by_size for t in row]


def w_coproduct(k, n):
    table = TreeTable()
    memo = {}
    trees = all_trees(k, table, n)
    return table, [k.coproduct_tree(table, t, memo) for t in trees]


def w_total_cuts(k, n):
    table = TreeTable()
    memo = {}
    trees = all_trees(k, table, n)
    return table, [k.total_cuts(table, t, memo) for t in trees]


def w_grow_prune(k, n):
    table = TreeTable()
    trees = all_trees(k, table, n)
    bullet = k.intern_leaf(table, "*")
    return table, [(k.prelie_tree(table, t, bullet), k.prune_tree(table, t)) for t in trees]


def w_star(k, n):
    """Star products of all pairs of small trees with all forests of 3 bullets and a cherry."""
    table = TreeTable()
    trees = all_trees(k, table, n)
    bullet = k.intern_leaf(table, "*")
    cherry = k.intern_node(table, bullet, bullet)
    inserted = tuple(sorted((bullet, bullet, cherry, bullet)))
    out = []
    for a in trees:
        for b in trees[:12]:
            base = tuple(sorted((a, b)))
            out.append(k.graft_forest(table, base, inserted, True))
    return table, out


WORKLOADS = {
    "coproduct": (w_coproduct, 1),
    "total_cuts": (w_total_cuts, -2),
    "grow_prune": (w_grow_prune, 1),
    "star": (w_star, -4),
}


def canonical(table, results):
    """Rewrite ids as canonical encodings so results from two tables compare."""
    enc = table.enc

    def conv(x):
        if isinstance(x, dict):
            return frozenset((conv(k), v) for k, v in x.items())
        if isinstance(x, tuple):
            return tuple(sorted(conv(y) for y in x)) if all(isinstance(y, int) for y in x) \
                else tuple(conv(y) for y in x)
        if isinstance(x, int):
            return "" if x < 0 else enc[x]
        return x

    return [conv(r) for r in results]


def timed(fn, k, n, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        table, res = fn(k, n)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, table, res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-leaves", type=int, default=11)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only pure Python available")
    print(f"{'workload':<12} {'leaves':>6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, (fn, offset) in WORKLOADS.items():
        n = args.max_leaves + offset
        tp, table_p, res_p = timed(fn, _pykernels, n, args.repeat)
        if _ckernels is None:
            print(f"{name:<12} {n:>6} {tp:>10.3f} {'-':>10} {'-':>8}")
            continue
        tc, table_c, res_c = timed(fn, _ckernels, n, args.repeat)
        if canonical(table_p, res_p) != canonical(table_c, res_c):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<12} {n:>6} {tp:>10.3f} {tc:>10.3f} {tp / tc:>7.2f}x")


if __name__ == "__main__":
    main()
