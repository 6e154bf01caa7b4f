import os
import subprocess
import sys

import pytest

from binhopf import _backend, _pykernels
from binhopf._table import TreeTable

ckernels = pytest.importorskip("binhopf._ckernels")


def build(k, n):
    table = TreeTable()
    bullet = k.intern_leaf(table, "*")
    by_size = [[], [bullet, k.intern_leaf(table, "a"), k.intern_leaf(table, "b")]]
    for m in range(2, n + 1):
        row = set()
        for i in range(1, m // 2 + 1):
            for a in by_size[i]:
                for b in by_size[m - i]:
                    row.add(k.intern_node(table, a, b))
        by_size.append(sorted(row, key=lambda t: table.enc[t]))
    return table, [t for row in by_size for t in row]


def canon(table, x):
    if isinstance(x, dict):
        return {canon(table, k): v for k, v in x.items()}
    if isinstance(x, tuple):
        if all(isinstance(y, int) for y in x):
            return tuple(sorted(canon(table, y) for y in x))
        return tuple(canon(table, y) for y in x)
    if isinstance(x, int):
        return "" if x < 0 else table.enc[x]
    return x


def run_all(k, n=5):
    table, trees = build(k, n)
    memo, tmemo = {}, {}
    bullet = k.intern_leaf(table, "*")
    cherry = k.intern_node(table, bullet, bullet)
    out = []
    for t in trees:
        out.append(("cop", canon(table, k.coproduct_tree(table, t, memo))))
        out.append(("tot", canon(table, k.total_cuts(table, t, tmemo))))
        out.append(("pre", canon(table, k.prelie_tree(table, t, cherry))))
        out.append(("pru", canon(table, k.prune_tree(table, t))))
    small = [t for t in trees if table.nleaves[t] <= 2]
    for a in small:
        for b in small:
            for skip in (False, True):
                res = k.graft_forest(table, (a,), tuple(sorted((b, bullet))), skip)
                out.append(("gr", canon(table, res)))
                res = k.graft_forest(table, tuple(sorted((a, b))), (cherry,), skip)
                out.append(("gr2", canon(table, res)))
    return table, trees, out


def test_kernels_agree():
    _, _, py = run_all(_pykernels)
    _, _, cy = run_all(ckernels)
    assert py == cy


def test_interning_agrees(kernel_module):
    table, trees = build(kernel_module, 6)
    assert len(trees) == len(set(trees))
    for t in trees:
        if table.left[t] >= 0:
            a, b = table.left[t], table.right[t]
            assert kernel_module.intern_node(table, b, a) == t
            assert table.nleaves[t] == table.nleaves[a] + table.nleaves[b]


def test_kernel_coproduct_mass(kernel_module):
    table, trees = build(kernel_module, 6)
    memo = {}
    for t in trees:
        terms = kernel_module.coproduct_tree(table, t, memo)
        # every nonempty leaf subset once, plus the empty cut
        assert sum(terms.values()) == 2 ** table.nleaves[t]


def test_backend_selection():
    assert _backend.BACKEND in ("python", "cython")
    env = dict(os.environ, BINHOPF_PURE_PYTHON="1")
    code = "from binhopf._backend import BACKEND; print(BACKEND)"
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                          check=True)
    assert proc.stdout.strip() == "python"


def test_pure_python_fallback_runs_cli():
    env = dict(os.environ, BINHOPF_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-m", "binhopf", "verify", "hopf", "--max-leaves", "5"],
                          env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.strip().endswith("checks passed")
