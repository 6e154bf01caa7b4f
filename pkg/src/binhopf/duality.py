"""The symmetric pairing ⟨F, G⟩ = s_F δ_{F,G} and the star/cut duality check.

The identity checked is ⟨a ∗ b, c⟩ = ⟨b ⊗ a, Δ(c)⟩, where in ``Δ(c)`` the left
leg is the pruned forest and the right leg the remainder. Reading off integer
multiplicities, this is ``n · s_c = m · s_a · s_b`` with ``n`` the coefficient
of ``c`` in ``a ∗ b`` and ``m`` the coefficient of ``b ⊗ a`` in ``Δ(c)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from binhopf.config import LIMITS
from binhopf.errors import ResourceLimit
from binhopf.hopf import forest_terms
from binhopf.linear import Coef, LinComb, Tensor, as_lincomb
from binhopf.prelie import growth, pruning, star
from binhopf.trees import Forest, as_forest, enumerate_forests, enumerate_trees, forest_aut_order


def pair(f, g) -> int:
    f, g = as_forest(f), as_forest(g)
    return forest_aut_order(f.ids) if f.ids == g.ids else 0


def pair_linear(a, b) -> Coef:
    a, b = as_lincomb(a), as_lincomb(b)
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    total = 0
    for k, c in small._t.items():
        d = big._t.get(k)
        if d:
            total += c * d * forest_aut_order(k)
    return total


def pair_tensor(s: Tensor, t: Tensor) -> Coef:
    """Leg-wise pairing of two tensors of equal rank."""
    if s.rank != t.rank:
        raise ValueError("ranks differ")
    total = 0
    for k, c in s._t.items():
        d = t._t.get(k)
        if d:
            w = 1
            for leg in k:
                w *= forest_aut_order(leg)
            total += c * d * w
    return total


@dataclass(frozen=True)
class DualityReport:
    """One instance of ``n · s_c = m · s_a · s_b``.

    ``n_count`` is the coefficient of ``c`` in ``a ∗ b``; ``m_count`` that of
    ``b ⊗ a`` (pruned ⊗ remainder) in ``Δ(c)``.
    """

    a: Forest
    b: Forest
    c: Forest
    n_count: int
    m_count: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c), "n": self.n_count,
                "m": self.m_count, "lhs": self.lhs, "rhs": self.rhs, "pass": self.passed}

    def __str__(self):
        mark = "pass" if self.passed else "FAIL"
        return (f"{mark} a={self.a} b={self.b} c={self.c}: "
                f"{self.n_count}·{self.c.aut_order} = {self.lhs}, "
                f"{self.m_count}·{self.a.aut_order}·{self.b.aut_order} = {self.rhs}")


def _report(a: Forest, b: Forest, c: Forest, n: int, m: int) -> DualityReport:
    return DualityReport(a, b, c, n, m, n * c.aut_order, m * a.aut_order * b.aut_order)


def duality_check(a, b, c) -> DualityReport:
    a, b, c = as_forest(a), as_forest(b), as_forest(c)
    if a.n_leaves + b.n_leaves != c.n_leaves:
        return _report(a, b, c, 0, 0)
    n = star(LinComb.of(a), LinComb.of(b))._t.get(c.ids, 0)
    m = forest_terms(c.ids).get((b.ids, a.ids), 0)
    return _report(a, b, c, n, m)


def duality_sweep(max_leaves: int) -> list[DualityReport]:
    """All unlabelled triples with deg a + deg b = deg c <= max_leaves, in a fixed order.

    Each star product ``a ∗ b`` is computed once and read off against every ``c``.
    """
    if max_leaves > LIMITS.max_duality_leaves:
        raise ResourceLimit(f"max_leaves={max_leaves} exceeds max_duality_leaves="
                            f"{LIMITS.max_duality_leaves}")
    by_degree = [enumerate_forests(n) for n in range(max_leaves + 1)]
    reports = []
    for total in range(max_leaves + 1):
        cuts = {c: forest_terms(c.ids) for c in by_degree[total]}
        for da in range(total + 1):
            for a in by_degree[da]:
                for b in by_degree[total - da]:
                    prod = star(LinComb.of(a), LinComb.of(b))._t
                    for c, terms in cuts.items():
                        n = prod.get(c.ids, 0)
                        m = terms.get((b.ids, a.ids), 0)
                        reports.append(_report(a, b, c, n, m))
    return reports


def adjointness_check(max_leaves: int, max_power: int = 3) -> bool:
    """⟨𝔑^k T, T'⟩ = ⟨T, 𝔓^k T'⟩ for unlabelled trees with |T'| = |T| + k <= max_leaves."""
    return not adjointness_failures(max_leaves, max_power)


def adjointness_failures(max_leaves: int, max_power: int = 3) -> list[tuple]:
    failures = []
    for n in range(1, max_leaves + 1):
        for t in enumerate_trees(n):
            up = LinComb.of(t)
            for k in range(1, max_power + 1):
                if n + k > max_leaves:
                    break
                up = growth(up)
                for t2 in enumerate_trees(n + k):
                    down = LinComb.of(t2)
                    for _ in range(k):
                        down = pruning(down)
                    lhs = pair_linear(up, LinComb.of(t2))
                    rhs = pair_linear(LinComb.of(t), down)
                    if lhs != rhs:
                        failures.append((t, t2, k, lhs, rhs))
    return failures
