"""Exhaustive property suites with counterexample witnesses.

Each ``check_*`` function sweeps a bounded family of inputs and returns a
:class:`CheckResult`. The suites group them: ``hopf``, ``prelie``, ``duality``,
``exp`` and ``all``.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from string import ascii_lowercase

from binhopf.config import LIMITS
from binhopf.duality import adjointness_failures, duality_check, duality_sweep, pair, pair_tensor
from binhopf.hopf import (
    _antipode_forest, antipode, antipode_by_total_cuts, binomial_coproduct, character_tensor,
    comb_coproduct_formula, comb_tree, coproduct, forest_terms, iterated_coproduct,
    leaf_character,
)
from binhopf.linear import LinComb, Tensor
from binhopf.prelie import (
    associator, growth, pruning, shuffle_coproduct, star, triangle, triangle_monomials,
    triangle_recursive,
)
from binhopf.trees import (
    BULLET, Forest, enumerate_forests, enumerate_labelled_trees, enumerate_trees,
    leaf_labels,
)

SUITES = ("hopf", "prelie", "duality", "exp")


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    checked: int
    witness: str | None = None
    seconds: float = 0.0
    detail: str | None = None

    def to_json(self) -> dict:
        return {"suite": self.suite, "check": self.name, "pass": self.passed,
                "checked": self.checked, "witness": self.witness,
                "seconds": round(self.seconds, 3), "detail": self.detail}

    def __str__(self):
        mark = "PASS" if self.passed else "FAIL"
        tail = f"  witness: {self.witness}" if self.witness else ""
        if self.detail:
            tail += f"\n    {self.detail}"
        return f"{mark} {self.suite}/{self.name} ({self.checked} checked, {self.seconds:.2f}s){tail}"


class _Sweep:
    """Counts cases and keeps the first failure."""

    def __init__(self, suite: str, name: str):
        self.result = CheckResult(suite, name, True, 0)
        self.start = time.perf_counter()

    def check(self, ok: bool, witness) -> bool:
        self.result.checked += 1
        if not ok and self.result.passed:
            self.result.passed = False
            self.result.witness = witness() if callable(witness) else str(witness)
        return ok

    def done(self) -> CheckResult:
        self.result.seconds = time.perf_counter() - self.start
        return self.result


def trees_upto(n: int):
    for k in range(1, n + 1):
        yield from enumerate_trees(k)


def forests_upto(n: int):
    for k in range(n + 1):
        yield from enumerate_forests(k)


def labelled_trees_upto(n: int):
    for k in range(1, n + 1):
        yield from enumerate_labelled_trees(ascii_lowercase[:k])


# -- hopf -------------------------------------------------------------------


def check_coassociativity(max_leaves: int = 8, labelled_max: int = 5) -> CheckResult:
    sw = _Sweep("hopf", "coassociativity")
    for t in list(trees_upto(max_leaves)) + list(labelled_trees_upto(labelled_max)):
        sw.check(iterated_coproduct(t, 2, "left") == iterated_coproduct(t, 2, "right"), t)
    return sw.done()


def check_counit(max_leaves: int = 6) -> CheckResult:
    sw = _Sweep("hopf", "counit")
    for f in forests_upto(max_leaves):
        terms = forest_terms(f.ids)
        left = {r: c for (p, r), c in terms.items() if not p}
        right = {p: c for (p, r), c in terms.items() if not r}
        sw.check(left == {f.ids: 1} and right == {f.ids: 1}, f)
    return sw.done()


def check_grading(max_leaves: int = 6) -> CheckResult:
    sw = _Sweep("hopf", "grading")
    for f in forests_upto(max_leaves):
        ok = all(Forest.from_ids(p).n_leaves + Forest.from_ids(r).n_leaves == f.n_leaves
                 for p, r in forest_terms(f.ids))
        mass = sum(forest_terms(f.ids).values())
        sw.check(ok and mass == 2 ** f.n_leaves, f)
    return sw.done()


def _convolve(f: Forest, side: str) -> dict:
    out: dict = {}
    for (p, r), c in forest_terms(f.ids).items():
        s_part, keep = (p, r) if side == "left" else (r, p)
        for g, d in _antipode_forest(s_part).items():
            k = tuple(sorted(g + keep))
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


def check_antipode_axiom(max_leaves: int = 6) -> CheckResult:
    sw = _Sweep("hopf", "antipode-axiom")
    for f in forests_upto(max_leaves):
        expected = {(): 1} if not f.ids else {}
        sw.check(_convolve(f, "left") == expected and _convolve(f, "right") == expected, f)
    return sw.done()


def check_total_cuts(max_leaves: int = 7) -> CheckResult:
    sw = _Sweep("hopf", "antipode-total-cuts")
    for t in trees_upto(max_leaves):
        s = antipode(t)
        ok = s == antipode_by_total_cuts(t)
        ok = ok and all((c > 0) == (len(f) % 2 == 0) for f, c in s.items())
        ok = ok and s.abs_mass() == 3 ** (t.n_leaves - 1)
        sw.check(ok, lambda t=t, s=s: f"{t}: S = {s}")
    return sw.done()


def check_subset_bijection(max_leaves: int = 6) -> CheckResult:
    sw = _Sweep("hopf", "subset-bijection")
    for t in labelled_trees_upto(max_leaves):
        terms = coproduct(t).items()
        subsets = {frozenset(x for tr in p.trees for x in leaf_labels(tr)) for (p, _), _c in terms}
        ok = (len(terms) == 2 ** t.n_leaves and all(c == 1 for _, c in terms)
              and len(subsets) == 2 ** t.n_leaves)
        sw.check(ok, t)
    return sw.done()


def check_comb_formula(max_n: int = 8) -> CheckResult:
    sw = _Sweep("hopf", "comb-formula")
    for n in range(2, max_n + 1):
        direct = coproduct(comb_tree(n))
        sw.check(direct == comb_coproduct_formula(n) == comb_coproduct_formula(n, True), f"C_{n}")
    return sw.done()


def check_character(max_leaves: int = 6) -> CheckResult:
    sw = _Sweep("hopf", "character-morphism")
    for f in forests_upto(max_leaves):
        sw.check(character_tensor(coproduct(f)) == binomial_coproduct(leaf_character(f)), f)
    return sw.done()


# -- prelie -----------------------------------------------------------------


def _tree_triples(total: int):
    trees = list(trees_upto(total))
    for t, s, r in product(trees, repeat=3):
        if t.n_leaves + s.n_leaves + r.n_leaves <= total:
            yield t, s, r


def check_vinberg(max_total: int = 7) -> CheckResult:
    sw = _Sweep("prelie", "vinberg")
    for t, s, r in _tree_triples(max_total):
        if s.id <= r.id:
            sw.check(associator(t, s, r) == associator(t, r, s), f"{t} | {s} | {r}")
    return sw.done()


def check_prelie_goldens() -> CheckResult:
    sw = _Sweep("prelie", "cherry-bullet")
    cherry, c3 = comb_tree(2), comb_tree(3)
    sw.check(triangle(cherry, BULLET) == 3 * LinComb.of(c3), "∧ ◁ •")
    sw.check(triangle(BULLET, cherry) == LinComb.of(c3), "• ◁ ∧")
    return sw.done()


def _forest_triples(total: int):
    forests = list(forests_upto(total))
    for a, b, c in product(forests, repeat=3):
        if a.n_leaves + b.n_leaves + c.n_leaves <= total:
            yield a, b, c


def check_star_associativity(max_total: int = 5) -> CheckResult:
    sw = _Sweep("prelie", "star-associativity")
    for a, b, c in _forest_triples(max_total):
        la, lb, lc = LinComb.of(a), LinComb.of(b), LinComb.of(c)
        sw.check(star(star(la, lb), lc) == star(la, star(lb, lc)), f"{a} | {b} | {c}")
    return sw.done()


def check_star_random(seed: int = 0, count: int = 200, max_total: int = 6) -> CheckResult:
    sw = _Sweep("prelie", "star-associativity-random")
    rng = random.Random(seed)
    triples = list(_forest_triples(max_total))
    for a, b, c in rng.sample(triples, min(count, len(triples))):
        la, lb, lc = LinComb.of(a), LinComb.of(b), LinComb.of(c)
        sw.check(star(star(la, lb), lc) == star(la, star(lb, lc)), f"{a} | {b} | {c}")
    return sw.done()


def check_guin_oudom(max_total: int = 6) -> CheckResult:
    """Graft enumeration against the recursive rules, plus the two defining identities."""
    sw = _Sweep("prelie", "guin-oudom")
    forests = list(forests_upto(max_total))
    for a, b in product(forests, repeat=2):
        if a.n_leaves + b.n_leaves <= max_total:
            sw.check(triangle_monomials(a, b) == triangle_recursive(a, b), f"{a} ◁ {b}")
    trees = list(trees_upto(max_total))
    for x, y in product(trees, repeat=2):
        for a in forests:
            if x.n_leaves + y.n_leaves + a.n_leaves > max_total:
                continue
            lhs = triangle(x, a.union(Forest([y])))
            rhs = triangle(triangle(x, a), y) - triangle(x, triangle(a, y))
            sw.check(lhs == rhs, f"X={x} A={a} Y={y}")
    for a, b, c in _forest_triples(max_total):
        if not a or not b:
            continue
        rhs = LinComb()
        for (c1, c2), m in shuffle_coproduct(c).items():
            rhs = rhs + m * _product(triangle(a, c1), triangle(b, c2))
        sw.check(triangle(a.union(b), c) == rhs, f"A={a} B={b} C={c}")
    return sw.done()


def _product(x: LinComb, y: LinComb) -> LinComb:
    out: dict = {}
    for kx, cx in x._t.items():
        for ky, cy in y._t.items():
            k = tuple(sorted(kx + ky))
            out[k] = out.get(k, 0) + cx * cy
    return LinComb._wrap(out)


def check_shuffle(max_leaves: int = 6) -> CheckResult:
    sw = _Sweep("prelie", "shuffle-coalgebra")
    for f in forests_upto(max_leaves):
        d = shuffle_coproduct(f)
        swapped = Tensor._wrap({(r, l): c for (l, r), c in d._t.items()}, rank=2)
        left = _apply_shuffle(d, 0)
        right = _apply_shuffle(d, 1)
        sw.check(d == swapped and left == right, f)
    return sw.done()


def _apply_shuffle(t: Tensor, leg: int) -> Tensor:
    out: dict = {}
    for (l, r), c in t._t.items():
        target = l if leg == 0 else r
        for (x, y), m in shuffle_coproduct(LinComb._wrap({target: 1}))._t.items():
            k = (x, y, r) if leg == 0 else (l, x, y)
            out[k] = out.get(k, 0) + c * m
    return Tensor._wrap(out, rank=3)


def check_bialgebra(max_total: int = 4) -> CheckResult:
    """Ш(a ∗ b) = Ш(a) ∗ Ш(b) with ∗ acting leg by leg."""
    sw = _Sweep("prelie", "bialgebra-compatibility")
    forests = list(forests_upto(max_total))
    for a, b in product(forests, repeat=2):
        if a.n_leaves + b.n_leaves > max_total:
            continue
        lhs = shuffle_coproduct(star(a, b))
        out: dict = {}
        for (a1, a2), c in shuffle_coproduct(a)._t.items():
            for (b1, b2), d in shuffle_coproduct(b)._t.items():
                left = star(LinComb._wrap({a1: 1}), LinComb._wrap({b1: 1}))
                right = star(LinComb._wrap({a2: 1}), LinComb._wrap({b2: 1}))
                for k1, v1 in left._t.items():
                    for k2, v2 in right._t.items():
                        out[(k1, k2)] = out.get((k1, k2), 0) + c * d * v1 * v2
        sw.check(lhs == Tensor._wrap(out, rank=2), f"{a} | {b}")
    return sw.done()


def check_homogeneity(max_total: int = 5) -> CheckResult:
    sw = _Sweep("prelie", "homogeneity")
    forests = list(forests_upto(max_total))
    for a, b in product(forests, repeat=2):
        if a.n_leaves + b.n_leaves <= max_total:
            sw.check(star(a, b).degrees() <= {a.n_leaves + b.n_leaves}, f"{a} ∗ {b}")
    for f in forests:
        if f:
            sw.check(growth(f).degrees() == {f.n_leaves + 1}, f"grow {f}")
            sw.check(pruning(f).degrees() <= {f.n_leaves - 1}, f"prune {f}")
    return sw.done()


def check_pruning_factorial(max_leaves: int = 7) -> CheckResult:
    sw = _Sweep("prelie", "pruning-factorial")
    for t in trees_upto(max_leaves):
        x = LinComb.of(t)
        for _ in range(t.n_leaves - 1):
            x = pruning(x)
        sw.check(x == factorial(t.n_leaves) * LinComb.of(BULLET), t)
    return sw.done()


def check_growth_series() -> CheckResult:
    sw = _Sweep("prelie", "growth-series")
    expected = [
        {"*": 1},
        {"(* *)": 1},
        {"((* *) *)": 3},
        {"(((* *) *) *)": 12, "((* *) (* *))": 3},
        {"((((* *) *) *) *)": 60, "(((* *) (* *)) *)": 15, "(((* *) *) (* *))": 30},
    ]
    x = LinComb.of(BULLET)
    for k, exp in enumerate(expected):
        if k:
            x = growth(x)
        sw.check(x == LinComb(exp), lambda k=k, x=x: f"𝔑^{k}(•) = {x}")
    return sw.done()


# -- duality ----------------------------------------------------------------


def check_duality(max_leaves: int = 5) -> CheckResult:
    sw = _Sweep("duality", "star-cut-duality")
    for rep in duality_sweep(max_leaves):
        sw.check(rep.passed, rep)
    return sw.done()


def check_duality_example() -> CheckResult:
    sw = _Sweep("duality", "worked-example")
    rep = duality_check("(* *)", "*, *, (* *)", "((((* *) *) (* *)) *)")
    sw.check(rep.n_count == 14 and rep.m_count == 7 and rep.lhs == rep.rhs == 56, rep)
    sw.result.detail = str(rep)
    return sw.done()


def check_shuffle_adjunction(max_leaves: int = 5) -> CheckResult:
    """⟨Ш(F), G ⊗ H⟩ = ⟨F, G ⊔ H⟩."""
    sw = _Sweep("duality", "shuffle-adjunction")
    forests = list(forests_upto(max_leaves))
    for f in forests:
        d = shuffle_coproduct(f)
        for g in forests:
            for h in enumerate_forests(f.n_leaves - g.n_leaves) if g.n_leaves <= f.n_leaves else []:
                lhs = pair_tensor(d, Tensor([((g, h), 1)]))
                sw.check(lhs == pair(f, g.union(h)), f"F={f} G={g} H={h}")
    return sw.done()


def check_adjointness(max_leaves: int = 7) -> CheckResult:
    sw = _Sweep("duality", "growth-pruning-adjoint")
    failures = adjointness_failures(max_leaves)
    sw.check(not failures, lambda: str(failures[0]))
    return sw.done()


# -- exp --------------------------------------------------------------------


def check_exp_coefficients(degree: int = 6) -> CheckResult:
    sw = _Sweep("exp", "inverse-symmetry")
    w = _exponential(degree)
    for t in trees_upto(degree):
        sw.check(w[t] == Fraction(1, t.aut_order), lambda t=t: f"{t}: {w[t]}")
    return sw.done()


def check_exp_display() -> CheckResult:
    sw = _Sweep("exp", "low-degree-terms")
    w = _exponential(5)
    expected = ["1 *", "1/2 (* *)", "1/2 ((* *) *)", "1/2 (((* *) *) *)", "1/8 ((* *) (* *))",
                "1/2 ((((* *) *) *) *)", "1/8 (((* *) (* *)) *)", "1/4 (((* *) *) (* *))"]
    got = [f"{c if isinstance(c, int) else f'{c.numerator}/{c.denominator}'} {f}"
           for f, c in w.items()]
    sw.check(got == expected, lambda: str(w))
    return sw.done()


def _exponential(degree: int) -> LinComb:
    from binhopf.prelie import prelie_exponential

    return prelie_exponential(degree)


# -- suites -----------------------------------------------------------------


def run_suite(name: str, max_leaves: int | None = None, degree: int | None = None,
              seed: int = 0) -> list[CheckResult]:
    """Run one suite (or ``"all"``). ``max_leaves`` caps every sweep; ``degree`` drives ``exp``."""
    if name == "all":
        out = []
        for s in SUITES:
            out += run_suite(s, max_leaves, degree, seed)
        return out
    cap = (lambda d: d) if max_leaves is None else (lambda d: min(d, max_leaves))
    if name == "hopf":
        return [
            check_coassociativity(cap(8), cap(5)),
            check_counit(cap(6)),
            check_grading(cap(6)),
            check_antipode_axiom(cap(6)),
            check_total_cuts(cap(7)),
            check_subset_bijection(cap(6)),
            check_comb_formula(max(2, cap(8))),
            check_character(cap(6)),
        ]
    if name == "prelie":
        return [
            check_prelie_goldens(),
            check_vinberg(cap(7)),
            check_star_associativity(cap(5)),
            check_star_random(seed, 200, cap(6)),
            check_guin_oudom(cap(6)),
            check_shuffle(cap(6)),
            check_bialgebra(cap(4)),
            check_homogeneity(cap(5)),
            check_pruning_factorial(cap(7)),
            check_growth_series(),
        ]
    if name == "duality":
        bound = LIMITS.max_duality_leaves if max_leaves is None else max_leaves
        return [
            check_duality_example(),
            check_duality(bound),
            check_shuffle_adjunction(cap(5)),
            check_adjointness(cap(7)),
        ]
    if name == "exp":
        return [check_exp_display(), check_exp_coefficients(degree or 6)]
    raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")

