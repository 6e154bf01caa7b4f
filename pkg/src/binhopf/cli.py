"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource limit exceeded. ``--json`` prints one JSON document per line, each
carrying ``"schema": "binhopf/1"``.
"""
from __future__ import annotations

import argparse
import json
import sys

from binhopf import duality, hopf, verify
from binhopf.config import LIMITS
from binhopf.errors import (
    BadIndex, BadLabel, MalformedTree, NonBinaryInput, ParseError, ResourceLimit,
)
from binhopf.linear import LinComb, Tensor, as_lincomb
from binhopf.prelie import (
    growth, insert_at_edge, prelie_exponential, pruning, shuffle_coproduct, star, triangle,
)
from binhopf.text import parse_forest, parse_tree
from binhopf.trees import enumerate_forests, enumerate_trees

SCHEMA = "binhopf/1"


def _emit(args, command: str, value, text: str | None = None):
    if args.json:
        doc = {"schema": SCHEMA, "command": command}
        if isinstance(value, (LinComb, Tensor)):
            doc.update(value.to_json())
        else:
            doc["result"] = value
        print(json.dumps(doc, ensure_ascii=False))
    else:
        print(text if text is not None else str(value))


def _cmd_canon(args):
    _emit(args, "canon", str(parse_tree(args.tree)))


def _cmd_sym(args):
    _emit(args, "sym", parse_forest(args.forest).aut_order)


def _cmd_coproduct(args):
    _emit(args, "coproduct", hopf.coproduct(as_lincomb(args.forest)))


def _cmd_antipode(args):
    _emit(args, "antipode", hopf.antipode(as_lincomb(args.forest)))


def _cmd_insert(args):
    t, s = parse_tree(args.tree), parse_tree(args.subtree)
    if args.edge is not None:
        _emit(args, "insert", str(insert_at_edge(t, args.edge, s)))
        return
    rows = [(e, str(insert_at_edge(t, e, s))) for e in range(t.n_edges + 1)]
    if args.json:
        _emit(args, "insert", [{"edge": e, "tree": x} for e, x in rows])
    else:
        print("\n".join(f"{e}: {x}" for e, x in rows))


def _cmd_prelie(args):
    _emit(args, "prelie", triangle(as_lincomb(args.left), as_lincomb(args.right)))


def _cmd_star(args):
    _emit(args, "star", star(as_lincomb(args.left), as_lincomb(args.right)))


def _cmd_shuffle(args):
    _emit(args, "shuffle", shuffle_coproduct(as_lincomb(args.forest)))


def _cmd_pair(args):
    value = duality.pair_linear(as_lincomb(args.left), as_lincomb(args.right))
    _emit(args, "pair", str(value))


def _cmd_grow(args):
    _emit(args, "grow", growth(as_lincomb(args.forest)))


def _cmd_prune(args):
    _emit(args, "prune", pruning(as_lincomb(args.forest)))


def _cmd_exp(args):
    _emit(args, "exp", prelie_exponential(args.degree))


def _cmd_enumerate(args):
    items = enumerate_trees(args.n) if args.kind == "trees" else enumerate_forests(args.n)
    if args.json:
        _emit(args, "enumerate", {"kind": args.kind, "n": args.n, "count": len(items),
                                  "items": [str(x) for x in items]})
    else:
        print("\n".join(str(x) for x in items))


def _cmd_verify(args):
    suite = args.suite_flag or args.suite or "all"
    if suite not in ("all",) + verify.SUITES:
        raise _Usage(f"unknown suite {suite!r}")
    if args.max_leaves is not None and suite == "duality" and args.max_leaves > LIMITS.max_duality_leaves:
        raise ResourceLimit(f"max_leaves={args.max_leaves} exceeds max_duality_leaves="
                            f"{LIMITS.max_duality_leaves}")
    max_leaves = args.max_leaves
    results = []
    for name in (verify.SUITES if suite == "all" else (suite,)):
        cap = max_leaves
        if name == "duality" and cap is not None:
            cap = min(cap, LIMITS.max_duality_leaves)
        results += verify.run_suite(name, cap, args.degree, args.seed)
    failed = [r for r in results if not r.passed]
    if args.json:
        for r in results:
            print(json.dumps(dict({"schema": SCHEMA}, **r.to_json()), ensure_ascii=False))
        if suite == "duality" and args.max_leaves is not None:
            for rep in duality.duality_sweep(min(args.max_leaves, LIMITS.max_duality_leaves)):
                print(json.dumps(dict({"schema": SCHEMA, "report": "duality"}, **rep.to_json()),
                                 ensure_ascii=False))
        print(json.dumps({"schema": SCHEMA, "summary": True, "checks": len(results),
                          "passed": len(results) - len(failed), "failed": len(failed)}))
    else:
        for r in results:
            print(r)
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="binhopf", description="Binary forest Hopf algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_text, *positional):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        for arg, h in positional:
            sp.add_argument(arg, help=h)
        sp.add_argument("--json", action="store_true", help="print JSON (default: text)")
        sp.set_defaults(func=fn)
        return sp

    F = ("forest", "forest or linear combination, e.g. '(a b), c' or '2 (* *) - 1 *'")
    add("canon", _cmd_canon, "print the canonical form of a tree", ("tree", "tree text"))
    add("sym", _cmd_sym, "symmetry coefficient s_F", ("forest", "forest text"))
    add("coproduct", _cmd_coproduct, "coproduct by binary-admissible cuts", F)
    add("antipode", _cmd_antipode, "antipode", F)
    sp = add("insert", _cmd_insert, "insert a tree at one edge (or list every edge)",
             ("tree", "base tree"), ("subtree", "tree to insert"))
    sp.add_argument("--edge", type=int, default=None,
                    help="edge index, 0 = ghost root edge (default: list all edges)")
    add("prelie", _cmd_prelie, "pre-Lie product / simultaneous grafting", ("left", "base"),
        ("right", "inserted"))
    add("star", _cmd_star, "star product", ("left", "base"), ("right", "inserted"))
    add("shuffle", _cmd_shuffle, "shuffle coproduct", F)
    add("pair", _cmd_pair, "symmetric pairing", ("left", "first"), ("right", "second"))
    add("grow", _cmd_grow, "growth operator (add one leaf everywhere)", F)
    add("prune", _cmd_prune, "pruning operator (remove one leaf everywhere)", F)
    sp = add("exp", _cmd_exp, "truncated pre-Lie exponential W(*)")
    sp.add_argument("--degree", type=int, required=True, help="highest degree kept")
    sp = add("enumerate", _cmd_enumerate, "list unlabelled trees or forests with n leaves")
    sp.add_argument("kind", choices=("trees", "forests"))
    sp.add_argument("n", type=int)
    sp = add("verify", _cmd_verify, "run property suites")
    sp.add_argument("suite", nargs="?", default=None, help="all, hopf, prelie, duality or exp")
    sp.add_argument("--suite", dest="suite_flag", default=None,
                    choices=("all",) + verify.SUITES, help="same as the positional (default: all)")
    sp.add_argument("--max-leaves", type=int, default=None,
                    help="cap every sweep at this many leaves (default: per-check bounds)")
    sp.add_argument("--degree", type=int, default=None, help="degree for the exp suite (default: 6)")
    sp.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default: 0)")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args)
    except (ParseError, MalformedTree, BadLabel, NonBinaryInput, BadIndex, _Usage) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
