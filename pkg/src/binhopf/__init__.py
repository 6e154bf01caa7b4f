"""Hopf algebra of nonplanar rooted binary forests.

Coproduct by binary-admissible cuts, antipode, the dual edge-insertion pre-Lie
structure with its star product, the symmetric pairing between them, and the
growth/pruning operators with the pre-Lie exponential. All coefficients are exact.

>>> from binhopf import antipode
>>> print(antipode("(a b)"))
-1 (a b) + 2 a, b
"""
from binhopf._backend import BACKEND
from binhopf.config import LIMITS, Limits
from binhopf.duality import (
    DualityReport, adjointness_check, duality_check, duality_sweep, pair, pair_linear, pair_tensor,
)
from binhopf.errors import (
    BadIndex, BadLabel, BinHopfError, MalformedTree, NonBinaryInput, ParseError, ResourceLimit,
)
from binhopf.hopf import (
    TOTAL_CUT, BinaryAdmissibleCut, BinaryTotalCut, CutSubset, antipode, antipode_by_total_cuts,
    comb_coproduct_formula, comb_tree, coproduct, coproduct_tree, counit, cut_for_subset,
    enumerate_binary_admissible_cuts, enumerate_total_cuts, iterated_coproduct, leaf_character,
)
from binhopf.linear import (
    LinComb, Tensor, coefficient_of, lc_add, lc_multiply, lc_scale, parse_lincomb, tensor, tensor3,
)
from binhopf.prelie import (
    E0, Graft, associator, enumerate_grafts, growth, insert_at_edge, lie_bracket, prelie,
    prelie_exponential, pruning, shuffle_coproduct, star, triangle, triangle_monomials,
    triangle_recursive,
)
from binhopf.text import parse_forest, parse_tree
from binhopf.trees import (
    BULLET, EMPTY_FOREST, EdgeRef, Forest, Tree, aut_order_forest, canonicalize,
    contract_to_binary, enumerate_forests, enumerate_labelled_trees, enumerate_trees, leaf, node,
    remove_leaf,
)

__all__ = [
    "BACKEND", "LIMITS", "Limits",
    "DualityReport", "adjointness_check", "duality_check", "duality_sweep", "pair", "pair_linear",
    "pair_tensor",
    "BadIndex", "BadLabel", "BinHopfError", "MalformedTree", "NonBinaryInput", "ParseError",
    "ResourceLimit",
    "TOTAL_CUT", "BinaryAdmissibleCut", "BinaryTotalCut", "CutSubset", "antipode",
    "antipode_by_total_cuts", "comb_coproduct_formula", "comb_tree", "coproduct", "coproduct_tree",
    "counit", "cut_for_subset", "enumerate_binary_admissible_cuts", "enumerate_total_cuts",
    "iterated_coproduct", "leaf_character",
    "LinComb", "Tensor", "coefficient_of", "lc_add", "lc_multiply", "lc_scale", "parse_lincomb",
    "tensor", "tensor3",
    "E0", "Graft", "associator", "enumerate_grafts", "growth", "insert_at_edge", "lie_bracket",
    "prelie", "prelie_exponential", "pruning", "shuffle_coproduct", "star", "triangle",
    "triangle_monomials", "triangle_recursive",
    "parse_forest", "parse_tree",
    "BULLET", "EMPTY_FOREST", "EdgeRef", "Forest", "Tree", "aut_order_forest", "canonicalize",
    "contract_to_binary", "enumerate_forests", "enumerate_labelled_trees", "enumerate_trees",
    "leaf", "node", "remove_leaf",
]
