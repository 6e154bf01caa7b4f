"""Size bounds guarding the exhaustive enumerations.

The defaults keep every operation at desk scale; raise them on
:data:`LIMITS` (it is a plain mutable dataclass) if you need more.
"""
from dataclasses import dataclass


@dataclass
class Limits:
    max_tree_leaves: int = 12
    max_forest_leaves: int = 10
    max_cut_leaves: int = 16
    max_grafts: int = 10**7
    max_exp_degree: int = 8
    max_iterated: int = 8
    max_duality_leaves: int = 5


LIMITS = Limits()
