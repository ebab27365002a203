"""Exact counting of walks on m-regular trees and weighted Dyck paths.

The same numbers are computed three independent ways and verified to agree
coefficient by coefficient:

* a dynamic-programming recurrence over exact rationals
  (:func:`build_table`),
* coefficient extraction from closed-form algebraic generating functions
  (:func:`tree_gf`, :func:`poids_gf`),
* brute-force enumeration oracles: all lattice paths, walks on an
  explicitly built tree, and free-group word products
  (:mod:`treewalks.oracles`).

All arithmetic is over arbitrary-precision integers and exact rationals;
no floating point appears anywhere in the computation path.
"""

from .genfunc import dyck_gf, irreducible_gf, poids_gf, tree_gf
from .oracles import (
    DEFAULT_MAX_STATES,
    FeasibilityError,
    LatticePath,
    TruncatedTree,
    enumerate_dyck,
    free_group_count,
    irreducible_components,
    is_reduced,
    reduce_word,
    tree_walk_count,
    tree_walk_distribution,
    weight_and_poids,
)
from .rationals import arith, format_number, parse_number, rational
from .recurrence import WalkTable, WeightConfig, build_table, mass_check, tree_weights
from .series import PowerSeries

__all__ = [
    "DEFAULT_MAX_STATES",
    "FeasibilityError",
    "LatticePath",
    "PowerSeries",
    "TruncatedTree",
    "WalkTable",
    "WeightConfig",
    "arith",
    "build_table",
    "dyck_gf",
    "enumerate_dyck",
    "format_number",
    "free_group_count",
    "irreducible_components",
    "irreducible_gf",
    "is_reduced",
    "mass_check",
    "parse_number",
    "poids_gf",
    "rational",
    "reduce_word",
    "tree_gf",
    "tree_walk_count",
    "tree_walk_distribution",
    "tree_weights",
    "weight_and_poids",
]

__version__ = "0.1.0"
