"""Exact pinnacle-set statistics of permutations."""

from .blocks import (
    Block, Forest, Tree, block_count, block_of, concat_count, fast_count, forest_decode,
    forest_encode, half_identity_check, pinnacles_of, segregated_count,
)
from .comb_kernel import Arithmetic, Count, KernelTables, fast_pow, parse_mode, stirling2
from .orderings import (
    compactify, count_admissible_orderings, count_orderings, reduction_operator,
)
from .perm_core import (
    CyclicPermutation, Permutation, PinnacleCandidate, cyclic_pinnacles_and_vales,
    is_admissible, pinnacle_set, relative_order, standardize,
)
from .walks import (
    DecoratedMotzkinWalk, MarkedCyclicPermutation, enumerate_modified_dyck, f_map, g_map,
    weighted_sum_lhs, weighted_walk_sum,
)

__version__ = "0.1.0"

__all__ = [
    "Arithmetic", "Block", "Count", "CyclicPermutation", "DecoratedMotzkinWalk", "Forest",
    "KernelTables", "MarkedCyclicPermutation", "Permutation", "PinnacleCandidate", "Tree",
    "block_count", "block_of", "compactify", "concat_count", "count_admissible_orderings",
    "count_orderings", "cyclic_pinnacles_and_vales", "enumerate_modified_dyck", "f_map",
    "fast_count", "fast_pow", "forest_decode", "forest_encode", "g_map", "half_identity_check",
    "is_admissible", "parse_mode", "pinnacle_set", "pinnacles_of", "reduction_operator",
    "relative_order", "segregated_count", "standardize", "stirling2", "weighted_sum_lhs",
    "weighted_walk_sum",
]
