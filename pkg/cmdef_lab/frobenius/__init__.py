"""
Frobenius Invariants - cmdef_lab
Kernels of A-linear maps, B ∩ K[X^p, Y] and twisted invariant rings
"""

from .problem import FrobeniusProblem, PUBLISHED_COUNTS, builtin_generators, builtin_problem
from .kernel import compute_kernel
from .intersect import tensor_basis, derivation_images, coefficient_algebra, intersect_xp_y
from .invariants import (
    contract,
    expand,
    interreduce,
    frobenius_invariants,
    compare_with_published,
    published_generators_2_3,
)

__all__ = [
    "FrobeniusProblem",
    "PUBLISHED_COUNTS",
    "builtin_generators",
    "builtin_problem",
    "compute_kernel",
    "tensor_basis",
    "derivation_images",
    "coefficient_algebra",
    "intersect_xp_y",
    "contract",
    "expand",
    "interreduce",
    "frobenius_invariants",
    "compare_with_published",
    "published_generators_2_3",
]
