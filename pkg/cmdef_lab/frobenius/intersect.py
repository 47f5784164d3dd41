"""
Intersection with K[X^p, Y] - frobenius
Algebra generators of B ∩ K[X^p, Y] for B = K[f_1..f_k, g_1..g_l]

With A = K[f_1^p..f_k^p, g_1..g_l] and T = {f^e : 0 <= e_i < p}, B is the
A-module spanned by T, and B ∩ K[X^p, Y] is the kernel of the A-linear map
D(h) = (∂h/∂X_1, ..., ∂h/∂X_n).
"""

import logging
from itertools import product as cartesian

from ..config import settings
from ..errors import CertificationError
from ..groebner.module import FreeModuleElement
from ..poly_core.polynomial import Polynomial
from ..subalgebra.presentation import SubalgebraPresentation
from .kernel import compute_kernel
from .problem import FrobeniusProblem

logger = logging.getLogger(__name__)


def tensor_basis(problem: FrobeniusProblem) -> list[Polynomial]:
    """Products f_1^e_1 ··· f_k^e_k with 0 <= e_i < p in lexicographic exponent order"""
    fs = problem.f_generators
    rank = problem.tensor_rank
    if rank > settings.tensor_basis_warn_bound:
        logger.warning(
            f"⚠️ [FROBENIUS] r = p^k = {rank} exceeds the bound {settings.tensor_basis_warn_bound}; "
            f"expect a long syzygy computation"
        )
    basis = []
    for exps in cartesian(range(problem.p), repeat=len(fs)):
        t = Polynomial.constant(problem.ring, 1)
        for f, e in zip(fs, exps):
            if e:
                t = t * f ** e
        basis.append(t)
    return basis


def derivation_images(problem: FrobeniusProblem, basis: list[Polynomial]) -> list[FreeModuleElement]:
    return [
        FreeModuleElement(problem.ring, tuple(t.derivative(x) for x in problem.x_block))
        for t in basis
    ]


def coefficient_algebra(problem: FrobeniusProblem) -> SubalgebraPresentation:
    """A = K[f^p, g] with tags A1, A2, ..."""
    gens = [f ** problem.p for f in problem.f_generators] + list(problem.g_generators)
    return SubalgebraPresentation(gens, tag_stem="A", ambient=problem.ring)


def intersect_xp_y(problem: FrobeniusProblem, check_membership: bool = False) -> list[Polynomial]:
    """
    Generators of B ∩ K[X^p, Y]: the f_i^p, the g_i and the kernel generators

    Args:
        problem: The algebra B and the variable split
        check_membership: Also confirm that every output lies in B

    Returns:
        Distinct nonconstant generators, each with vanishing X-derivatives
    """
    algebra = coefficient_algebra(problem)
    basis = tensor_basis(problem)
    images = derivation_images(problem, basis)
    ring = problem.ring
    component_shifts = [ring.scaled_weights[ring.index(x)] for x in problem.x_block]
    vector_shifts = [max(t.scaled_degree(), 0) for t in basis]
    kernel = compute_kernel(
        algebra,
        basis,
        images,
        component_shifts=component_shifts,
        vector_shifts=vector_shifts,
        derivation_names=problem.x_block,
    )

    outputs: list[Polynomial] = []
    for h in list(algebra.generators) + kernel:
        if h.is_constant() or h in outputs:
            continue
        outputs.append(h)
    for h in outputs:
        if any(h.derivative(x) for x in problem.x_block):
            raise CertificationError(f"output {h} does not lie in K[X^p, Y]")
    if check_membership:
        source = SubalgebraPresentation(problem.f_generators + problem.g_generators, ambient=ring)
        for h in outputs:
            if not source.member(h):
                raise CertificationError(f"output {h} does not lie in B")
    logger.info(f"✅ [FROBENIUS] B ∩ K[X^p,Y] generated by {len(outputs)} elements")
    return outputs
