"""
Kernel Computation - frobenius
ker D for an A-linear map D on B = Σ A·t_μ

Three steps: syzygies of the images D(t_μ) over the ambient ring, the
intersection of that syzygy module with A^r, and c = Σ b_μ(f)·t_μ for every
intersection generator b.
"""

import logging
from typing import Optional, Sequence

from ..errors import CertificationError
from ..groebner.module import FreeModuleElement, combine
from ..groebner.syzygy import syzygies
from ..poly_core.polynomial import Polynomial, polynomial_sum
from ..subalgebra.module_intersect import module_intersect_with_Ar
from ..subalgebra.presentation import SubalgebraPresentation

logger = logging.getLogger(__name__)


def compute_kernel(
    algebra: SubalgebraPresentation,
    basis: Sequence[Polynomial],
    images: Sequence[FreeModuleElement],
    component_shifts: Optional[Sequence[int]] = None,
    vector_shifts: Optional[Sequence[int]] = None,
    derivation_names: Sequence[str] = (),
) -> list[Polynomial]:
    """
    A-module generators of ker D

    The caller guarantees that D is A-linear on Σ A·t_μ; only D(t_μ) is used.

    Args:
        algebra: The coefficient algebra A
        basis: t_1..t_r
        images: D(t_1)..D(t_r), one module element each
        component_shifts: Degree shifts of the image components
        vector_shifts: Degrees of the t_μ
        derivation_names: When D is the map of partial derivatives in these
            variables, every output is also checked directly

    Returns:
        Distinct nonzero c with D(c) = 0, re-verified through the images
    """
    if len(basis) != len(images):
        raise ValueError("one image per basis element is required")
    if not basis:
        return []
    ambient = algebra.ambient

    syz = syzygies(images, component_shifts=component_shifts, vector_shifts=vector_shifts)
    logger.info(f"🔍 [KERNEL] Step 1: {len(syz)} syzygies of {len(images)} images")

    intersection = module_intersect_with_Ar(algebra, syz)
    logger.info(f"🔍 [KERNEL] Step 2: {len(intersection)} generators of the intersection with A^{len(basis)}")

    kernel: list[Polynomial] = []
    for b in intersection:
        coefficients = [algebra.evaluate(c) for c in b.components]
        c = polynomial_sum(ambient, (a * t for a, t in zip(coefficients, basis)))
        if c.is_zero() or c in kernel:
            continue
        if not combine(list(images), coefficients).is_zero():
            raise CertificationError(f"kernel element {c} is not mapped to zero")
        for name in derivation_names:
            if c.derivative(name):
                raise CertificationError(f"kernel element {c} has a nonzero derivative in {name}")
        kernel.append(c)
    logger.info(f"✅ [KERNEL] Step 3: {len(kernel)} kernel generators")
    return kernel
