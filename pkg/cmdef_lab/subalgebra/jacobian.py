"""
Algebraic Independence - subalgebra
Jacobian criterion and the degree-by-degree search for a minimal relation
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from ..config import settings
from ..poly_core.linalg import nullspace, smallest_support
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import Monomial
from .presentation import SubalgebraPresentation

logger = logging.getLogger(__name__)


class JacobianVerdict(str, Enum):
    """Outcome of the Jacobian criterion"""
    INDEPENDENT = "independent"
    DEPENDENT = "dependent"
    INCONCLUSIVE = "inconclusive"


def jacobian_rank(polynomials: Sequence[Polynomial]) -> int:
    """
    Rank of the Jacobian matrix over the fraction field

    Fraction-free Bareiss elimination: every division by the previous pivot is
    an exact polynomial division.
    """
    if not polynomials:
        return 0
    ring = polynomials[0].ring
    matrix = [[f.derivative(name) for name in ring.variables] for f in polynomials]
    rows, cols = len(matrix), ring.nvars
    previous = Polynomial.constant(ring, 1)
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot_row = next((r for r in range(rank, rows) if matrix[r][col]), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, rows):
            lead = matrix[r][col]
            for c in range(col + 1, cols):
                matrix[r][c] = (matrix[r][c] * pivot - lead * matrix[rank][c]).exact_divide(previous)
            matrix[r][col] = Polynomial.zero(ring)
        previous = pivot
        rank += 1
    return rank


def jacobian_independent(polynomials: Sequence[Polynomial]) -> JacobianVerdict:
    """
    Jacobian criterion for algebraic independence

    Full rank proves independence in any characteristic. A rank drop proves
    dependence only in characteristic 0; over F_p it decides nothing
    (X^p has zero Jacobian yet is transcendental).
    """
    polynomials = list(polynomials)
    if not polynomials:
        return JacobianVerdict.INDEPENDENT
    rank = jacobian_rank(polynomials)
    logger.debug(f"🧮 [JACOBIAN] rank {rank} for {len(polynomials)} polynomials")
    if rank == len(polynomials):
        return JacobianVerdict.INDEPENDENT
    if polynomials[0].field.characteristic == 0:
        return JacobianVerdict.DEPENDENT
    return JacobianVerdict.INCONCLUSIVE


def find_minimal_relation(polynomials: Sequence[Polynomial], degree_bound: Optional[int] = None) -> Optional[Polynomial]:
    """
    Lowest-degree algebraic relation among homogeneous polynomials

    Args:
        polynomials: Homogeneous f_1..f_k of positive degree
        degree_bound: Largest weighted degree searched (settings.relation_degree_bound by default)

    Returns:
        A tag polynomial r with r(f) = 0, or None when no relation exists up to the bound
    """
    if not polynomials:
        return None
    for f in polynomials:
        if not f.is_homogeneous():
            raise ValueError(f"relation search needs homogeneous input, got {f}")
    if degree_bound is None:
        degree_bound = settings.relation_degree_bound
    presentation = SubalgebraPresentation(polynomials)
    tag_ring = presentation.tag_ring
    scale = tag_ring.weight_scale
    fld = tag_ring.field
    for scaled_degree in range(1, degree_bound * scale + 1):
        candidates = presentation.tag_monomials(Fraction(scaled_degree, scale))
        if len(candidates) < 2:
            continue
        row_of: dict[Monomial, int] = {}
        rows: list[dict[int, object]] = []
        for col, m in enumerate(candidates):
            for exps, coeff in presentation.product(m).terms.items():
                if exps not in row_of:
                    row_of[exps] = len(rows)
                    rows.append({})
                rows[row_of[exps]][col] = coeff
        kernel = nullspace(rows, len(candidates), fld)
        chosen = smallest_support(kernel)
        if chosen is None:
            continue
        relation = Polynomial(tag_ring, {candidates[col]: value for col, value in chosen.items()})
        logger.info(f"✅ [RELATION SEARCH] relation of degree {scaled_degree}/{scale} with {len(relation)} terms")
        return relation
    logger.info(f"ℹ️ [RELATION SEARCH] no relation up to degree {degree_bound}")
    return None
