"""
Frobenius Invariants - frobenius
Generators of S(F^p(U) ⊕ V)^G from generators of S(U ⊕ V)^G

The intersection S(U ⊕ V)^G ∩ K[X^p, Y] is computed first; contracting
X_j^p -> Z_j then maps it isomorphically onto the invariants with the
twisted action.
"""

import logging
from typing import Optional

from ..errors import CertificationError, DivisionError, NotInvariantError
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import RingContext
from ..poly_core.text_format import format_polynomial
from ..subalgebra.presentation import SubalgebraPresentation
from .intersect import intersect_xp_y
from .problem import PUBLISHED_COUNTS, FrobeniusProblem

logger = logging.getLogger(__name__)


def contract(problem: FrobeniusProblem, h: Polynomial) -> Polynomial:
    """X_j^p -> Z_j; a non-multiple of p is a hard failure"""
    try:
        return h.frobenius_contract(problem.x_block, problem.p, problem.target_ring, problem.z_names)
    except DivisionError as exc:
        raise CertificationError(f"intersection output {h} is not a polynomial in X^p") from exc


def expand(problem: FrobeniusProblem, h: Polynomial) -> Polynomial:
    """Z_j -> X_j^p, back into the ring of the input generators"""
    return h.frobenius_expand(problem.z_names, problem.p, problem.ring, problem.x_block)


def _sort_key(h: Polynomial) -> tuple:
    return (h.scaled_degree(), len(h), format_polynomial(h))


def interreduce(generators: list[Polynomial]) -> list[Polynomial]:
    """
    Drop every generator lying in the algebra of the ones kept before it

    Generators are visited by increasing degree, so the result still
    generates the same algebra.
    """
    ordered = sorted(generators, key=_sort_key)
    if not ordered:
        return []
    graded = all(g.is_homogeneous() for g in ordered)
    kept: list[Polynomial] = []
    for g in ordered:
        if kept:
            algebra = SubalgebraPresentation(kept, ambient=g.ring)
            found = algebra.member_graded(g) if graded else algebra.member(g)
            if found:
                logger.debug(f"🔍 [INTERREDUCE] dropped {g}")
                continue
        kept.append(g)
    return kept


def frobenius_invariants(problem: FrobeniusProblem, reduce_generators: bool = True) -> list[Polynomial]:
    """
    Generators of the twisted invariant ring in problem.target_ring

    Args:
        problem: Input generators of S(U ⊕ V)^G and the variable split
        reduce_generators: Drop generators contained in the algebra of the others

    Returns:
        Generators sorted by degree, each checked for invariance when the
        problem carries an action
    """
    outputs = [contract(problem, h) for h in intersect_xp_y(problem)]
    if problem.action is not None:
        for h in outputs:
            if not problem.action.is_invariant(h):
                raise NotInvariantError(f"Frobenius invariant {h} fails the twisted invariance check")
    result = interreduce(outputs) if reduce_generators else sorted(outputs, key=_sort_key)
    logger.info(f"✅ [FROBENIUS] {problem.label or 'problem'}: {len(result)} generators")
    return result


def compare_with_published(p: int, k: int, count: int) -> Optional[int]:
    """Log the deviation from the published generator count; returns that count when known"""
    published = PUBLISHED_COUNTS.get((p, k))
    if published is None:
        logger.info(f"📊 [FROBENIUS] ({p},{k}): {count} generators, no published count")
    elif published == count:
        logger.info(f"📊 [FROBENIUS] ({p},{k}): {count} generators, matches the published count")
    else:
        logger.warning(f"⚠️ [FROBENIUS] ({p},{k}): {count} generators, published count is {published}")
    return published


def published_generators_2_3(ring: RingContext) -> list[Polynomial]:
    """
    The eleven generators listed for G_a with p = 2, k = 3, written in the
    target ring (X0^2 and Y0^2 already contracted to X0 and Y0)
    """
    v = {n: Polynomial.variable(ring, n) for n in ring.variables}
    x0, y0 = v["X0"], v["Y0"]
    x = {i: v[f"X{i}"] for i in (1, 2, 3)}
    y = {i: v[f"Y{i}"] for i in (1, 2, 3)}
    gens = [x0, x[1], x[2], x[3]]
    gens += [x[i] * y[j] + y[i] * x[j] for i, j in ((1, 2), (1, 3), (2, 3))]
    gens += [x[i] ** 2 * y0 + y[i] ** 2 * x0 for i in (1, 2, 3)]
    gens.append(
        x[1] * x[2] * x[3] * y0
        + x[1] * y[2] * y[3] * x0
        + y[1] * x[2] * y[3] * x0
        + y[1] * y[2] * x[3] * x0
    )
    return gens
