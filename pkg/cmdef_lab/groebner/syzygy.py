"""
Syzygies - groebner
Generators of {a ∈ K[x]^s : Σ a_i m_i = 0} for m_1..m_s ∈ K[x]^m

Each m_i is extended to (m_i, e_i) ∈ K[x]^(m+s). A Gröbner basis under a
position-over-term order with the first m positions on top contains a
generating set of the syzygy module: the basis elements whose first m
components vanish.
"""

import logging
from typing import Optional, Sequence

from ..errors import CertificationError
from ..poly_core.orders import ModuleExtension, ModuleOrder, MonomialOrder, grevlex
from .engine import GroebnerEngine
from .module import FreeModuleElement

logger = logging.getLogger(__name__)


def syzygies(
    vectors: Sequence[FreeModuleElement],
    order: Optional[MonomialOrder] = None,
    component_shifts: Optional[Sequence[int]] = None,
    vector_shifts: Optional[Sequence[int]] = None,
) -> list[FreeModuleElement]:
    """
    Generators of the syzygy module of vectors

    Args:
        vectors: m_1..m_s, all of rank m in one ring
        order: Monomial order inside the module order (grevlex by default)
        component_shifts: Optional degree shift for each of the m components,
            so graded inputs give graded syzygies
        vector_shifts: Degree of each m_i; defaults to its largest shifted degree,
            and must be given for zero vectors of positive degree

    Returns:
        Syzygies a ∈ K[x]^s, each re-verified to satisfy Σ a_i m_i = 0
    """
    if not vectors:
        return []
    ring, rank = vectors[0].ring, vectors[0].rank
    count = len(vectors)
    shifts = list(component_shifts or [0] * rank)
    weights = ring.scaled_weights
    for index, v in enumerate(vectors):
        if vector_shifts is not None:
            shifts.append(vector_shifts[index])
            continue
        degrees = [
            sum(e * w for e, w in zip(exps, weights)) + shifts[pos]
            for pos, comp in enumerate(v.components)
            for exps in comp.terms
        ]
        shifts.append(max(degrees) if degrees else 0)

    generators = []
    for i, v in enumerate(vectors):
        vector = v.to_vector()
        vector[(rank + i, ring.one)] = ring.field.one
        generators.append(vector)

    module_order = ModuleOrder(order or grevlex(), ModuleExtension.POSITION_OVER_TERM)
    engine = GroebnerEngine(ring, module_order, shifts, stage="SYZYGY")
    basis = engine.compute(generators)

    result = []
    for b in basis:
        if all(pos >= rank for pos, _ in b):
            result.append(FreeModuleElement.from_vector(ring, b, count, offset=rank))
    for a in result:
        for j in range(rank):
            total = a.dot([v.components[j] for v in vectors])
            if total:
                raise CertificationError("computed syzygy does not annihilate the input vectors")
    logger.info(f"✅ [SYZYGY] {len(result)} syzygy generators for {count} vectors of rank {rank}")
    return result
