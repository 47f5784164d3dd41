"""
Module Intersection - subalgebra
Generators of M ∩ A^r for a submodule M of K[x]^r and A = K[f_1..f_k]

The module N = M·K[x,T] + Σ (T_i - f_i)·K[x,T]^r is given a Gröbner basis
under term-over-position with an ambient-first block order. Basis vectors
free of ambient variables generate {b(T) : b(f) ∈ M}; mapping T -> f gives the
A-module generators. Vectors that vanish under T -> f only encode relations
and are dropped.
"""

import logging
from typing import Sequence

from ..errors import CertificationError
from ..groebner.engine import GroebnerEngine
from ..groebner.module import FreeModuleElement, module_groebner_basis, module_normal_form
from ..poly_core.orders import ModuleExtension, ModuleOrder
from ..poly_core.polynomial import Polynomial
from .presentation import SubalgebraPresentation

logger = logging.getLogger(__name__)


def module_intersect_with_Ar(
    presentation: SubalgebraPresentation,
    module_generators: Sequence[FreeModuleElement],
) -> list[FreeModuleElement]:
    """
    A-module generators of M ∩ A^r, expressed in tags

    Args:
        presentation: The subalgebra A with its tag ring
        module_generators: Generators of M in K[x]^r

    Returns:
        Vectors over the tag ring; each maps into M under T -> f (re-checked)
    """
    gens = [m for m in module_generators if not m.is_zero()]
    if not gens:
        return []
    ambient = presentation.ambient
    combined = presentation.combined
    rank = gens[0].rank
    for m in gens:
        m.ring.require_same(ambient)
        if m.rank != rank:
            raise ValueError("module generators must share one rank")

    vectors = [
        FreeModuleElement(combined, tuple(c.rename(combined) for c in m.components)).to_vector()
        for m in gens
    ]
    for name, f in zip(presentation.tag_names, presentation.generators):
        difference = Polynomial.variable(combined, name) - f.rename(combined)
        for mu in range(rank):
            vectors.append(FreeModuleElement.unit(combined, rank, mu).scale(difference).to_vector())

    order = ModuleOrder(presentation.elimination_order, ModuleExtension.TERM_OVER_POSITION)
    engine = GroebnerEngine(combined, order, stage="MODULE INTERSECT")
    basis = engine.compute(vectors)

    n = ambient.nvars
    tag_ring = presentation.tag_ring
    kept: list[FreeModuleElement] = []
    for b in basis:
        if any(exps[i] for (_, exps) in b for i in range(n)):
            continue
        element = FreeModuleElement.from_vector(combined, b, rank)
        tagged = FreeModuleElement(tag_ring, tuple(c.rename(tag_ring) for c in element.components))
        if all(presentation.evaluate(c).is_zero() for c in tagged.components):
            continue
        kept.append(tagged)

    module_basis = module_groebner_basis(gens)
    for b in kept:
        image = FreeModuleElement(ambient, tuple(presentation.evaluate(c) for c in b.components))
        if not module_normal_form(image, module_basis).is_zero():
            raise CertificationError("intersection generator does not map into the input module")
    logger.info(f"✅ [MODULE INTERSECT] {len(kept)} generators of M ∩ A^{rank} from {len(basis)} basis vectors")
    return kept
