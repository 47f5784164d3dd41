"""
Free Module Elements - groebner
Vectors of polynomials in K[x]^r and Gröbner bases of submodules
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import RingMismatchError
from ..poly_core.orders import ModuleExtension, ModuleOrder, grevlex
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import RingContext
from .engine import BasisElement, GroebnerEngine, Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FreeModuleElement:
    """Element (f_1, ..., f_r) of K[x]^r"""

    ring: RingContext
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        for c in comps:
            if c.ring != self.ring:
                raise RingMismatchError(f"component in {c.ring}, expected {self.ring}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, components: Sequence[Polynomial]) -> "FreeModuleElement":
        if not components:
            raise ValueError("a module element needs at least one component")
        return cls(components[0].ring, tuple(components))

    @classmethod
    def unit(cls, ring: RingContext, rank: int, index: int) -> "FreeModuleElement":
        comps = [Polynomial.zero(ring)] * rank
        comps[index] = Polynomial.constant(ring, 1)
        return cls(ring, tuple(comps))

    @property
    def rank(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "FreeModuleElement") -> "FreeModuleElement":
        return FreeModuleElement(self.ring, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "FreeModuleElement") -> "FreeModuleElement":
        return FreeModuleElement(self.ring, tuple(a - b for a, b in zip(self.components, other.components)))

    def scale(self, factor: Polynomial) -> "FreeModuleElement":
        return FreeModuleElement(self.ring, tuple(factor * c for c in self.components))

    def dot(self, others: Sequence[Polynomial]) -> Polynomial:
        total = Polynomial.zero(self.ring)
        for a, b in zip(self.components, others):
            total = total + a * b
        return total

    def to_vector(self, offset: int = 0) -> Vector:
        out: Vector = {}
        for pos, comp in enumerate(self.components):
            for exps, coeff in comp.terms.items():
                out[(pos + offset, exps)] = coeff
        return out

    @classmethod
    def from_vector(cls, ring: RingContext, vector: Vector, rank: int, offset: int = 0) -> "FreeModuleElement":
        parts: list[dict] = [{} for _ in range(rank)]
        for (pos, exps), coeff in vector.items():
            parts[pos - offset][exps] = coeff
        return cls(ring, tuple(Polynomial(ring, p, normalized=True) for p in parts))


def combine(vectors: Sequence[FreeModuleElement], coefficients: Sequence[Polynomial]) -> FreeModuleElement:
    """Sum of coefficients[i] * vectors[i]"""
    if not vectors:
        raise ValueError("nothing to combine")
    total = FreeModuleElement(vectors[0].ring, tuple(Polynomial.zero(vectors[0].ring) for _ in range(vectors[0].rank)))
    for v, c in zip(vectors, coefficients):
        if c:
            total = total + v.scale(c)
    return total


def module_groebner_basis(
    vectors: Sequence[FreeModuleElement],
    order: Optional[ModuleOrder] = None,
    shifts: Optional[Sequence[int]] = None,
    stage: str = "MODULE GB",
) -> list[FreeModuleElement]:
    """
    Reduced Gröbner basis of the submodule spanned by vectors

    Args:
        vectors: Generators, all of the same rank and ring
        order: Module order (term-over-position grevlex by default)
        shifts: Per-position degree shifts for the sugar strategy
    """
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    ring, rank = vectors[0].ring, vectors[0].rank
    engine = GroebnerEngine(ring, order or ModuleOrder(grevlex(), ModuleExtension.TERM_OVER_POSITION), shifts, stage)
    basis = engine.compute([v.to_vector() for v in vectors])
    return [FreeModuleElement.from_vector(ring, b, rank) for b in basis]


def module_normal_form(
    vector: FreeModuleElement,
    basis: Sequence[FreeModuleElement],
    order: Optional[ModuleOrder] = None,
) -> FreeModuleElement:
    """Normal form of vector with respect to basis (a Gröbner basis for uniqueness)"""
    engine = GroebnerEngine(vector.ring, order or ModuleOrder(grevlex(), ModuleExtension.TERM_OVER_POSITION))
    elements: list[BasisElement] = [engine.element(b.to_vector()) for b in basis if not b.is_zero()]
    reduced = engine.reduce(vector.to_vector(), elements)
    return FreeModuleElement.from_vector(vector.ring, reduced, vector.rank)
