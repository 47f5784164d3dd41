"""
Presented Rings - depth_lab
R ≅ P/I with P a tag polynomial ring and I the relation ideal of generators
"""

import logging
from functools import cached_property
from typing import Mapping, Optional, Sequence

from ..errors import CertificationError
from ..groebner.dimension import dimension
from ..groebner.ideal import Ideal
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import RingContext
from ..subalgebra.presentation import SubalgebraPresentation

logger = logging.getLogger(__name__)


class PresentedRing:
    """
    P/I, optionally with the invariant each tag stands for

    Args:
        poly_ring: The tag ring P
        relations: The ideal I of P
        generator_images: Tag name -> original generator; when given, every
            relation is checked to vanish on the images
    """

    def __init__(
        self,
        poly_ring: RingContext,
        relations: Ideal,
        generator_images: Optional[Mapping[str, Polynomial]] = None,
    ):
        relations.ring.require_same(poly_ring)
        self.poly_ring = poly_ring
        self.relations = relations
        self.generator_images: dict[str, Polynomial] = dict(generator_images or {})
        self.presentation: Optional[SubalgebraPresentation] = None
        if self.generator_images:
            if set(self.generator_images) != set(poly_ring.variables):
                raise ValueError("generator images must cover every tag variable")
            gens = [self.generator_images[name] for name in poly_ring.variables]
            self.presentation = SubalgebraPresentation(gens, ambient=gens[0].ring, tag_names=poly_ring.variables)
            if self.presentation.tag_ring != poly_ring:
                raise ValueError("tag weights must equal the degrees of the generators")
            for r in relations.generators:
                if self.presentation.evaluate(r):
                    raise CertificationError(f"relation {r} does not vanish on the generators")

    @classmethod
    def from_generators(
        cls,
        generators: Sequence[Polynomial],
        tag_stem: str = "T",
        tag_names: Optional[Sequence[str]] = None,
    ) -> "PresentedRing":
        """Present K[f_1..f_k] through its relation ideal"""
        presentation = SubalgebraPresentation(generators, tag_stem=tag_stem, tag_names=tag_names)
        relations = presentation.relation_ideal
        ring = cls(presentation.tag_ring, relations, dict(zip(presentation.tag_names, presentation.generators)))
        logger.info(
            f"✅ [PRESENTATION] {len(generators)} generators, {len(relations.generators)} relations"
        )
        return ring

    @classmethod
    def polynomial_ring(cls, ring: RingContext) -> "PresentedRing":
        return cls(ring, Ideal(ring))

    def __repr__(self) -> str:
        return f"PresentedRing({self.poly_ring} / {len(self.relations.generators)} relations)"

    @cached_property
    def dim(self) -> int:
        return dimension(self.relations)

    @property
    def ambient(self) -> Optional[RingContext]:
        return self.presentation.ambient if self.presentation else None

    def to_tags(self, h: Polynomial) -> Polynomial:
        """
        A tag polynomial mapping to h

        Raises:
            CertificationError: h is not in the presented algebra
        """
        if self.presentation is None:
            raise ValueError("this ring has no generator images")
        graded = all(f.is_homogeneous() for f in self.presentation.generators)
        result = self.presentation.member_graded(h) if graded else self.presentation.member(h)
        if not result:
            raise CertificationError(f"{h} does not lie in the presented algebra")
        return result.witness

    def from_tags(self, tag_polynomial: Polynomial) -> Polynomial:
        if self.presentation is None:
            raise ValueError("this ring has no generator images")
        return self.presentation.evaluate(tag_polynomial)
