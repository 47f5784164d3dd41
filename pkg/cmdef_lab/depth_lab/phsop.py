"""
Partial hsop Test - depth_lab
Homogeneous a_1..a_k form a phsop of P/I exactly when their height is k
"""

import logging
from dataclasses import dataclass
from typing import Sequence

from ..groebner.dimension import dimension
from ..poly_core.polynomial import Polynomial
from .presented import PresentedRing

logger = logging.getLogger(__name__)


@dataclass
class HeightRecord:
    """dim P/I and dim P/(I + (a)) for a candidate phsop of the given length"""
    length: int
    dim_ring: int
    dim_cut: int

    @property
    def height(self) -> int:
        return self.dim_ring - self.dim_cut

    @property
    def holds(self) -> bool:
        return self.height == self.length


def phsop_record(ring: PresentedRing, elements: Sequence[Polynomial]) -> HeightRecord:
    for a in elements:
        a.ring.require_same(ring.poly_ring)
        if not a.is_homogeneous() or a.degree() <= 0:
            raise ValueError(f"phsop candidates must be homogeneous of positive degree, got {a}")
    cut = dimension(ring.relations.with_generators(elements))
    record = HeightRecord(len(elements), ring.dim, cut)
    logger.info(f"📐 [PHSOP] {len(elements)} elements: height {record.height} ({'phsop' if record.holds else 'no phsop'})")
    return record


def is_phsop(ring: PresentedRing, elements: Sequence[Polynomial]) -> bool:
    """dim(P/I) - dim(P/(I + (a_1..a_k))) == k"""
    return phsop_record(ring, elements).holds
