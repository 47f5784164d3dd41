"""
Regular Sequence Scan - depth_lab
Greedy search for a regular subsequence of a user-given test sequence

Each g_i that is a nonzerodivisor modulo J = I + (accepted) is accepted and
added to J. When some g_i lies outside R_+, trailing accepted elements are
dropped until J is a proper ideal again.
"""

import logging
from dataclasses import dataclass, field
from typing import Sequence

from ..budget import check_budget
from ..errors import CertificationError
from ..groebner.ideal import Ideal, is_zero_divisor
from ..poly_core.polynomial import Polynomial
from .presented import PresentedRing

logger = logging.getLogger(__name__)


@dataclass
class ScanRegResult:
    """Accepted positions (0-based) of the test sequence and the regular subsequence"""
    positions: list[int] = field(default_factory=list)
    sequence: list[Polynomial] = field(default_factory=list)
    trimmed: int = 0

    @property
    def length(self) -> int:
        return len(self.sequence)


def replay_regular(ring: PresentedRing, sequence: Sequence[Polynomial]) -> bool:
    """Re-run the zero-divisor tests on a recorded regular sequence"""
    current = ring.relations
    for g in sequence:
        if is_zero_divisor(g, current):
            return False
        current = current.with_generators([g])
    return not (sequence and current.is_unit())


def scan_reg(ring: PresentedRing, test_sequence: Sequence[Polynomial]) -> ScanRegResult:
    """
    Regular subsequence of test_sequence in P/I

    Args:
        ring: The presented ring P/I
        test_sequence: Elements of P, scanned strictly in the given order

    Returns:
        Accepted positions and elements; their count bounds depth from below
        when every element lies in R_+
    """
    result = ScanRegResult()
    if ring.relations.is_unit():
        logger.warning("⚠️ [SCAN REG] the presented ring is zero")
        return result
    current: Ideal = ring.relations
    for position, g in enumerate(test_sequence):
        g.ring.require_same(ring.poly_ring)
        check_budget("SCAN REG")
        if is_zero_divisor(g, current):
            logger.info(f"❌ [SCAN REG] f[{position}] is a zero divisor")
            continue
        current = current.with_generators([g])
        result.positions.append(position)
        result.sequence.append(g)
        logger.info(f"✅ [SCAN REG] f[{position}] accepted, regular length {result.length}")

    if any(g.constant_term for g in test_sequence):
        while result.sequence and ring.relations.with_generators(result.sequence).is_unit():
            result.sequence.pop()
            result.positions.pop()
            result.trimmed += 1
        if result.trimmed:
            logger.info(f"✂️ [SCAN REG] dropped {result.trimmed} trailing elements to keep a proper ideal")

    if not replay_regular(ring, result.sequence):
        raise CertificationError("accepted sequence fails the regularity replay")
    return result
