"""
Test Sequences - invariants_sl2
The hsop-derived depth test sequence, the annihilator phsop and the known
dimensions of the invariant rings

The test sequence lives in the SL2 frame: natural copies 1..k plus the twisted
copy 0 standing in for copy k+1, so every bracket with copy k+1 becomes the
contracted p-th power X_i^p Y0 - X0 Y_i^p.
"""

import logging
from typing import Optional

from ..actions.cocycle import (
    Cocycle1,
    KnownAnnihilator,
    anchored_bracket_annihilator,
    bracket_power_annihilator,
    first_copy_annihilator,
)
from ..actions.group_action import builtin_actions
from ..poly_core.field import CoefficientField
from ..poly_core.polynomial import Polynomial, polynomial_sum
from ..poly_core.ring import RingContext
from .plucker import bracket
from .roberts import RobertsIsomorphism

logger = logging.getLogger(__name__)


def twisted_bracket(ring: RingContext, i: int, p: int) -> Polynomial:
    """X_i^p Y0 - X0 Y_i^p"""
    x0, y0 = Polynomial.variable(ring, "X0"), Polynomial.variable(ring, "Y0")
    xi, yi = Polynomial.variable(ring, f"X{i}"), Polynomial.variable(ring, f"Y{i}")
    return xi ** p * y0 - x0 * yi ** p


def depth_test_sequence(p: int, k: int, homogenize: bool = False, ring: Optional[RingContext] = None) -> list[Polynomial]:
    """
    f_3..f_{2k+1} for S(<X^p,Y^p> ⊕ k·<X,Y>)^SL2

    Args:
        p: Characteristic
        k: Number of natural copies (at least 2)
        homogenize: Square the twisted bracket and raise the natural brackets
            to p+1 in f_{k+2}..f_{2k-1}
        ring: Ring holding X0,Y0..Xk,Yk (F_p with unit weights by default)

    Returns:
        The list [f_3, ..., f_{2k+1}]
    """
    if k < 2:
        raise ValueError("the test sequence needs k >= 2")
    if ring is None:
        names = [f"{s}{i}" for i in range(k + 1) for s in ("X", "Y")]
        ring = RingContext.create(names, CoefficientField.prime(p))
    sequence = []
    for m in range(3, 2 * k + 2):
        middle = homogenize and k + 2 <= m <= 2 * k - 1
        terms = []
        twist = m - k - 1
        if 1 <= twist <= k:
            h = twisted_bracket(ring, twist, p)
            terms.append(h ** 2 if middle else h)
        for i in range(1, k + 1):
            j = m - i
            if i < j <= k:
                g = bracket(ring, i, j)
                terms.append(g ** (p + 1) if middle else g)
        sequence.append(polynomial_sum(ring, terms))
    logger.debug(f"🔧 [TEST SEQUENCE] p={p} k={k} homogenize={homogenize}: {len(sequence)} elements")
    return sequence


def expected_regular_positions(k: int) -> list[int]:
    """Indices m of f_3, f_4, f_{k+2}, ..., f_{2k+1}"""
    return sorted({3, 4} | set(range(k + 2, 2 * k + 2)))


def ga_test_sequence(p: int, k: int, homogenize: bool = False) -> tuple[RobertsIsomorphism, list[Polynomial]]:
    """
    The test sequence for S(<X^p,Y^p> ⊕ k·<X,Y>)^G_a

    Built in the SL2 frame with k+1 natural copies and pushed through
    Roberts' isomorphism on copy k+1.
    """
    iso = RobertsIsomorphism.twisted_frame(p, k + 1)
    frame = depth_test_sequence(p, k + 1, homogenize, ring=iso.sl2_ring)
    return iso, [iso.forward(f) for f in frame]


# ---------------------------------------------------------------- annihilators


def annihilator_phsop(p: int, k: int) -> list[Polynomial]:
    """X1, X2^(p-1), X1·Y3 - X3·Y1, (X_i·Y_{i+1} - X_{i+1}·Y_i)^(p-1) for i = 3..k-1"""
    if k < 2:
        raise ValueError("the annihilator phsop needs k >= 2")
    ring = builtin_actions(p, k).target
    v = {n: Polynomial.variable(ring, n) for n in ring.variables}
    phsop = [v["X1"], v["X2"] ** (p - 1)]
    if k >= 3:
        phsop.append(v["X1"] * v["Y3"] - v["X3"] * v["Y1"])
    for i in range(3, k):
        phsop.append(bracket(ring, i, i + 1) ** (p - 1))
    return phsop


def known_annihilator_witnesses(c: Cocycle1, p: int, k: int) -> list[Optional[KnownAnnihilator]]:
    """Closed-form witnesses aligned with annihilator_phsop; None where only linear algebra helps"""
    witnesses: list[Optional[KnownAnnihilator]] = [first_copy_annihilator(c, p), None]
    if k >= 3:
        witnesses.append(anchored_bracket_annihilator(c, p, 3))
    for i in range(3, k):
        witnesses.append(bracket_power_annihilator(c, p, i, i + 1))
    return witnesses


# ------------------------------------------------------------------ dimensions


def ga_dimension(dim_v: int) -> int:
    """dim K[V]^G_a = dim V - 1 for a nontrivial action"""
    return dim_v - 1


def sl2_dimension(n_copies: int) -> int:
    """dim of the SL2 invariants of n natural copies: 2n - 3, and 0 for one copy"""
    return 2 * n_copies - 3 if n_copies >= 2 else 0


def twisted_ga_dimension(k: int) -> int:
    return 2 * k + 1


def twisted_sl2_dimension(k: int) -> int:
    return 2 * k - 1
