"""
Roberts Isomorphism - invariants_sl2
S(<X,Y> ⊕ V)^SL2 ≅ S(V)^G_a in both directions

forward sets X = 0, Y = 1 on the distinguished copy. inverse applies the
matrix (Y 0; -X 1/Y) to every copy of V (its p-th power on twisted copies),
writing 1/Y as a fresh variable D, and then clears the Y-denominator exactly.
"""

import logging
from typing import Optional, Sequence

from ..actions.group_action import GroupAction, GroupKind, copies_action
from ..errors import CertificationError, DivisionError, NotInvariantError
from ..groebner.ideal import fresh_name
from ..poly_core.field import CoefficientField
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import RingContext

logger = logging.getLogger(__name__)

CopyNames = tuple[str, str]


class RobertsIsomorphism:
    """
    Both directions of Roberts' isomorphism, every result re-checked

    Args:
        sl2_ring: Ring of <X,Y> ⊕ V
        distinguished: Names of the extra copy <X,Y>
        copies: Natural copies of V as (X, Y) name pairs
        twisted: Copies of V carrying the p-th power action
        p: Exponent on twisted copies
    """

    def __init__(
        self,
        sl2_ring: RingContext,
        distinguished: CopyNames,
        copies: Sequence[CopyNames],
        twisted: Sequence[CopyNames] = (),
        p: int = 1,
    ):
        self.sl2_ring = sl2_ring
        self.distinguished = tuple(distinguished)
        self.copies = [tuple(c) for c in copies]
        self.twisted = [tuple(c) for c in twisted]
        self.p = p
        self.ga_ring = sl2_ring.drop(self.distinguished)
        self.sl2_action: GroupAction = copies_action(sl2_ring, self.copies + [self.distinguished], GroupKind.SL2, self.twisted, p)
        self.ga_action: GroupAction = copies_action(self.ga_ring, self.copies, GroupKind.GA, self.twisted, p)

    @classmethod
    def standard(cls, n_copies: int, field: Optional[CoefficientField] = None) -> "RobertsIsomorphism":
        """Distinguished copy <X,Y> next to the natural copies <X1,Y1>..<Xn,Yn>"""
        copies = [(f"X{i}", f"Y{i}") for i in range(1, n_copies + 1)]
        names = [n for pair in copies for n in pair] + ["X", "Y"]
        ring = RingContext.create(names, field or CoefficientField.rationals())
        return cls(ring, ("X", "Y"), copies)

    @classmethod
    def twisted_frame(cls, p: int, n_natural: int) -> "RobertsIsomorphism":
        """
        Twisted copy <X0,Y0> plus natural copies 1..n over F_p, with copy n
        distinguished; the G_a side is the ring of builtin_actions(p, n - 1)
        """
        if n_natural < 1:
            raise ValueError("the twisted frame needs at least one natural copy")
        names = [f"{s}{i}" for i in range(n_natural + 1) for s in ("X", "Y")]
        ring = RingContext.create(names, CoefficientField.prime(p))
        copies = [(f"X{i}", f"Y{i}") for i in range(1, n_natural)]
        return cls(ring, (f"X{n_natural}", f"Y{n_natural}"), copies, [("X0", "Y0")], p)

    # ---------------------------------------------------------------- forward

    def forward(self, f: Polynomial) -> Polynomial:
        """f(X, Y, T) -> f(0, 1, T)"""
        f.ring.require_same(self.sl2_ring)
        if not self.sl2_action.is_invariant(f):
            raise NotInvariantError(f"{f} is not SL2-invariant")
        x, y = self.distinguished
        images = {x: Polynomial.zero(self.ga_ring), y: Polynomial.constant(self.ga_ring, 1)}
        image = f.substitute(images, self.ga_ring)
        if not self.ga_action.is_invariant(image):
            raise CertificationError(f"image {image} of {f} is not G_a-invariant")
        if not f.constant_term and image.constant_term:
            raise CertificationError(f"image of {f} left the maximal homogeneous ideal")
        return image

    # ---------------------------------------------------------------- inverse

    def inverse(self, g: Polynomial) -> Polynomial:
        """
        The SL2-invariant h with forward(h) == g

        Raises:
            NotInvariantError: g is not G_a-invariant
            CertificationError: the Y-denominator does not clear or the round trip fails
        """
        g.ring.require_same(self.ga_ring)
        if not self.ga_action.is_invariant(g):
            raise NotInvariantError(f"{g} is not G_a-invariant")
        x_name, y_name = self.distinguished
        d_name = fresh_name(self.sl2_ring, "D")
        work = self.sl2_ring.extend([d_name])
        X = Polynomial.variable(work, x_name)
        Y = Polynomial.variable(work, y_name)
        D = Polynomial.variable(work, d_name)
        images: dict[str, Polynomial] = {}
        for power, pairs in ((1, self.copies), (self.p, self.twisted)):
            for xi, yi in pairs:
                images[xi] = Y ** power * Polynomial.variable(work, xi) + (-X) ** power * Polynomial.variable(work, yi)
                images[yi] = D ** power * Polynomial.variable(work, yi)
        lifted = g.substitute(images, work)

        d_index, y_index = work.index(d_name), work.index(y_name)
        top = max((e[d_index] for e in lifted.terms), default=0)
        cleared = {}
        for exps, coeff in lifted.terms.items():
            moved = list(exps)
            moved[y_index] += top - moved[d_index]
            moved[d_index] = 0
            cleared[tuple(moved)] = coeff
        try:
            h = Polynomial(work, cleared).divide_by_monomial(work.variable_exponent(y_name, top))
        except DivisionError as exc:
            raise CertificationError(f"Y-denominator of the inverse image of {g} does not clear") from exc
        h = h.rename(self.sl2_ring)

        if not self.sl2_action.is_invariant(h):
            raise CertificationError(f"inverse image {h} is not SL2-invariant")
        if self.forward(h) != g:
            raise CertificationError(f"round trip fails for {g}")
        logger.debug(f"🔄 [ROBERTS] inverse image with {len(h)} terms, Y^{top} cleared")
        return h


def roberts_forward(f: Polynomial, iso: RobertsIsomorphism) -> Polynomial:
    return iso.forward(f)


def roberts_inverse(g: Polynomial, iso: RobertsIsomorphism) -> Polynomial:
    return iso.inverse(g)
