"""
Krull Dimension - groebner
dim P/I from the leading monomials of a Gröbner basis

A variable set U is independent modulo LT(I) when no leading monomial lives in
K[U]; dim P/I is the largest such |U|. Its complement must meet the support of
every leading monomial, so the search is a minimum hitting set.
"""

import logging
from typing import Optional

from ..poly_core.orders import MonomialOrder, grevlex
from .ideal import Ideal

logger = logging.getLogger(__name__)


def _minimal_supports(supports: list[frozenset[int]]) -> list[frozenset[int]]:
    ordered = sorted(set(supports), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in ordered:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def minimum_hitting_set(supports: list[frozenset[int]]) -> int:
    """Size of a smallest set meeting every support (branch and bound)"""
    supports = _minimal_supports(supports)
    best = [len(set().union(*supports)) if supports else 0]

    def search(remaining: list[frozenset[int]], chosen: int) -> None:
        if chosen >= best[0]:
            return
        if not remaining:
            best[0] = chosen
            return
        smallest = min(remaining, key=len)
        for v in sorted(smallest):
            search([s for s in remaining if v not in s], chosen + 1)

    search(supports, 0)
    return best[0]


def dimension(ideal: Ideal, order: Optional[MonomialOrder] = None) -> int:
    """
    Krull dimension of P/I; -1 for the unit ideal

    Args:
        ideal: Ideal of P
        order: Order of the Gröbner basis used (grevlex by default)
    """
    order = order or grevlex()
    ring = ideal.ring
    basis = ideal.groebner_basis(order)
    supports = []
    for g in basis:
        lead = g.leading_monomial(order)
        support = frozenset(i for i, e in enumerate(lead) if e)
        if not support:
            return -1
        supports.append(support)
    result = ring.nvars - minimum_hitting_set(supports)
    logger.debug(f"📐 [DIMENSION] dim P/I = {result} for {len(basis)} basis elements in {ring.nvars} variables")
    return result


def height(ideal: Ideal) -> int:
    """Height of I in the polynomial ring: n - dim P/I"""
    dim = dimension(ideal)
    if dim < 0:
        return ideal.ring.nvars + 1
    return ideal.ring.nvars - dim


def height_in_quotient(extra: Ideal, presentation: Ideal) -> int:
    """
    Height of the image of J in P/I as dim P/I - dim P/(I + J)

    Valid when P/I is a domain, which holds for every presented invariant ring
    handled here.
    """
    extra.ring.require_same(presentation.ring)
    return dimension(presentation) - dimension(presentation + extra)
