"""
Ideals - groebner
Ideal type with per-order cached reduced Gröbner bases, and the ideal
operations built on it: normal form, elimination, intersection, quotient,
zero-divisor test
"""

import logging
from typing import Iterable, Optional, Sequence

from ..errors import CertificationError, DivisionError
from ..poly_core.orders import MonomialOrder, elimination_order, grevlex
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import RingContext
from .cache import active_cache
from .engine import GroebnerEngine, Vector

logger = logging.getLogger(__name__)


def _to_vector(f: Polynomial) -> Vector:
    return {(0, e): c for e, c in f.terms.items()}


def _from_vector(ring: RingContext, v: Vector) -> Polynomial:
    return Polynomial(ring, {e: c for (_, e), c in v.items()}, normalized=True)


class Ideal:
    """
    Ideal of a polynomial ring given by generators

    Reduced Gröbner bases are computed lazily, one per order, and kept.
    """

    def __init__(self, ring: RingContext, generators: Iterable[Polynomial] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            g.ring.require_same(ring)
            if g and g not in gens:
                gens.append(g)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._bases: dict[MonomialOrder, list[Polynomial]] = {}

    @classmethod
    def unit(cls, ring: RingContext) -> "Ideal":
        return cls(ring, [Polynomial.constant(ring, 1)])

    def __repr__(self) -> str:
        return f"Ideal({[str(g) for g in self.generators]} in {self.ring})"

    def groebner_basis(self, order: Optional[MonomialOrder] = None) -> list[Polynomial]:
        order = order or grevlex()
        cached = self._bases.get(order)
        if cached is None:
            cached = buchberger(self, order)
            self._bases[order] = cached
        return cached

    def normal_form(self, f: Polynomial, order: Optional[MonomialOrder] = None) -> Polynomial:
        order = order or grevlex()
        return normal_form(f, self.groebner_basis(order), order)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        """Equality by two-way normal-form membership"""
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_unit(self) -> bool:
        return any(g.is_constant() and g for g in self.groebner_basis())

    def is_zero(self) -> bool:
        return not self.generators

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.generators + other.generators)
        return Ideal(self.ring, self.generators + tuple(other))

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ring, self.generators + tuple(extra))

    def dimension(self) -> int:
        from .dimension import dimension

        return dimension(self)

    def height(self) -> int:
        from .dimension import height

        return height(self)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> Polynomial:
    """
    Full normal form of f by the division algorithm

    Args:
        f: Polynomial to reduce
        basis: Reducers in the ring of f (a Gröbner basis gives the unique remainder)
        order: Monomial order (grevlex by default)
    """
    engine = GroebnerEngine(f.ring, order or grevlex())
    elements = [engine.element(_to_vector(g)) for g in basis if g]
    return _from_vector(f.ring, engine.reduce(_to_vector(f), elements))


def buchberger(ideal: Ideal, order: Optional[MonomialOrder] = None, certify: bool = True) -> list[Polynomial]:
    """
    Reduced monic Gröbner basis of an ideal

    Args:
        ideal: Input ideal
        order: Monomial order (grevlex by default)
        certify: Re-check that every input generator reduces to zero

    Returns:
        Basis sorted by increasing leading monomial
    """
    order = order or grevlex()
    ring = ideal.ring
    if not ideal.generators:
        return []
    cache = active_cache()
    key = None
    if cache is not None:
        key = cache.key(ring, [[g] for g in ideal.generators], order.label)
        records = cache.load(ring, key)
        if records is not None:
            return [r[0] for r in records]

    engine = GroebnerEngine(ring, order)
    basis = [_from_vector(ring, v) for v in engine.compute([_to_vector(g) for g in ideal.generators])]
    if certify:
        for g in ideal.generators:
            if normal_form(g, basis, order):
                raise CertificationError(f"generator {g} does not reduce to zero modulo the computed basis")
    logger.debug(f"✅ [BUCHBERGER] {len(ideal.generators)} generators -> basis of {len(basis)} in {ring}")
    if cache is not None:
        cache.store(ring, key, [[b] for b in basis])
    return basis


def eliminate(ideal: Ideal, drop: Iterable[str], order: Optional[MonomialOrder] = None) -> Ideal:
    """
    I ∩ K[kept variables] as an ideal of the smaller ring

    Args:
        ideal: Input ideal
        drop: Variables to eliminate
        order: Order used on the eliminated block (grevlex by default)
    """
    drop = list(drop)
    ring = ideal.ring
    kept_ring = ring.drop(drop)
    if not drop:
        return Ideal(kept_ring, [g.rename(kept_ring) for g in ideal.generators])
    dropped = {ring.index(name) for name in drop}
    elim = elimination_order(ring, drop, inner=order)
    basis = ideal.groebner_basis(elim)
    survivors = [g for g in basis if not any(e[i] for e in g.terms for i in dropped)]
    logger.debug(f"✂️ [ELIMINATE] Dropped {drop}: {len(survivors)} of {len(basis)} basis elements survive")
    return Ideal(kept_ring, [g.rename(kept_ring) for g in survivors])


def fresh_name(ring: RingContext, stem: str) -> str:
    name, n = stem, 0
    while ring.has(name):
        n += 1
        name = f"{stem}{n}"
    return name


def intersect(first: Ideal, second: Ideal) -> Ideal:
    """I ∩ J via (t·I + (1-t)·J) ∩ K[x]"""
    first.ring.require_same(second.ring)
    ring = first.ring
    if first.is_zero() or second.is_zero():
        return Ideal(ring)
    t_name = fresh_name(ring, "t_elim")
    big = ring.extend([t_name], front=True)
    t = Polynomial.variable(big, t_name)
    one_minus_t = Polynomial.constant(big, 1) - t
    gens = [t * g.rename(big) for g in first.generators]
    gens += [one_minus_t * g.rename(big) for g in second.generators]
    return eliminate(Ideal(big, gens), [t_name])


def quotient(ideal: Ideal, f: Polynomial) -> Ideal:
    """
    I : f = {g : g·f ∈ I}, computed as (I ∩ (f)) / f

    Every quotient generator q is re-checked to satisfy q·f ∈ I.
    """
    if f.is_zero():
        raise DivisionError("ideal quotient by the zero polynomial")
    ring = ideal.ring
    meet = intersect(ideal, Ideal(ring, [f]))
    quotients = [h.exact_divide(f) for h in meet.generators]
    for q in quotients:
        if not ideal.contains(q * f):
            raise CertificationError(f"quotient generator {q} fails q*f in I")
    return Ideal(ring, quotients)


def quotient_by_ideal(ideal: Ideal, other: Ideal) -> Ideal:
    """I : J as the intersection of the element quotients I : g"""
    result: Optional[Ideal] = None
    for g in other.generators:
        part = quotient(ideal, g)
        result = part if result is None else intersect(result, part)
    return result if result is not None else Ideal.unit(ideal.ring)


def is_zero_divisor(f: Polynomial, ideal: Ideal) -> bool:
    """
    True when f is a zero divisor of P/I, i.e. I : f strictly contains I

    By convention f ∈ I counts as a zero divisor unless I is the whole ring.
    """
    if ideal.is_unit():
        return False
    if ideal.contains(f):
        return True
    return not ideal.contains_ideal(quotient(ideal, f))
