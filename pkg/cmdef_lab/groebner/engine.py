"""
Buchberger Engine - groebner
Gröbner bases of submodules of free modules K[x]^r (ideals are the case r = 1)

Vectors are sparse dicts {(position, exponents): coefficient}. Pair handling
follows the usual update/select/minimalize/interreduce split: Gebauer-Möller
elimination on insertion, normal (sugar) selection with deterministic ties.
"""

import heapq
import logging
from dataclasses import dataclass
from operator import add
from typing import Callable, Optional, Sequence

from ..budget import check_budget
from ..poly_core.field import Coefficient
from ..poly_core.orders import ModuleExtension, ModuleOrder, MonomialOrder
from ..poly_core.ring import Monomial, RingContext, monomial_coprime, monomial_divides, monomial_lcm

logger = logging.getLogger(__name__)

Term = tuple[int, Monomial]
Vector = dict[Term, Coefficient]

_PROGRESS_EVERY = 500


@dataclass
class BasisElement:
    vector: Vector
    lead: Term
    lead_coeff: Coefficient
    sugar: int


def as_module_order(order) -> ModuleOrder:
    if isinstance(order, ModuleOrder):
        return order
    if isinstance(order, MonomialOrder):
        return ModuleOrder(order, ModuleExtension.TERM_OVER_POSITION)
    raise TypeError(f"not an order: {order!r}")


class GroebnerEngine:
    """
    One Buchberger run over a fixed ring and module order

    Args:
        ring: Ring of the vector entries
        order: MonomialOrder (ideals) or ModuleOrder
        shifts: Degree shift per position, used for sugar only
        stage: Tag used in log lines and budget errors
    """

    def __init__(self, ring: RingContext, order, shifts: Optional[Sequence[int]] = None, stage: str = "BUCHBERGER"):
        self.ring = ring
        self.order = as_module_order(order)
        self.field = ring.field
        self.weights = ring.scaled_weights
        self.shifts = tuple(shifts or ())
        self.stage = stage
        self._key: Callable[[int, Monomial], tuple] = self.order.key_function(ring.nvars)

    # ------------------------------------------------------------------ helpers

    def key(self, term: Term) -> tuple:
        return self._key(term[0], term[1])

    def neg_key(self, term: Term) -> tuple:
        return tuple(-x for x in self._key(term[0], term[1]))

    def degree(self, term: Term) -> int:
        shift = self.shifts[term[0]] if term[0] < len(self.shifts) else 0
        return sum(e * w for e, w in zip(term[1], self.weights)) + shift

    def leading(self, vector: Vector) -> Term:
        return max(vector, key=self.key)

    def sugar(self, vector: Vector) -> int:
        return max(self.degree(t) for t in vector)

    def element(self, vector: Vector, sugar: Optional[int] = None) -> BasisElement:
        lead = self.leading(vector)
        return BasisElement(vector, lead, vector[lead], self.sugar(vector) if sugar is None else sugar)

    def monic(self, vector: Vector) -> Vector:
        lead = self.leading(vector)
        inv = self.field.inverse(vector[lead])
        reduce = self.field.reduce
        return {t: reduce(c * inv) for t, c in vector.items()}

    # ---------------------------------------------------------------- reduction

    def reduce(self, vector: Vector, basis: Sequence[BasisElement], full: bool = True) -> Vector:
        """
        Normal form of vector modulo the basis leading terms

        Args:
            vector: Vector to reduce
            basis: Reducers (any generating set; a Gröbner basis gives the unique normal form)
            full: Also reduce terms below the leading term
        """
        if not vector or not basis:
            return dict(vector)
        reduce = self.field.reduce
        inverse = self.field.inverse
        by_position: dict[int, list[BasisElement]] = {}
        for g in basis:
            by_position.setdefault(g.lead[0], []).append(g)
        inverses = {id(g): inverse(g.lead_coeff) for g in basis}

        work = dict(vector)
        heap = [(self.neg_key(t), t) for t in work]
        heapq.heapify(heap)
        remainder: Vector = {}
        while heap:
            _, term = heapq.heappop(heap)
            coeff = work.pop(term, None)
            if coeff is None:
                continue
            pos, exps = term
            reducer = None
            for g in by_position.get(pos, ()):
                if monomial_divides(g.lead[1], exps):
                    reducer = g
                    break
            if reducer is None:
                remainder[term] = coeff
                if not full:
                    for t in work:
                        remainder[t] = work[t]
                    return remainder
                continue
            shift = tuple(a - b for a, b in zip(exps, reducer.lead[1]))
            factor = reduce(coeff * inverses[id(reducer)])
            for (gpos, gexps), gc in reducer.vector.items():
                if gpos == pos and gexps == reducer.lead[1]:
                    continue
                target = (gpos, tuple(map(add, gexps, shift)))
                present = target in work
                value = reduce(work.get(target, 0) - factor * gc)
                if value:
                    work[target] = value
                    if not present:
                        heapq.heappush(heap, (self.neg_key(target), target))
                elif present:
                    del work[target]
        return remainder

    # -------------------------------------------------------------------- pairs

    def spoly(self, f: BasisElement, g: BasisElement) -> Vector:
        lcm = monomial_lcm(f.lead[1], g.lead[1])
        mf = tuple(a - b for a, b in zip(lcm, f.lead[1]))
        mg = tuple(a - b for a, b in zip(lcm, g.lead[1]))
        reduce = self.field.reduce
        cf = self.field.inverse(f.lead_coeff)
        cg = self.field.inverse(g.lead_coeff)
        out: Vector = {}
        for (pos, exps), c in f.vector.items():
            t = (pos, tuple(map(add, exps, mf)))
            out[t] = reduce(out.get(t, 0) + c * cf)
        for (pos, exps), c in g.vector.items():
            t = (pos, tuple(map(add, exps, mg)))
            out[t] = reduce(out.get(t, 0) - c * cg)
        return {t: c for t, c in out.items() if c}

    def pair_sugar(self, f: BasisElement, g: BasisElement) -> int:
        lcm = monomial_lcm(f.lead[1], g.lead[1])
        lcm_deg = sum(e * w for e, w in zip(lcm, self.weights))
        f_deg = sum(e * w for e, w in zip(f.lead[1], self.weights))
        g_deg = sum(e * w for e, w in zip(g.lead[1], self.weights))
        return max(f.sugar + lcm_deg - f_deg, g.sugar + lcm_deg - g_deg)

    def _update(self, basis: list[BasisElement], pairs: set, new: BasisElement, product_criterion: bool) -> set:
        """Gebauer-Möller update of the pair set when new joins the basis"""
        pos, lead = new.lead
        index = len(basis)

        def lcm_of(i: int, j: int) -> Monomial:
            return monomial_lcm(basis[i].lead[1], basis[j].lead[1])

        kept = set()
        for i, j in pairs:
            if basis[i].lead[0] != pos:
                kept.add((i, j))
                continue
            pair_lcm = lcm_of(i, j)
            if (not monomial_divides(lead, pair_lcm)
                    or pair_lcm == monomial_lcm(basis[i].lead[1], lead)
                    or pair_lcm == monomial_lcm(basis[j].lead[1], lead)):
                kept.add((i, j))

        by_lcm: dict[Monomial, list[int]] = {}
        for i, g in enumerate(basis):
            if g.lead[0] == pos:
                by_lcm.setdefault(monomial_lcm(g.lead[1], lead), []).append(i)
        minimal: list[Monomial] = []
        for candidate in sorted(by_lcm, key=lambda m: self._key(pos, m)):
            if all(not monomial_divides(other, candidate) for other in minimal):
                minimal.append(candidate)
        for candidate in minimal:
            members = by_lcm[candidate]
            if product_criterion and any(monomial_coprime(basis[i].lead[1], lead) for i in members):
                continue
            kept.add((min(members), index))
        return kept

    def _pair_entry(self, basis: Sequence[BasisElement], pair: tuple[int, int]) -> tuple:
        i, j = pair
        f, g = basis[i], basis[j]
        lcm_key = self._key(f.lead[0], monomial_lcm(f.lead[1], g.lead[1]))
        return (self.pair_sugar(f, g), lcm_key, i, j)

    # --------------------------------------------------------------- buchberger

    def compute(self, generators: Sequence[Vector]) -> list[Vector]:
        """
        Reduced, monic Gröbner basis of the submodule spanned by generators

        Returns:
            Basis vectors sorted by increasing leading term
        """
        gens = [dict(v) for v in generators if v]
        if not gens:
            return []
        product_criterion = all(t[0] == 0 for v in gens for t in v)
        basis: list[BasisElement] = []
        pairs: set = set()
        for vector in sorted(gens, key=lambda v: self.key(self.leading(v))):
            reduced = self.reduce(vector, basis)
            if reduced:
                element = self.element(reduced)
                pairs = self._update(basis, pairs, element, product_criterion)
                basis.append(element)

        queue: list = []
        for pair in pairs:
            heapq.heappush(queue, self._pair_entry(basis, pair))

        processed = 0
        while queue:
            check_budget(self.stage.lower())
            sugar, _, i, j = heapq.heappop(queue)
            if (i, j) not in pairs:
                continue
            pairs.discard((i, j))
            remainder = self.reduce(self.spoly(basis[i], basis[j]), basis)
            processed += 1
            if remainder:
                element = self.element(remainder, max(sugar, self.sugar(remainder)))
                pairs = self._update(basis, pairs, element, product_criterion)
                basis.append(element)
                newest = len(basis) - 1
                for pair in pairs:
                    if pair[1] == newest:
                        heapq.heappush(queue, self._pair_entry(basis, pair))
            if processed % _PROGRESS_EVERY == 0:
                logger.info(f"🔄 [{self.stage}] {processed} pairs done, basis {len(basis)}, queue {len(pairs)}")

        result = self.interreduce(self.minimalize(basis))
        logger.debug(f"✅ [{self.stage}] Reduced basis with {len(result)} elements after {processed} pairs")
        return result

    def minimalize(self, basis: Sequence[BasisElement]) -> list[BasisElement]:
        """Drop elements whose leading term is divisible by another leading term"""
        ordered = sorted(basis, key=lambda g: self.key(g.lead))
        kept: list[BasisElement] = []
        for g in ordered:
            if not any(h.lead[0] == g.lead[0] and monomial_divides(h.lead[1], g.lead[1]) for h in kept):
                kept.append(g)
        return kept

    def interreduce(self, basis: Sequence[BasisElement]) -> list[Vector]:
        """Tail-reduce every element by the others and make it monic"""
        reduced = []
        for i, g in enumerate(basis):
            others = [h for j, h in enumerate(basis) if j != i]
            vector = self.reduce(g.vector, others)
            reduced.append(self.monic(vector))
        return sorted(reduced, key=lambda v: self.key(self.leading(v)))


def is_groebner_basis(engine: GroebnerEngine, basis: Sequence[Vector]) -> bool:
    """Buchberger criterion: every S-vector reduces to zero"""
    elements = [engine.element(v) for v in basis if v]
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if elements[i].lead[0] != elements[j].lead[0]:
                continue
            if engine.reduce(engine.spoly(elements[i], elements[j]), elements):
                return False
    return True
