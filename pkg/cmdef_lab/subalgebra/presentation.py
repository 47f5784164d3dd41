"""
Subalgebra Presentation - subalgebra
A = K[f_1, ..., f_k] inside an ambient ring, presented through tag variables
T_1..T_k with deg T_i = deg f_i

Relation ideals and membership use the ideal (T_i - f_i) in the combined ring
K[x, T] under an order that eliminates the ambient variables. The graded
membership test works degree by degree with exact linear algebra and needs
homogeneous generators.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from ..errors import CertificationError
from ..groebner.ideal import Ideal, fresh_name, normal_form
from ..poly_core.linalg import solve
from ..poly_core.orders import MonomialOrder, block, weighted
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import Monomial, RingContext, monomials_of_degree

logger = logging.getLogger(__name__)


@dataclass
class MembershipResult:
    """Answer of a subalgebra membership test; witness is a tag polynomial"""
    found: bool
    witness: Optional[Polynomial] = None

    def __bool__(self) -> bool:
        return self.found


class SubalgebraPresentation:
    """
    Finitely generated subalgebra with its tag ring

    Args:
        generators: f_1..f_k of positive weighted degree, all in one ring
        tag_stem: Stem for the tag names (T gives T1, T2, ...)
        ambient: Ring of the generators, required when there are none
        tag_names: Explicit tag names instead of the numbered stem
    """

    def __init__(
        self,
        generators: Sequence[Polynomial],
        tag_stem: str = "T",
        ambient: Optional[RingContext] = None,
        tag_names: Optional[Sequence[str]] = None,
    ):
        gens = list(generators)
        if ambient is None:
            if not gens:
                raise ValueError("an empty generator list needs an explicit ambient ring")
            ambient = gens[0].ring
        for f in gens:
            f.ring.require_same(ambient)
            if f.degree() <= 0:
                raise ValueError(f"generator {f} must have positive degree")
        self.ambient = ambient
        self.generators: tuple[Polynomial, ...] = tuple(gens)

        if tag_names is not None:
            names = list(tag_names)
            if len(names) != len(gens) or any(ambient.has(n) for n in names):
                raise ValueError("tag names must be fresh and one per generator")
        else:
            names = []
            probe = ambient
            for i in range(len(gens)):
                name = fresh_name(probe, f"{tag_stem}{i + 1}")
                names.append(name)
                probe = probe.extend([name])
        self.tag_names: tuple[str, ...] = tuple(names)
        degrees = [f.degree() for f in gens]
        self.tag_ring = RingContext.create(names, ambient.field, degrees)
        self.combined = ambient.extend(names, degrees)
        self._products: dict[Monomial, Polynomial] = {}

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"SubalgebraPresentation({len(self.generators)} generators in {self.ambient})"

    # ----------------------------------------------------------------- tags

    def tags(self) -> list[Polynomial]:
        return [Polynomial.variable(self.tag_ring, name) for name in self.tag_names]

    def evaluate(self, tag_polynomial: Polynomial) -> Polynomial:
        """Image of a tag polynomial under T_i -> f_i"""
        tag_polynomial.ring.require_same(self.tag_ring)
        images = dict(zip(self.tag_names, self.generators))
        return tag_polynomial.substitute(images, self.ambient)

    @cached_property
    def elimination_order(self) -> MonomialOrder:
        """Block order on K[x, T]: ambient block first, both blocks weighted by degree"""
        n = self.ambient.nvars
        scaled = self.combined.scaled_weights
        if not self.tag_names:
            return weighted(scaled)
        return block(range(n), weighted(scaled[:n]), weighted(scaled[n:]))

    @cached_property
    def graph_ideal(self) -> Ideal:
        """(T_i - f_i) in the combined ring"""
        gens = [
            Polynomial.variable(self.combined, name) - f.rename(self.combined)
            for name, f in zip(self.tag_names, self.generators)
        ]
        return Ideal(self.combined, gens)

    # ------------------------------------------------------------ relations

    @cached_property
    def relation_ideal(self) -> Ideal:
        """Kernel of K[T] -> A, every generator re-checked by substitution"""
        if not self.generators:
            return Ideal(self.tag_ring)
        basis = self.graph_ideal.groebner_basis(self.elimination_order)
        n = self.ambient.nvars
        relations = [
            g.rename(self.tag_ring)
            for g in basis
            if not any(e[i] for e in g.terms for i in range(n))
        ]
        for r in relations:
            if self.evaluate(r):
                raise CertificationError(f"relation {r} does not vanish on the generators")
        logger.info(f"✅ [RELATIONS] {len(relations)} relations among {len(self.generators)} generators")
        return Ideal(self.tag_ring, relations)

    # ----------------------------------------------------------- membership

    def member(self, h: Polynomial) -> MembershipResult:
        """
        Exact subalgebra membership via the graph ideal

        Returns:
            found=True with a tag witness w such that w(f) == h, else found=False
        """
        h.ring.require_same(self.ambient)
        if not self.generators:
            if h.is_constant():
                return MembershipResult(True, Polynomial.constant(self.tag_ring, h.constant_term))
            return MembershipResult(False)
        order = self.elimination_order
        basis = self.graph_ideal.groebner_basis(order)
        reduced = normal_form(h.rename(self.combined), basis, order)
        n = self.ambient.nvars
        if any(e[i] for e in reduced.terms for i in range(n)):
            return MembershipResult(False)
        witness = reduced.rename(self.tag_ring)
        self._certify(witness, h)
        return MembershipResult(True, witness)

    def product(self, exps: Monomial) -> Polynomial:
        """f^exps, memoised by peeling off one factor at a time"""
        cached = self._products.get(exps)
        if cached is not None:
            return cached
        if not any(exps):
            result = Polynomial.constant(self.ambient, 1)
        else:
            i = next(j for j, e in enumerate(exps) if e)
            smaller = list(exps)
            smaller[i] -= 1
            result = self.product(tuple(smaller)) * self.generators[i]
        self._products[exps] = result
        return result

    def tag_monomials(self, degree: Fraction) -> list[Monomial]:
        """Tag monomials of the given weighted degree"""
        scaled = degree * self.tag_ring.weight_scale
        if scaled.denominator != 1:
            return []
        return monomials_of_degree(self.tag_ring.scaled_weights, int(scaled))

    def member_graded(self, h: Polynomial) -> MembershipResult:
        """
        Membership by linear algebra in each homogeneous component of h

        Every generator must be homogeneous. Each component h_d is matched
        against the span of the generator products of degree d.
        """
        h.ring.require_same(self.ambient)
        for f in self.generators:
            if not f.is_homogeneous():
                raise ValueError(f"graded membership needs homogeneous generators, got {f}")
        fld = self.ambient.field
        witness = Polynomial.zero(self.tag_ring)
        for degree, part in h.homogeneous_components().items():
            if degree == 0:
                witness = witness + Polynomial.constant(self.tag_ring, part.constant_term)
                continue
            candidates = self.tag_monomials(degree)
            if not candidates:
                return MembershipResult(False)
            images = [self.product(m) for m in candidates]
            rows_index: dict[Monomial, int] = {}
            for image in images:
                for exps in image.terms:
                    rows_index.setdefault(exps, len(rows_index))
            for exps in part.terms:
                if exps not in rows_index:
                    return MembershipResult(False)
            rows: list[dict[int, object]] = [{} for _ in rows_index]
            for col, image in enumerate(images):
                for exps, coeff in image.terms.items():
                    rows[rows_index[exps]][col] = coeff
            rhs = [fld.zero] * len(rows_index)
            for exps, coeff in part.terms.items():
                rhs[rows_index[exps]] = coeff
            outcome = solve(rows, rhs, len(candidates), fld)
            if not outcome.consistent:
                return MembershipResult(False)
            for col, value in outcome.solution.items():
                witness = witness + Polynomial.monomial(self.tag_ring, candidates[col], value)
        self._certify(witness, h)
        return MembershipResult(True, witness)

    def _certify(self, witness: Polynomial, h: Polynomial) -> None:
        if self.evaluate(witness) != h:
            raise CertificationError(f"membership witness {witness} does not reproduce {h}")


def relation_ideal(presentation: SubalgebraPresentation) -> Ideal:
    return presentation.relation_ideal


def member(h: Polynomial, presentation: SubalgebraPresentation) -> MembershipResult:
    return presentation.member(h)


def member_graded(h: Polynomial, presentation: SubalgebraPresentation) -> MembershipResult:
    return presentation.member_graded(h)
