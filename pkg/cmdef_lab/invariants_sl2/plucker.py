"""
Plucker Invariants - invariants_sl2
Bracket generators of SL2 and G_a vector invariants, the Plucker presentation
and the hsop f_3..f_{2n-1}

With n copies <X_i,Y_i>, S(V)^SL2 is generated by the brackets
g_ij = X_i Y_j - X_j Y_i in any characteristic, and the relations among them
are the quadratic Plucker relations. For G_a the coordinates X_i are
invariant as well.
"""

import logging
from itertools import combinations
from typing import Mapping, Optional

from ..actions.group_action import GroupKind
from ..errors import CertificationError, NotInvariantError
from ..groebner.dimension import dimension
from ..groebner.engine import GroebnerEngine, is_groebner_basis
from ..groebner.ideal import Ideal
from ..poly_core.field import CoefficientField
from ..poly_core.orders import graded_lex
from ..poly_core.polynomial import Polynomial, polynomial_sum
from ..poly_core.ring import RingContext
from ..subalgebra.presentation import SubalgebraPresentation
from .vector_config import VectorInvariantConfig

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


def bracket(ring: RingContext, i, j) -> Polynomial:
    """X_i Y_j - X_j Y_i"""
    v = {n: Polynomial.variable(ring, n) for n in (f"X{i}", f"Y{i}", f"X{j}", f"Y{j}")}
    return v[f"X{i}"] * v[f"Y{j}"] - v[f"X{j}"] * v[f"Y{i}"]


def bracket_tag(n: int, i: int, j: int) -> str:
    return f"G{i}{j}" if n < 10 else f"G{i}_{j}"


def _copies_ring(n: int, field: Optional[CoefficientField]) -> RingContext:
    cfg = VectorInvariantConfig(group=GroupKind.SL2, n_copies=n, field_label=(field or CoefficientField.rationals()).label)
    return cfg.ring()


def plucker_generators(cfg: VectorInvariantConfig) -> list[Polynomial]:
    """
    Generators of S(V)^G for untwisted copies

    SL2 gives the brackets g_ij (i < j), G_a adds the X_i in front. Each
    generator is checked for invariance.
    """
    if cfg.twisted:
        raise ValueError("bracket generators are defined for untwisted copies only")
    ring = cfg.ring()
    action = cfg.action()
    gens: list[Polynomial] = []
    if cfg.group is GroupKind.GA:
        gens += [Polynomial.variable(ring, f"X{i}") for i in cfg.indices]
    gens += [bracket(ring, i, j) for i, j in combinations(cfg.indices, 2)]
    for g in gens:
        if not action.is_invariant(g):
            raise NotInvariantError(f"generator {g} is not {cfg.group.value}-invariant")
    logger.debug(f"🔧 [PLUCKER] {len(gens)} {cfg.group.value} generators on {cfg.n_copies} copies")
    return gens


def plucker_presentation(n: int, field: Optional[CoefficientField] = None) -> SubalgebraPresentation:
    """The algebra of brackets g_ij with tags G_ij"""
    ring = _copies_ring(n, field)
    pairs = list(combinations(range(1, n + 1), 2))
    gens = [bracket(ring, i, j) for i, j in pairs]
    names = [bracket_tag(n, i, j) for i, j in pairs]
    return SubalgebraPresentation(gens, ambient=ring, tag_names=names)


def plucker_relations(presentation: SubalgebraPresentation, n: int) -> list[Polynomial]:
    """G_ij G_kl - G_ik G_jl + G_il G_jk for i < j < k < l, each checked to vanish"""
    ring = presentation.tag_ring
    tag = {name: Polynomial.variable(ring, name) for name in presentation.tag_names}

    def g(a: int, b: int) -> Polynomial:
        return tag[bracket_tag(n, a, b)]

    relations = []
    for i, j, k, l in combinations(range(1, n + 1), 4):
        relations.append(g(i, j) * g(k, l) - g(i, k) * g(j, l) + g(i, l) * g(j, k))
    for r in relations:
        if presentation.evaluate(r):
            raise CertificationError(f"Plucker relation {r} does not vanish")
    return relations


def plucker_ideal(presentation: SubalgebraPresentation, n: int) -> Ideal:
    return Ideal(presentation.tag_ring, plucker_relations(presentation, n))


# -------------------------------------------------------------------- hsop


def _exponent(exponents: Optional[Mapping[Pair, int]], i: int, j: int) -> int:
    e = 1 if exponents is None else exponents.get((i, j), 1)
    if e < 1:
        raise ValueError(f"exponent for ({i},{j}) must be at least 1")
    return e


def hsop_terms(n: int, exponents: Optional[Mapping[Pair, int]] = None) -> list[list[tuple[int, int, int]]]:
    """For f_3..f_{2n-1}: the (i, j, e) with i + j = m, i < j <= n"""
    if n < 2:
        raise ValueError("the hsop needs at least two copies")
    return [
        [(i, m - i, _exponent(exponents, i, m - i)) for i in range(1, n + 1) if i < m - i <= n]
        for m in range(3, 2 * n)
    ]


def hsop_builder(
    n: int,
    exponents: Optional[Mapping[Pair, int]] = None,
    field: Optional[CoefficientField] = None,
    ring: Optional[RingContext] = None,
) -> list[Polynomial]:
    """
    f_m = Σ_{i+j=m, i<j<=n} g_ij^(e_ij) for m = 3..2n-1

    Args:
        n: Number of copies (at least 2)
        exponents: e_ij per pair, 1 when missing
        field: Coefficient field when no ring is given (Q by default)
        ring: Ring holding X1,Y1..Xn,Yn
    """
    ring = ring or _copies_ring(n, field)
    return [
        polynomial_sum(ring, (bracket(ring, i, j) ** e for i, j, e in terms))
        for terms in hsop_terms(n, exponents)
    ]


def hsop_tags(presentation: SubalgebraPresentation, n: int, exponents: Optional[Mapping[Pair, int]] = None) -> list[Polynomial]:
    """The same hsop written in the Plucker tags"""
    ring = presentation.tag_ring
    return [
        polynomial_sum(ring, (Polynomial.variable(ring, bracket_tag(n, i, j)) ** e for i, j, e in terms))
        for terms in hsop_terms(n, exponents)
    ]


def certify_hsop(n: int, exponents: Optional[Mapping[Pair, int]] = None, field: Optional[CoefficientField] = None) -> bool:
    """dim K[G]/(Plucker + (f_3..f_{2n-1})) == 0"""
    presentation = plucker_presentation(n, field)
    ideal = plucker_ideal(presentation, n).with_generators(hsop_tags(presentation, n, exponents))
    dim = dimension(ideal)
    logger.info(f"📐 [HSOP] n={n}: dimension modulo Plucker + hsop is {dim}")
    return dim == 0


def chain_is_groebner(n: int, field: Optional[CoefficientField] = None) -> bool:
    """
    The chain g_12, g_23, ..., g_{n-1,n} is a Groebner basis under graded lex
    with X1 > Y1 > X2 > Y2 > ...
    """
    ring = _copies_ring(n, field)
    chain = [bracket(ring, i, i + 1) for i in range(1, n)]
    engine = GroebnerEngine(ring, graded_lex())
    return is_groebner_basis(engine, [{(0, e): c for e, c in g.terms.items()} for g in chain])


def chain_height(n: int, field: Optional[CoefficientField] = None) -> int:
    ring = _copies_ring(n, field)
    return Ideal(ring, [bracket(ring, i, i + 1) for i in range(1, n)]).height()